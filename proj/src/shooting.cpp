#include "nhqm/shooting.hpp"

#include <cmath>

namespace nhqm {

namespace {

struct State {
  Complex psi;
  Complex dpsi;
};

// Fixed-step RK4 on psi'' = (i mu x - E) psi from x0 to x1 (either
// direction), renormalizing when the solution magnitude grows too large.
// The returned state is the renormalized one; the mismatch is homogeneous
// in each side's scale.
State integrate(double x0, double x1, int steps, double mu, Complex E) {
  const Complex i_mu(0.0, mu);
  auto rhs = [&](double x, const State& s) {
    return State{s.dpsi, (i_mu * x - E) * s.psi};
  };
  State s{Complex(0.0, 0.0), Complex(1.0, 0.0)};
  const double h = (x1 - x0) / steps;
  double x = x0;
  for (int n = 0; n < steps; ++n) {
    const State k1 = rhs(x, s);
    const State k2 = rhs(x + 0.5 * h, {s.psi + 0.5 * h * k1.psi, s.dpsi + 0.5 * h * k1.dpsi});
    const State k3 = rhs(x + 0.5 * h, {s.psi + 0.5 * h * k2.psi, s.dpsi + 0.5 * h * k2.dpsi});
    const State k4 = rhs(x + h, {s.psi + h * k3.psi, s.dpsi + h * k3.dpsi});
    s.psi += (h / 6.0) * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi);
    s.dpsi += (h / 6.0) * (k1.dpsi + 2.0 * k2.dpsi + 2.0 * k3.dpsi + k4.dpsi);
    x += h;
    const double mag = std::max(std::abs(s.psi), std::abs(s.dpsi));
    if (!std::isfinite(mag)) {
      throw OverflowGuard("shooting solution overflowed despite renormalization");
    }
    if (mag > 1e150) {
      s.psi /= mag;
      s.dpsi /= mag;
    }
  }
  return s;
}

}  // namespace

double ShootingProblem::effective_step() const {
  const double h = step > 0.0 ? step : T / 4000.0;
  if (h > T / 100.0) {
    throw std::invalid_argument("integration step must be at most T/100");
  }
  return h;
}

Mismatch mismatch(const ShootingProblem& problem) {
  if (problem.T <= 0.0) throw std::invalid_argument("box length must be positive");
  const double h = problem.effective_step();
  const int steps = std::max(50, static_cast<int>(std::ceil(problem.T / 2.0 / h)));

  const State left = integrate(-problem.T / 2.0, 0.0, steps, problem.mu, problem.E);
  const State right = integrate(problem.T / 2.0, 0.0, steps, problem.mu, problem.E);

  Mismatch m;
  m.wronskian = left.psi * right.dpsi - left.dpsi * right.psi;
  // Magnitude scale of the two solution states; unlike the Wronskian terms
  // themselves it does not collapse at a root.
  m.scale = (std::abs(left.psi) + std::abs(left.dpsi)) *
            (std::abs(right.psi) + std::abs(right.dpsi));
  return m;
}

Complex refine(const ShootingProblem& problem, Complex E0, int max_iter) {
  ShootingProblem p = problem;
  auto eval = [&](Complex E) {
    p.E = E;
    return mismatch(p);
  };

  Complex e_prev = E0;
  Mismatch m_prev = eval(e_prev);
  if (std::abs(m_prev.wronskian) < 1e-10 * m_prev.scale) return e_prev;

  Complex e_cur = E0 + Complex(1e-6 * (1.0 + std::abs(E0)), 0.0);
  Mismatch m_cur = eval(e_cur);

  for (int iter = 0; iter < max_iter; ++iter) {
    if (std::abs(m_cur.wronskian) < 1e-10 * m_cur.scale) return e_cur;
    const Complex df = m_cur.wronskian - m_prev.wronskian;
    if (std::abs(df) == 0.0) {
      throw NonConvergence("secant iteration stalled (flat mismatch)");
    }
    const Complex e_next = e_cur - m_cur.wronskian * (e_cur - e_prev) / df;
    e_prev = e_cur;
    m_prev = m_cur;
    e_cur = e_next;
    m_cur = eval(e_cur);
  }
  if (std::abs(m_cur.wronskian) < 1e-10 * m_cur.scale) return e_cur;
  throw NonConvergence("shooting refinement did not converge; spurious eigenvalue or too-coarse step");
}

}  // namespace nhqm
