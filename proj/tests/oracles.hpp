// Independent numerical oracles for the test suites. These share no code
// with the library implementations they check: time propagation is done
// with an adaptive RK4 on the raw Schrodinger system and integrals with
// adaptive Simpson quadrature.
#ifndef NHQM_TEST_ORACLES_HPP
#define NHQM_TEST_ORACLES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

using Complex = std::complex<double>;

// Adaptive RK4 (step doubling) on i dpsi/dt = H psi.
inline Eigen::VectorXcd rk4_schrodinger(const Eigen::MatrixXcd& h, Eigen::VectorXcd psi,
                                        double t_end, double tol = 1e-11) {
  const Complex minus_i(0.0, -1.0);
  auto step = [&](const Eigen::VectorXcd& y, double dt) {
    const Eigen::VectorXcd k1 = minus_i * (h * y);
    const Eigen::VectorXcd k2 = minus_i * (h * (y + 0.5 * dt * k1));
    const Eigen::VectorXcd k3 = minus_i * (h * (y + 0.5 * dt * k2));
    const Eigen::VectorXcd k4 = minus_i * (h * (y + dt * k3));
    return (y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)).eval();
  };
  double t = 0.0;
  double dt = std::min(1e-3, t_end > 0 ? t_end : 1e-3);
  while (t < t_end) {
    dt = std::min(dt, t_end - t);
    const Eigen::VectorXcd one = step(psi, dt);
    const Eigen::VectorXcd two = step(step(psi, 0.5 * dt), 0.5 * dt);
    const double err = (one - two).norm() / std::max(1.0, two.norm());
    if (err > tol && dt > 1e-13) {
      dt *= 0.5;
      continue;
    }
    psi = two;
    t += dt;
    if (err < tol / 64.0) dt *= 2.0;
  }
  return psi;
}

// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                                   double b, double fa, double fm, double fb, double whole,
                                   double tol, int depth, int force) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  // `force` levels of mandatory refinement guard against oscillatory
  // integrands whose zeros alias onto the dyadic sample grid.
  if (depth <= 0 || (force <= 0 && std::abs(left + right - whole) < 15.0 * tol)) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, force - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, force - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, simpson(f, a, b, fa, fm, fb), tol, 40, 6);
}

}  // namespace oracles

#endif
