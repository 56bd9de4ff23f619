#include "nhqm/confined.hpp"

#include <cmath>
#include <numbers>

namespace nhqm {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(m pi / 2) for integer m, exact.
double half_turn_sign(long long m) {
  switch (((m % 4) + 4) % 4) {
    case 1: return 1.0;
    case 3: return -1.0;
    default: return 0.0;
  }
}

}  // namespace

double basis_eval(int k, double T, double x) {
  if (k < 1) throw std::invalid_argument("basis index must be positive");
  if (T <= 0.0) throw std::invalid_argument("box length must be positive");
  if (std::abs(x) > T / 2.0 + 1e-12 * T) {
    throw DomainError("x outside the box (-T/2, T/2)");
  }
  const double arg = k * kPi * x / T;
  return (k % 2 == 1) ? std::cos(arg) : std::sin(arg);
}

double coupling_integral(int j, int k, double T) {
  if (j < 1 || k < 1) throw std::invalid_argument("indices must be positive");
  if (T <= 0.0) throw std::invalid_argument("box length must be positive");
  if (j % 2 == k % 2) {
    throw ParityError("x-coupling vanishes for equal-parity indices");
  }
  if (j % 2 == 0) std::swap(j, k);  // integrand is symmetric in (j, k)
  const long long mp = static_cast<long long>(k) + j;
  const long long mm = static_cast<long long>(k) - j;
  return (T / (kPi * kPi)) * (half_turn_sign(mp) / static_cast<double>(mp * mp) +
                              half_turn_sign(mm) / static_cast<double>(mm * mm));
}

ConfinedModel assemble(double T, double mu, int N, Coupling coupling) {
  if (T <= 0.0) throw std::invalid_argument("box length must be positive");
  if (N < 1) throw std::invalid_argument("N must be at least 1");

  ConfinedModel model;
  model.T = T;
  model.mu = mu;
  model.N = N;
  model.coupling = coupling;

  const int dim = 2 * N;
  model.matrix = ComplexMatrix::Zero(dim, dim);
  for (int k = 1; k <= dim; ++k) {
    model.matrix(k - 1, k - 1) = Complex(k * static_cast<double>(k) * kPi * kPi / (T * T), 0.0);
  }
  // Off-diagonals carry the overlap normalization 1/<w|w> = 2.
  for (int j = 1; j <= dim; j += 2) {
    for (int k = 2; k <= dim; k += 2) {
      if (coupling == Coupling::NearestNeighbor && std::abs(k - j) != 1) continue;
      const Complex element(0.0, 2.0 * mu * coupling_integral(j, k, T));
      model.matrix(j - 1, k - 1) += element;
      model.matrix(k - 1, j - 1) += element;
    }
  }
  return model;
}

int ClassifiedSpectrum::pair_count() const {
  int count = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].label == StateLabel::PairMember &&
        entries[i].partner > static_cast<int>(i)) {
      ++count;
    }
  }
  return count;
}

int ClassifiedSpectrum::pair_count_lowest(int k) const {
  int count = 0;
  const int limit = std::min<int>(k, static_cast<int>(entries.size()));
  for (int i = 0; i < limit; ++i) {
    if (entries[i].label == StateLabel::PairMember &&
        entries[i].partner > i && entries[i].partner < limit) {
      ++count;
    }
  }
  return count;
}

ClassifiedSpectrum spectrum(const ConfinedModel& model, double tol_im) {
  const SpectralDecomposition d = eig(model.matrix);
  const double frob = model.matrix.norm();
  if (tol_im <= 0.0) tol_im = 1e-9 * frob;
  const double pair_window = 1e-6 * frob;

  const int dim = static_cast<int>(d.eigenvalues.size());
  ClassifiedSpectrum cs;
  cs.entries.resize(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    cs.entries[static_cast<size_t>(i)].value = d.eigenvalues[i];
    // Diagonal is k^2 pi^2 / T^2, already ascending.
    cs.entries[static_cast<size_t>(i)].diagonal_deviation =
        d.eigenvalues[i] - model.matrix(i, i);
  }

  // Greedy nearest-conjugate matching among the non-real eigenvalues.
  for (int i = 0; i < dim; ++i) {
    auto& entry = cs.entries[static_cast<size_t>(i)];
    if (std::abs(entry.value.imag()) <= tol_im || entry.partner >= 0) continue;
    int best = -1;
    double best_dist = pair_window;
    for (int j = 0; j < dim; ++j) {
      if (j == i || cs.entries[static_cast<size_t>(j)].partner >= 0) continue;
      if (std::abs(cs.entries[static_cast<size_t>(j)].value.imag()) <= tol_im) continue;
      const double dist = std::abs(std::conj(entry.value) - cs.entries[static_cast<size_t>(j)].value);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best >= 0) {
      entry.label = StateLabel::PairMember;
      entry.partner = best;
      cs.entries[static_cast<size_t>(best)].label = StateLabel::PairMember;
      cs.entries[static_cast<size_t>(best)].partner = i;
    } else {
      cs.warnings.push_back("eigenvalue " + std::to_string(i) +
                            " has |Im| above tolerance but no conjugate partner");
    }
  }
  return cs;
}

SweepResult sweep(const std::vector<double>& T_grid, const std::vector<double>& mu_grid,
                  const std::vector<int>& N_grid, Coupling coupling) {
  if (T_grid.empty() || mu_grid.empty() || N_grid.empty()) {
    throw std::invalid_argument("sweep grids must be non-empty");
  }
  auto check_monotone = [](auto const& grid) {
    for (size_t i = 1; i < grid.size(); ++i) {
      if (!(grid[i] > grid[i - 1])) {
        throw std::invalid_argument("sweep grids must be strictly increasing");
      }
    }
  };
  check_monotone(T_grid);
  check_monotone(mu_grid);
  check_monotone(N_grid);

  SweepResult result;
  for (double T : T_grid) {
    for (double mu : mu_grid) {
      for (int N : N_grid) {
        SweepPoint point;
        point.T = T;
        point.mu = mu;
        point.N = N;
        try {
          point.result = spectrum(assemble(T, mu, N, coupling));
        } catch (const std::exception& e) {
          point.error = e.what();
        }
        result.points.push_back(std::move(point));
      }
    }
  }
  return result;
}

namespace {

ComplexVector rk4_step(const ComplexMatrix& h, const ComplexVector& c, double dt) {
  const Complex minus_i(0.0, -1.0);
  const ComplexVector k1 = minus_i * (h * c);
  const ComplexVector k2 = minus_i * (h * (c + 0.5 * dt * k1));
  const ComplexVector k3 = minus_i * (h * (c + 0.5 * dt * k2));
  const ComplexVector k4 = minus_i * (h * (c + dt * k3));
  return c + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Step-doubling adaptive RK4 on i dc/dt = h c.
ComplexVector rk4_adaptive(const ComplexMatrix& h, ComplexVector c, double t_end,
                           double tol = 1e-10) {
  double t = 0.0;
  double dt = t_end > 0.0 ? std::min(0.01, t_end) : 0.0;
  while (t < t_end) {
    dt = std::min(dt, t_end - t);
    const ComplexVector full = rk4_step(h, c, dt);
    const ComplexVector half = rk4_step(h, rk4_step(h, c, 0.5 * dt), 0.5 * dt);
    const double err = (full - half).norm() / std::max(1.0, half.norm());
    if (err > tol && dt > 1e-12) {
      dt *= 0.5;
      continue;
    }
    c = half;
    t += dt;
    if (err < tol / 32.0) dt *= 2.0;
  }
  return c;
}

}  // namespace

EvolveResult evolve_confined(const ConfinedModel& model, const ComplexVector& coeffs0,
                             double t) {
  if (t < 0.0) throw std::invalid_argument("t must be non-negative");
  if (coeffs0.size() != model.matrix.rows()) {
    throw std::invalid_argument("coefficient vector length must be 2N");
  }
  EvolveResult result;
  if (t == 0.0) {
    result.coeffs = coeffs0;
    return result;
  }
  const SpectralDecomposition d = eig(model.matrix);
  try {
    const LinearSolveResult expansion = solve_linear(d.eigenvectors, coeffs0);
    if (expansion.condition_estimate > 1e8) {
      throw SingularMatrix("eigenvector matrix too ill-conditioned");
    }
    ComplexVector phases(d.eigenvalues.size());
    const Complex minus_i(0.0, -1.0);
    for (Eigen::Index k = 0; k < d.eigenvalues.size(); ++k) {
      phases[k] = std::exp(minus_i * d.eigenvalues[k] * t) * expansion.x[k];
    }
    result.coeffs = d.eigenvectors * phases;
  } catch (const SingularMatrix&) {
    result.coeffs = rk4_adaptive(model.matrix, coeffs0, t);
    result.used_rk4_fallback = true;
  }
  return result;
}

Complex wavefunction_eval(const ConfinedModel& model, const ComplexVector& coeffs, double x) {
  if (coeffs.size() != model.matrix.rows()) {
    throw std::invalid_argument("coefficient vector length must be 2N");
  }
  Complex value(0.0, 0.0);
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    value += coeffs[k] * basis_eval(static_cast<int>(k) + 1, model.T, x);
  }
  return value;
}

}  // namespace nhqm
