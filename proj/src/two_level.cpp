#include "nhqm/two_level.hpp"

#include <cmath>

namespace nhqm {

namespace {

constexpr double kExceptionalTol = 1e-12;
constexpr double kIllConditionedTol = 1e-8;
const Complex kI(0.0, 1.0);

// sqrt(mu^2 - 1) on the principal branch (Im >= 0 for mu^2 < 1).
Complex branch_root(double mu) {
  return std::sqrt(Complex(mu * mu - 1.0, 0.0));
}

Complex sinc(Complex z) {
  if (std::abs(z) < 1e-4) {
    Complex z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

}  // namespace

TwoLevelModel make_two_level(double mu) {
  TwoLevelModel model;
  model.mu = mu;
  model.hamiltonian << Complex(1.0, -1.0), Complex(mu, 0.0),
                       Complex(mu, 0.0), Complex(1.0, 1.0);
  const double gap = mu * mu - 1.0;
  if (std::abs(gap) <= kExceptionalTol) {
    model.regime = Regime::Exceptional;
  } else if (gap > 0.0) {
    model.regime = Regime::RealSpectrum;
  } else {
    model.regime = Regime::ComplexSpectrum;
  }
  return model;
}

std::variant<EigenSystem2, ExceptionalReport> eigenpairs(const TwoLevelModel& model) {
  if (model.regime == Regime::Exceptional) {
    ExceptionalReport rep;
    const double sign = model.mu > 0.0 ? 1.0 : -1.0;
    rep.lambda = Complex(1.0, 0.0);
    rep.u1 = Vector2c(Complex(1.0, 0.0), sign * kI) / std::sqrt(2.0);
    rep.u2 = Vector2c(Complex(1.0, 0.0), -sign * kI) / std::sqrt(2.0);
    return rep;
  }
  EigenSystem2 sys;
  const Complex root = branch_root(model.mu);
  sys.lambda1 = 1.0 + root;
  sys.lambda2 = 1.0 - root;
  // (mu, lambda-1+i) from the first row of (H - lambda); falls back to the
  // second-row form (1+i-lambda, -mu) where the first degenerates (mu -> 0
  // kills one branch).
  const auto eigenvector = [&](Complex lambda) {
    const Vector2c first(Complex(model.mu, 0.0), lambda - 1.0 + kI);
    const Vector2c second(1.0 + kI - lambda, Complex(-model.mu, 0.0));
    return (first.norm() >= second.norm() ? first : second).normalized().eval();
  };
  sys.u1 = eigenvector(sys.lambda1);
  sys.u2 = eigenvector(sys.lambda2);
  return sys;
}

Complex GeneralizedSolution::a(double t) const {
  return (K2 - 2.0 * K1 * t) * std::exp(-kI * t);
}

Complex GeneralizedSolution::b(double t) const {
  return K1 * std::exp(-kI * t);
}

Vector2c fixed_basis_coefficients(const Vector2c& psi, int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  // psi = a (1, s*i)^T + b (1, -s*i)^T
  const Complex a = 0.5 * (psi[0] - s * kI * psi[1]);
  const Complex b = 0.5 * (psi[0] + s * kI * psi[1]);
  return Vector2c(a, b);
}

GeneralizedSolution defective_coefficients(const Vector2c& psi0, int sign) {
  const Vector2c ab = fixed_basis_coefficients(psi0, sign);
  GeneralizedSolution sol;
  sol.K2 = ab[0];
  sol.K1 = ab[1];
  return sol;
}

Vector2c defective_evolve(const Vector2c& psi0, double t, int sign) {
  if (t < 0.0) throw std::invalid_argument("t must be non-negative");
  const double s = sign >= 0 ? 1.0 : -1.0;
  const GeneralizedSolution sol = defective_coefficients(psi0, sign);
  const Vector2c u1(Complex(1.0, 0.0), s * kI);
  const Vector2c u2(Complex(1.0, 0.0), -s * kI);
  return sol.a(t) * u1 + sol.b(t) * u2;
}

namespace {

// Propagation of the fixed-basis coefficients under M(mu) = I + K with
// K^2 = (mu^2 - 1) I:
//   exp(-i M t) = exp(-it) [cos(dt) I - i (sin(dt)/d) K],  d = sqrt(mu^2-1).
// Smooth through the exceptional point.
Vector2c evolve_fixed_basis(double mu, const Vector2c& psi0, double t) {
  const Vector2c ab0 = fixed_basis_coefficients(psi0, 1);
  const Complex delta = branch_root(mu);
  const Complex c = std::cos(delta * t);
  const Complex sc = t * sinc(delta * t);
  Matrix2c k;
  k << Complex(0.0, 0.0), -kI * (mu + 1.0),
       kI * (mu - 1.0), Complex(0.0, 0.0);
  const Vector2c ab = std::exp(-kI * t) * (c * ab0 - kI * sc * (k * ab0));
  const Vector2c u1(Complex(1.0, 0.0), kI);
  const Vector2c u2(Complex(1.0, 0.0), -kI);
  return ab[0] * u1 + ab[1] * u2;
}

}  // namespace

Vector2c evolve(const TwoLevelModel& model, const Vector2c& psi0, double t) {
  if (t < 0.0) throw std::invalid_argument("t must be non-negative");
  if (model.regime == Regime::Exceptional) {
    return defective_evolve(psi0, t, model.mu > 0.0 ? 1 : -1);
  }
  if (std::abs(model.mu * model.mu - 1.0) < kIllConditionedTol) {
    // Eigenvector expansion is ill-conditioned this close to the
    // exceptional point; the fixed-basis system stays smooth.
    return evolve_fixed_basis(model.mu, psi0, t);
  }
  const auto sys = std::get<EigenSystem2>(eigenpairs(model));
  ComplexMatrix u(2, 2);
  u.col(0) = sys.u1;
  u.col(1) = sys.u2;
  const LinearSolveResult expansion = solve_linear(u, psi0);
  if (expansion.condition_estimate > 1e8) {
    return evolve_fixed_basis(model.mu, psi0, t);
  }
  return expansion.x[0] * std::exp(-kI * sys.lambda1 * t) * sys.u1 +
         expansion.x[1] * std::exp(-kI * sys.lambda2 * t) * sys.u2;
}

MetricFactors metric_factors(const TwoLevelModel& model, double tau, double t) {
  if (tau <= 0.0) throw std::invalid_argument("tau must be positive");
  if (t < 0.0) throw std::invalid_argument("t must be non-negative");
  if (model.regime == Regime::Exceptional) {
    throw ExceptionalInput("metric transform targets complex pairs only");
  }
  MetricFactors f;
  if (model.regime == Regime::ComplexSpectrum) {
    const double kappa = std::sqrt(1.0 - model.mu * model.mu);
    f.r = std::exp(kappa * (t - tau));
    f.s = std::exp(-kappa * (t - tau));
  }
  return f;
}

Matrix2c transformed_hamiltonian(const TwoLevelModel& model, double tau, double t) {
  metric_factors(model, tau, t);  // validates and rejects the exceptional case
  Matrix2c h1 = Matrix2c::Zero();
  if (model.regime == Regime::ComplexSpectrum) {
    // diag(Re lambda1, Re lambda2); the metric removes the imaginary parts.
    h1(0, 0) = Complex(1.0, 0.0);
    h1(1, 1) = Complex(1.0, 0.0);
  } else {
    const Complex root = branch_root(model.mu);
    h1(0, 0) = 1.0 + root;
    h1(1, 1) = 1.0 - root;
  }
  return h1;
}

Complex metric_inner_product(const Vector2c& phi1, const Vector2c& phi2,
                             const TwoLevelModel& model, double tau, double t) {
  const MetricFactors f = metric_factors(model, tau, t);
  return f.r * f.r * std::conj(phi1[0]) * phi2[0] +
         f.s * f.s * std::conj(phi1[1]) * phi2[1];
}

Matrix2c fixed_basis_system(double mu) {
  Matrix2c m;
  m << Complex(1.0, 0.0), -kI * (mu + 1.0),
       kI * (mu - 1.0), Complex(1.0, 0.0);
  return m;
}

}  // namespace nhqm
