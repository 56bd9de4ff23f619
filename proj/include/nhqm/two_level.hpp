#ifndef NHQM_TWO_LEVEL_HPP
#define NHQM_TWO_LEVEL_HPP

#include <variant>

#include "nhqm/linalg.hpp"

namespace nhqm {

using Vector2c = Eigen::Vector2cd;
using Matrix2c = Eigen::Matrix2cd;

enum class Regime { RealSpectrum, ComplexSpectrum, Exceptional };

/// The mu-parameterized 2x2 model
///   H = [[1-i, mu], [mu, 1+i]].
/// mu^2 > 1 gives a real spectrum, mu^2 < 1 a complex-conjugate pair, and
/// mu^2 = 1 (within 1e-12) the exceptional point where the matrix is
/// defective.
struct TwoLevelModel {
  double mu = 0.0;
  Matrix2c hamiltonian;
  Regime regime = Regime::RealSpectrum;
};

TwoLevelModel make_two_level(double mu);

/// Closed-form eigenpairs away from the exceptional point.
/// lambda1 = 1 + sqrt(mu^2-1) on the principal branch (Im sqrt >= 0),
/// u_k = (mu, lambda_k - 1 + i)^T normalized.
struct EigenSystem2 {
  Complex lambda1, lambda2;
  Vector2c u1, u2;
};

/// At mu^2 = 1 there is a single eigenvector; u2 is the auxiliary vector,
/// the eigenvector of H^dagger for the shared eigenvalue.
struct ExceptionalReport {
  Complex lambda;
  Vector2c u1;  // the only eigenvector
  Vector2c u2;  // orthogonal auxiliary vector
};

std::variant<EigenSystem2, ExceptionalReport> eigenpairs(const TwoLevelModel& model);

/// Propagates psi0 under i dpsi/dt = H psi. Delegates to defective_evolve
/// at the exceptional point; within 1e-8 of it the eigenvector expansion is
/// ill-conditioned and the smooth fixed-basis system is used instead.
Vector2c evolve(const TwoLevelModel& model, const Vector2c& psi0, double t);

/// Generalized dynamics for the defective case mu = sign * 1. In the basis
/// u1 = (1, sign*i)^T, u2 = (1, -sign*i)^T the coefficients are
///   a(t) = (K2 - 2 K1 t) exp(-it),  b(t) = K1 exp(-it)
/// with K2 = a(0), K1 = b(0).
Vector2c defective_evolve(const Vector2c& psi0, double t, int sign = 1);

struct GeneralizedSolution {
  Complex K1, K2;
  Complex a(double t) const;
  Complex b(double t) const;
};

GeneralizedSolution defective_coefficients(const Vector2c& psi0, int sign = 1);

/// The reciprocal exponential pair (r, s) of the time-dependent metric,
/// normalized to r(tau) = s(tau) = 1. In the complex regime
/// r = exp(kappa (t - tau)) with kappa = sqrt(1 - mu^2); for a real
/// spectrum r = s = 1. Throws ExceptionalInput at the exceptional point.
struct MetricFactors {
  double r = 1.0, s = 1.0;
};

MetricFactors metric_factors(const TwoLevelModel& model, double tau, double t);

/// eta^-1 h eta - i eta^-1 (d eta/dt): diag(Re lambda1, Re lambda2) in the
/// complex regime, diag(lambda1, lambda2) for a real spectrum.
Matrix2c transformed_hamiltonian(const TwoLevelModel& model, double tau, double t);

/// (phi1|phi2) = <phi1 | eta^dagger eta phi2>
///             = r^2 conj(phi1_1) phi2_1 + s^2 conj(phi1_2) phi2_2.
Complex metric_inner_product(const Vector2c& phi1, const Vector2c& phi2,
                             const TwoLevelModel& model, double tau, double t);

/// Coefficient matrix M(mu) of the fixed-basis split: for
/// psi = a (1,i)^T + b (1,-i)^T, i d/dt (a,b)^T = M(mu) (a,b)^T.
/// M is smooth through mu = 1 and its eigenvalues are 1 +- sqrt(mu^2-1).
Matrix2c fixed_basis_system(double mu);

/// Expansion of psi in the fixed basis (1,i)^T, (1,-i)^T (sign=+1) or
/// (1,-i)^T, (1,i)^T (sign=-1).
Vector2c fixed_basis_coefficients(const Vector2c& psi, int sign = 1);

}  // namespace nhqm

#endif
