#ifndef NHQM_LINALG_HPP
#define NHQM_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "nhqm/errors.hpp"

namespace nhqm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Full spectrum of a dense complex matrix.
///
/// Eigenvalues are sorted by ascending real part, ties broken by ascending
/// imaginary part. Eigenvectors are unit 2-norm with the first nonzero
/// component rotated real-positive. residuals[k] = ||M v_k - lambda_k v_k||.
struct SpectralDecomposition {
  ComplexVector eigenvalues;
  ComplexMatrix eigenvectors;  // columns, same order as eigenvalues
  Eigen::VectorXd residuals;
};

/// Result of a linear solve together with a condition-number estimate.
struct LinearSolveResult {
  ComplexVector x;
  double condition_estimate = 0.0;
};

// Residual contract: residuals[k] <= residual_tolerance(M) for every k.
double residual_tolerance(const ComplexMatrix& m);

/// Eigendecomposition of a general (non-Hermitian) complex matrix.
/// Throws NonConvergence if the underlying QR iteration fails, and
/// std::invalid_argument for empty or non-finite input.
SpectralDecomposition eig(const ComplexMatrix& m);

/// Solves M x = rhs. Throws SingularMatrix when a pivot magnitude falls
/// below 1e-14 * ||M||_F, which callers near an exceptional point use to
/// detect eigenvector coalescence.
LinearSolveResult solve_linear(const ComplexMatrix& m, const ComplexVector& rhs);

void check_finite_square(const ComplexMatrix& m);

}  // namespace nhqm

#endif
