#include "nhqm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace nhqm {

double residual_tolerance(const ComplexMatrix& m) {
  return 1e-10 * m.norm();
}

void check_finite_square(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument("matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("matrix entries must be finite");
  }
}

namespace {

// Rotate the first nonzero component real-positive and normalize.
void fix_phase(Eigen::Ref<ComplexVector> v) {
  v.normalize();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v[i]);
    if (a > 1e-14) {
      v *= std::conj(v[i]) / a;
      break;
    }
  }
}

}  // namespace

SpectralDecomposition eig(const ComplexMatrix& m) {
  check_finite_square(m);

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw NonConvergence("QR iteration did not converge");
  }

  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const auto& vals = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (vals[a].real() != vals[b].real()) return vals[a].real() < vals[b].real();
    return vals[a].imag() < vals[b].imag();
  });

  SpectralDecomposition d;
  d.eigenvalues.resize(n);
  d.eigenvectors.resize(n, n);
  d.residuals.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    d.eigenvalues[k] = vals[order[static_cast<size_t>(k)]];
    d.eigenvectors.col(k) = solver.eigenvectors().col(order[static_cast<size_t>(k)]);
    fix_phase(d.eigenvectors.col(k));
    d.residuals[k] = (m * d.eigenvectors.col(k) - d.eigenvalues[k] * d.eigenvectors.col(k)).norm();
  }

  const double tol = residual_tolerance(m);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!(d.residuals[k] <= tol)) {
      throw NonConvergence("eigenpair residual " + std::to_string(d.residuals[k]) +
                           " exceeds contract " + std::to_string(tol));
    }
  }
  return d;
}

LinearSolveResult solve_linear(const ComplexMatrix& m, const ComplexVector& rhs) {
  check_finite_square(m);
  if (rhs.size() != m.rows()) {
    throw std::invalid_argument("rhs length must equal matrix dimension");
  }

  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(m);
  const auto& r = qr.matrixQR();
  double pivot_min = std::numeric_limits<double>::infinity();
  double pivot_max = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double p = std::abs(r(i, i));
    pivot_min = std::min(pivot_min, p);
    pivot_max = std::max(pivot_max, p);
  }
  if (pivot_min < 1e-14 * m.norm()) {
    throw SingularMatrix("pivot magnitude " + std::to_string(pivot_min) +
                         " below 1e-14 * ||M||_F; matrix is numerically singular");
  }

  LinearSolveResult result;
  result.x = qr.solve(rhs);
  result.condition_estimate = pivot_max / pivot_min;
  return result;
}

}  // namespace nhqm
