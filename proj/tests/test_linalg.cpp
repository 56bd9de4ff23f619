#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nhqm/linalg.hpp"
#include "nhqm/two_level.hpp"

using nhqm::Complex;
using nhqm::ComplexMatrix;
using nhqm::ComplexVector;

namespace {

ComplexMatrix random_complex(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = Complex(dist(gen), dist(gen));
  }
  return m;
}

}  // namespace

TEST_CASE("diagonal matrix eigendecomposition") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = Complex(1.0, 2.0);
  m(1, 1) = Complex(3.0, 0.0);
  const auto d = nhqm::eig(m);
  CHECK(d.eigenvalues[0] == Complex(1.0, 2.0));
  CHECK(d.eigenvalues[1] == Complex(3.0, 0.0));
  CHECK(std::abs(d.eigenvectors(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(d.eigenvectors(1, 1) - 1.0) < 1e-14);
}

TEST_CASE("two-level H(mu=2) spectrum") {
  const auto d = nhqm::eig(nhqm::make_two_level(2.0).hamiltonian);
  const double root3 = std::sqrt(3.0);
  CHECK(d.eigenvalues[0].real() == doctest::Approx(1.0 - root3).epsilon(1e-12));
  CHECK(d.eigenvalues[1].real() == doctest::Approx(1.0 + root3).epsilon(1e-12));
  CHECK(std::abs(d.eigenvalues[0].imag()) < 1e-12);
  CHECK(std::abs(d.eigenvalues[1].imag()) < 1e-12);
}

TEST_CASE("residual contract on a random 10x10 matrix") {
  const ComplexMatrix m = random_complex(10, 42);
  const auto d = nhqm::eig(m);
  const double tol = nhqm::residual_tolerance(m);
  for (int k = 0; k < 10; ++k) {
    CHECK(d.residuals[k] <= tol);
    CHECK(d.eigenvectors.col(k).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("spectrum of M equals spectrum of M transpose") {
  const ComplexMatrix m = random_complex(8, 7);
  const auto a = nhqm::eig(m);
  const auto b = nhqm::eig(m.transpose());
  for (int k = 0; k < 8; ++k) {
    CHECK(std::abs(a.eigenvalues[k] - b.eigenvalues[k]) < 1e-9);
  }
}

TEST_CASE("PT structure: D + iC spectrum closed under conjugation") {
  // D, C real symmetric with a signature P satisfying PDP = D, PCP = -C:
  // split indices into two blocks, D block-diagonal, C purely off-block.
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int half = 4, n = 2 * half;
  Eigen::MatrixXd d_real = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd c_real = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < half; ++r) {
    for (int c = r; c < half; ++c) {
      d_real(r, c) = d_real(c, r) = dist(gen);
      d_real(half + r, half + c) = d_real(half + c, half + r) = dist(gen);
    }
  }
  for (int r = 0; r < half; ++r) {
    for (int c = 0; c < half; ++c) {
      c_real(r, half + c) = c_real(half + c, r) = dist(gen);
    }
  }
  const ComplexMatrix m = d_real.cast<Complex>() + Complex(0, 1) * c_real.cast<Complex>();
  const auto spec = nhqm::eig(m);
  for (int k = 0; k < n; ++k) {
    double best = 1e30;
    for (int j = 0; j < n; ++j) {
      best = std::min(best, std::abs(std::conj(spec.eigenvalues[k]) - spec.eigenvalues[j]));
    }
    CHECK(best < 1e-9);
  }
}

TEST_CASE("trace equals eigenvalue sum") {
  const ComplexMatrix m = random_complex(12, 3);
  const auto d = nhqm::eig(m);
  CHECK(std::abs(m.trace() - d.eigenvalues.sum()) < 1e-9 * m.norm());
}

TEST_CASE("solve_linear identity") {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexVector rhs(2);
  rhs << Complex(1.0, 0.0), Complex(0.0, 1.0);
  const auto result = nhqm::solve_linear(id, rhs);
  CHECK((result.x - rhs).norm() < 1e-15);
  CHECK(result.condition_estimate == doctest::Approx(1.0));
}

TEST_CASE("eigenvector expansion of (1,0) at mu=2") {
  const auto sys = std::get<nhqm::EigenSystem2>(nhqm::eigenpairs(nhqm::make_two_level(2.0)));
  ComplexMatrix u(2, 2);
  u.col(0) = sys.u1;
  u.col(1) = sys.u2;
  ComplexVector rhs(2);
  rhs << Complex(1.0, 0.0), Complex(0.0, 0.0);
  const auto result = nhqm::solve_linear(u, rhs);
  CHECK((u * result.x - rhs).norm() < 1e-10 * u.norm() * result.x.norm());
}

TEST_CASE("coalesced eigenvectors are singular") {
  // At mu = 1 both columns are proportional to (1, i).
  ComplexMatrix u(2, 2);
  u.col(0) = nhqm::Vector2c(Complex(1, 0), Complex(0, 1));
  u.col(1) = nhqm::Vector2c(Complex(1, 0), Complex(0, 1));
  ComplexVector rhs(2);
  rhs << Complex(1.0, 0.0), Complex(0.0, 0.0);
  CHECK_THROWS_AS(nhqm::solve_linear(u, rhs), nhqm::SingularMatrix);
}

TEST_CASE("input validation") {
  ComplexMatrix m(2, 3);
  m.setZero();
  CHECK_THROWS_AS(nhqm::eig(m), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(nhqm::eig(bad), std::invalid_argument);
}
