#ifndef NHQM_ASYMPTOTICS_HPP
#define NHQM_ASYMPTOTICS_HPP

#include <map>
#include <utility>
#include <vector>

#include "nhqm/linalg.hpp"

namespace nhqm {

/// Large-|x| tail machinery for -D^2 + i x^m on the infinite line,
/// m a positive odd integer. The ansatz
///   psi = exp(-b x^p) x^q (A_0 + corrections)
/// with p = (m+2)/2, b = (sqrt(2)/(m+2))(1+i), q = -m/4 removes the
/// potential term (b^2 p^2 = i) and the leading subdominant term.
struct TailExpansion {
  int m = 1;
  double p = 0.0;
  Complex b;
  double q = 0.0;

  /// Correction terms of the prefactor series, as (exponent offset from q,
  /// coefficient) pairs. Matching powers in the first-order equation for
  /// the prefactor places the corrections at offsets -(m+2)/2 * n, not the
  /// integer steps one might expect; A_0 = 1 sits at offset 0.
  std::vector<std::pair<double, Complex>> series_terms(int order) const;
};

TailExpansion tail_parameters(int m);

enum class Side { Positive, Negative };

/// Leading asymptotic form: exp(-b_side |x|^p) |x|^{-m/4} with b on the
/// positive side and conj(b) on the negative side. Throws DomainError at
/// x = 0 where the power |x|^q is singular.
Complex asymptotic_psi(const TailExpansion& exp, double x, Side side);

/// Substitutes the ansatz into (-D^2 + i x^m) psi by exact symbolic
/// differentiation and returns |(-D^2 + i x^m) psi| / |psi| / x^{m-1}.
/// E is set to zero: the asymptotic parameters are E-independent and E psi
/// is subdominant to the retained orders. Decays with x when the tail
/// parameters are correct.
double residual_check(const TailExpansion& exp, double x, int order);

/// Coefficient of x^{q+offset} in the symbolic expansion of
/// (-D^2 + i x^m) psi / exp(-b x^p); offset m locates the potential term
/// whose cancellation the parameter choice enforces.
Complex expansion_coefficient(const TailExpansion& exp, int order, double offset);

/// False exactly for m = 1, where the ansatz is inconsistent with a finite
/// second derivative of the prefactor at the origin.
bool consistency_flag(int m);

}  // namespace nhqm

#endif
