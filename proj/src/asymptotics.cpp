#include "nhqm/asymptotics.hpp"

#include <cmath>

namespace nhqm {

namespace {

void require_odd_positive(int m) {
  if (m < 1 || m % 2 == 0) {
    throw std::invalid_argument("m must be a positive odd integer");
  }
}

// Sparse polynomial in x with exponents on the half-integer grid,
// keyed by 2 * exponent.
using TermMap = std::map<long, Complex>;

void add_term(TermMap& terms, double exponent, Complex coeff) {
  const long key = std::lround(2.0 * exponent);
  terms[key] += coeff;
}

TermMap differentiate(const TermMap& f) {
  TermMap out;
  for (const auto& [key, coeff] : f) {
    const double e = key / 2.0;
    if (coeff != Complex(0.0, 0.0) && e != 0.0) {
      add_term(out, e - 1.0, coeff * e);
    }
  }
  return out;
}

TermMap shift(const TermMap& f, double exponent_shift, Complex factor) {
  TermMap out;
  for (const auto& [key, coeff] : f) {
    add_term(out, key / 2.0 + exponent_shift, coeff * factor);
  }
  return out;
}

TermMap add(TermMap a, const TermMap& b) {
  for (const auto& [key, coeff] : b) a[key] += coeff;
  return a;
}

// D(exp(-b x^p) f) = exp(-b x^p) (f' - b p x^{p-1} f)
TermMap covariant_derivative(const TermMap& f, Complex b, double p) {
  return add(differentiate(f), shift(f, p - 1.0, -b * p));
}

// (-D^2 + i x^m) applied to exp(-b x^p) f, with the exponential stripped.
TermMap residual_terms(const TermMap& f, Complex b, double p, int m) {
  const TermMap d2 = covariant_derivative(covariant_derivative(f, b, p), b, p);
  return add(shift(d2, 0.0, Complex(-1.0, 0.0)), shift(f, m, Complex(0.0, 1.0)));
}

Complex evaluate(const TermMap& f, double x) {
  Complex value(0.0, 0.0);
  for (const auto& [key, coeff] : f) {
    value += coeff * std::pow(x, key / 2.0);
  }
  return value;
}

TermMap prefactor_series(const TailExpansion& exp, int order) {
  TermMap f;
  for (const auto& [offset, coeff] : exp.series_terms(order)) {
    add_term(f, exp.q + offset, coeff);
  }
  return f;
}

}  // namespace

TailExpansion tail_parameters(int m) {
  require_odd_positive(m);
  TailExpansion exp;
  exp.m = m;
  exp.p = (m + 2) / 2.0;
  exp.b = std::sqrt(2.0) / (m + 2) * Complex(1.0, 1.0);
  exp.q = -m / 4.0;
  return exp;
}

std::vector<std::pair<double, Complex>> TailExpansion::series_terms(int order) const {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  std::vector<std::pair<double, Complex>> terms;
  Complex a(1.0, 0.0);  // A_0 = 1
  terms.emplace_back(0.0, a);
  // Matching powers in the prefactor equation: the correction at offset
  // -n(m+2)/2 is sourced by the second derivative of the previous one.
  for (int n = 1; n <= order; ++n) {
    const double j = n * (m + 2.0);            // in half-exponent units
    const double s = (j - m + 2.0) / 2.0;
    a *= -(q - s + 2.0) * (q - s + 1.0) / (b * (m + 2.0) * (j / 2.0));
    terms.emplace_back(-j / 2.0, a);
  }
  return terms;
}

Complex asymptotic_psi(const TailExpansion& exp, double x, Side side) {
  if (x == 0.0) {
    throw DomainError("asymptotic form is singular at x = 0");
  }
  const double ax = std::abs(x);
  const Complex b_side = side == Side::Positive ? exp.b : std::conj(exp.b);
  return std::exp(-b_side * std::pow(ax, exp.p)) * std::pow(ax, exp.q);
}

double residual_check(const TailExpansion& exp, double x, int order) {
  if (x <= 0.0) throw DomainError("residual check requires x > 0");
  const TermMap f = prefactor_series(exp, order);
  const TermMap res = residual_terms(f, exp.b, exp.p, exp.m);
  const double denom = std::abs(evaluate(f, x)) * std::pow(x, exp.m - 1.0);
  return std::abs(evaluate(res, x)) / denom;
}

Complex expansion_coefficient(const TailExpansion& exp, int order, double offset) {
  const TermMap res = residual_terms(prefactor_series(exp, order), exp.b, exp.p, exp.m);
  const long key = std::lround(2.0 * (exp.q + offset));
  const auto it = res.find(key);
  return it == res.end() ? Complex(0.0, 0.0) : it->second;
}

bool consistency_flag(int m) {
  require_odd_positive(m);
  return m >= 2;
}

}  // namespace nhqm
