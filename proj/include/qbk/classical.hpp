#pragma once

#include <string>
#include <vector>

#include "qbk/rational.hpp"

namespace qbk::classical {

/// Dense univariate polynomial over Q; coefficients()[i] multiplies x^i.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int i) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  RationalPoly derivative() const;
  /// Antiderivative with zero constant term.
  RationalPoly antiderivative() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// e.g. "1/3*k^3 - 1/2*k^2 + 1/6*k".
  std::string to_string(const std::string& var = "k") const;

 private:
  std::vector<Rational> coeffs_;
};

/// B_0..B_N with t/(e^t - 1) = sum B_n t^n/n!, so B_1 = -1/2.
class BernoulliTable {
 public:
  explicit BernoulliTable(int max_index);

  const Rational& operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }
  int max_index() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

Rational bernoulli(int n);

/// 1^n + 2^n + ... + (k-1)^n.
Rational sum_powers_brute(int n, int k);

/// S_n(k) as a polynomial in k of degree n+1.
RationalPoly sum_powers_poly(int n);

/// Monic B_n(x) with S_n(k) = integral_0^k B_n(x) dx.
RationalPoly bernoulli_monic_poly(int n);

/// n! [t^n] of -t e^t/(1 - e^t)^2, the nonnegative-order part only.
Rational barnes_limit_coeff(int n);

/// Coefficient of t^{-1} in -t e^t/(1 - e^t)^2.
Rational barnes_limit_pole();

}  // namespace qbk::classical
