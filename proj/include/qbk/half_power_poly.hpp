#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qbk/rational.hpp"

namespace qbk {

/**
 * Laurent polynomial in p, where p^2 = q.
 *
 * A term c*p^e stands for c*q^(e/2), so every half-integer power of q is an
 * integer power of p. Only nonzero coefficients are stored; two values are
 * equal iff their term maps are identical.
 */
class HalfPowerPoly {
 public:
  using Terms = std::map<int, Rational>;

  HalfPowerPoly() = default;
  HalfPowerPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  HalfPowerPoly(long c) : HalfPowerPoly(Rational(c)) {}  // NOLINT
  explicit HalfPowerPoly(Terms terms);

  /// c * p^e
  static HalfPowerPoly monomial(const Rational& c, int p_exponent);
  /// c * q^e, i.e. c * p^(2e)
  static HalfPowerPoly q_power(int q_exponent, const Rational& c = 1) {
    return monomial(c, 2 * q_exponent);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Lowest / highest p-exponent. Undefined on zero.
  int low_exponent() const { return terms_.begin()->first; }
  int high_exponent() const { return terms_.rbegin()->first; }
  const Rational& low_coefficient() const { return terms_.begin()->second; }
  const Rational& high_coefficient() const { return terms_.rbegin()->second; }
  Rational coefficient(int p_exponent) const;

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool has_odd_exponents() const noexcept;

  /// Multiply by p^e.
  HalfPowerPoly shifted(int p_exponent) const;

  /// Value at p = p_value. Throws DivisionByZero for p_value = 0 with negative exponents.
  Rational eval_p(const Rational& p_value) const;

  HalfPowerPoly operator-() const;
  HalfPowerPoly& operator+=(const HalfPowerPoly& rhs);
  HalfPowerPoly& operator-=(const HalfPowerPoly& rhs);
  HalfPowerPoly& operator*=(const HalfPowerPoly& rhs);
  HalfPowerPoly& operator*=(const Rational& c);

  friend HalfPowerPoly operator+(HalfPowerPoly a, const HalfPowerPoly& b) { return a += b; }
  friend HalfPowerPoly operator-(HalfPowerPoly a, const HalfPowerPoly& b) { return a -= b; }
  friend HalfPowerPoly operator*(const HalfPowerPoly& a, const HalfPowerPoly& b);
  friend HalfPowerPoly operator*(HalfPowerPoly a, const Rational& c) { return a *= c; }
  friend HalfPowerPoly operator*(const Rational& c, HalfPowerPoly a) { return a *= c; }
  friend bool operator==(const HalfPowerPoly& a, const HalfPowerPoly& b) {
    return a.terms_ == b.terms_;
  }

  HalfPowerPoly pow(unsigned e) const;

  /// Canonical text: ascending exponents, `c`, `c*q^k`, `c*q^(e/2)`, joined by ` + ` / ` - `.
  std::string to_string() const;
  static HalfPowerPoly parse(std::string_view text);

 private:
  Terms terms_;
};

/// gcd over Q[p, 1/p], normalized to lowest exponent 0 and lowest coefficient 1.
/// Throws BothZero when both inputs are zero.
HalfPowerPoly poly_gcd(const HalfPowerPoly& a, const HalfPowerPoly& b);

/// a / b when b divides a as Laurent polynomials, otherwise empty.
/// Throws DivisionByZero when b is zero.
std::optional<HalfPowerPoly> divide_exact(const HalfPowerPoly& a, const HalfPowerPoly& b);

/// a / (p - 1); requires a(1) == 0.
HalfPowerPoly divide_by_p_minus_one(const HalfPowerPoly& a);

}  // namespace qbk
