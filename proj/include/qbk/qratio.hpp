#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qbk/half_power_poly.hpp"
#include "qbk/rational.hpp"

namespace qbk {

/**
 * Element of Q(q^{1/2}) = Q(p), kept in canonical form:
 *   - gcd(num, den) = 1 as Laurent polynomials,
 *   - den has lowest p-exponent 0 and lowest coefficient exactly 1,
 *   - zero is 0/1.
 * Canonical form makes equality a structural comparison.
 */
class QRatio {
 public:
  QRatio() : den_(1) {}
  QRatio(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRatio(long c) : QRatio(Rational(c)) {}          // NOLINT(google-explicit-constructor)
  QRatio(HalfPowerPoly poly) : num_(std::move(poly)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero when den is zero.
  QRatio(HalfPowerPoly num, HalfPowerPoly den);

  /// q^(e/2)
  static QRatio p_power(int p_exponent) { return QRatio(HalfPowerPoly::monomial(1, p_exponent)); }

  const HalfPowerPoly& num() const noexcept { return num_; }
  const HalfPowerPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_ == HalfPowerPoly(1); }

  QRatio operator-() const;
  QRatio inverse() const;
  QRatio pow(int e) const;

  QRatio& operator+=(const QRatio& rhs) { return *this = *this + rhs; }
  QRatio& operator-=(const QRatio& rhs) { return *this = *this - rhs; }
  QRatio& operator*=(const QRatio& rhs) { return *this = *this * rhs; }
  QRatio& operator/=(const QRatio& rhs) { return *this = *this / rhs; }

  friend QRatio operator+(const QRatio& a, const QRatio& b);
  friend QRatio operator-(const QRatio& a, const QRatio& b) { return a + (-b); }
  friend QRatio operator*(const QRatio& a, const QRatio& b);
  friend QRatio operator/(const QRatio& a, const QRatio& b) { return a * b.inverse(); }
  friend bool operator==(const QRatio& a, const QRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// `N` when the denominator is 1, otherwise `(N)/(D)`, with N and D in canonical
  /// polynomial rendering.
  std::string to_string() const;
  static QRatio parse(std::string_view text);

 private:
  struct Reduced {};
  // num/den already coprime; only fixes the unit normalization.
  QRatio(HalfPowerPoly num, HalfPowerPoly den, Reduced);
  void normalize_unit();

  HalfPowerPoly num_;
  HalfPowerPoly den_;
};

enum class ArithOp { add, sub, mul, div, neg, int_pow };

/// Single dispatch point over the field operations. `exponent` is used by int_pow only;
/// `b` is ignored by neg and int_pow.
QRatio ratio_arith(const QRatio& a, const QRatio& b, ArithOp op, int exponent = 0);

/// Re-derives the canonical form from scratch; a no-op on any QRatio value.
QRatio canonicalize(const QRatio& x);

/// Exact value at p = p_value. Throws PoleAtPoint if the denominator vanishes there.
Rational eval_p(const QRatio& x, const Rational& p_value);

/**
 * Exact value at q = q_value (q_value > 0). When x only has even p-exponents the
 * substitution is done in q directly; otherwise q_value must be the square of a
 * rational, else OddExponent is thrown.
 */
Rational eval_q(const QRatio& x, const Rational& q_value);

/// lim_{q->1} x, by cancelling (p-1) factors. Throws PoleAtOne if infinite.
Rational limit_at_q1(const QRatio& x);

/// The Laurent polynomial when the canonical denominator is 1.
std::optional<HalfPowerPoly> is_polynomial(const QRatio& x);

}  // namespace qbk
