#include "qbk/qratio.hpp"

#include <stdexcept>

#include "qbk/errors.hpp"

namespace qbk {

namespace {

HalfPowerPoly exact_quotient(const HalfPowerPoly& a, const HalfPowerPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd does not divide its argument");
  return std::move(*q);
}

}  // namespace

QRatio::QRatio(HalfPowerPoly num, HalfPowerPoly den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  if (num.is_zero()) {
    den_ = HalfPowerPoly(1);
    return;
  }
  const HalfPowerPoly g = poly_gcd(num, den);
  if (g == HalfPowerPoly(1)) {
    num_ = std::move(num);
    den_ = std::move(den);
  } else {
    num_ = exact_quotient(num, g);
    den_ = exact_quotient(den, g);
  }
  normalize_unit();
}

QRatio::QRatio(HalfPowerPoly num, HalfPowerPoly den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = HalfPowerPoly(1);
    return;
  }
  normalize_unit();
}

void QRatio::normalize_unit() {
  const int shift = -den_.low_exponent();
  if (shift != 0) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  const Rational lead = den_.low_coefficient();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

QRatio QRatio::operator-() const {
  QRatio r = *this;
  r.num_ = -r.num_;
  return r;
}

QRatio QRatio::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return QRatio(den_, num_, Reduced{});
}

QRatio QRatio::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  const auto ue = static_cast<unsigned>(e);
  return QRatio(num_.pow(ue), den_.pow(ue), Reduced{});
}

// Henrici: with g = gcd(b, d), a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)), and only g
// can share factors with the new numerator.
QRatio operator+(const QRatio& x, const QRatio& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_ == y.den_) return QRatio(x.num_ + y.num_, x.den_);
  const HalfPowerPoly g = poly_gcd(x.den_, y.den_);
  if (g == HalfPowerPoly(1)) {
    return QRatio(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, QRatio::Reduced{});
  }
  const HalfPowerPoly xd = exact_quotient(x.den_, g);
  const HalfPowerPoly yd = exact_quotient(y.den_, g);
  HalfPowerPoly num = x.num_ * yd + y.num_ * xd;
  if (num.is_zero()) return {};
  const HalfPowerPoly h = poly_gcd(num, g);
  if (h == HalfPowerPoly(1)) return QRatio(std::move(num), x.den_ * yd, QRatio::Reduced{});
  return QRatio(exact_quotient(num, h), exact_quotient(g, h) * xd * yd, QRatio::Reduced{});
}

QRatio operator*(const QRatio& x, const QRatio& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const HalfPowerPoly g1 = poly_gcd(x.num_, y.den_);
  const HalfPowerPoly g2 = poly_gcd(y.num_, x.den_);
  const HalfPowerPoly one(1);
  const HalfPowerPoly a = g1 == one ? x.num_ : exact_quotient(x.num_, g1);
  const HalfPowerPoly d = g1 == one ? y.den_ : exact_quotient(y.den_, g1);
  const HalfPowerPoly c = g2 == one ? y.num_ : exact_quotient(y.num_, g2);
  const HalfPowerPoly b = g2 == one ? x.den_ : exact_quotient(x.den_, g2);
  return QRatio(a * c, b * d, QRatio::Reduced{});
}

std::string QRatio::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRatio QRatio::parse(std::string_view text) {
  if (text.empty() || text.front() != '(') return QRatio(HalfPowerPoly::parse(text));
  const auto split = text.find(")/(");
  if (split == std::string_view::npos || text.back() != ')') {
    throw ParseError("malformed ratio '" + std::string(text) + "'");
  }
  return QRatio(HalfPowerPoly::parse(text.substr(1, split - 1)),
                HalfPowerPoly::parse(text.substr(split + 3, text.size() - split - 4)));
}

QRatio ratio_arith(const QRatio& a, const QRatio& b, ArithOp op, int exponent) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    case ArithOp::neg: return -a;
    case ArithOp::int_pow: return a.pow(exponent);
  }
  throw std::invalid_argument("unknown ArithOp");
}

QRatio canonicalize(const QRatio& x) { return QRatio(x.num(), x.den()); }

Rational eval_p(const QRatio& x, const Rational& p_value) {
  const Rational d = x.den().eval_p(p_value);
  if (d == 0) throw PoleAtPoint("denominator vanishes at p = " + to_string(p_value));
  return x.num().eval_p(p_value) / d;
}

namespace {

// Substitute q for p^2 in a polynomial with even exponents only.
Rational eval_even_in_q(const HalfPowerPoly& poly, const Rational& q_value) {
  Rational acc = 0;
  for (const auto& [e, c] : poly.terms()) acc += c * qbk::pow(q_value, e / 2);
  return acc;
}

}  // namespace

Rational eval_q(const QRatio& x, const Rational& q_value) {
  if (sgn(q_value) <= 0) throw std::invalid_argument("eval_q requires q > 0");
  if (x.num().has_odd_exponents() || x.den().has_odd_exponents()) {
    const auto p_value = rational_sqrt(q_value);
    if (!p_value) {
      throw OddExponent("q = " + to_string(q_value) +
                        " is not a rational square and the expression has half-integer powers");
    }
    return eval_p(x, *p_value);
  }
  const Rational d = eval_even_in_q(x.den(), q_value);
  if (d == 0) throw PoleAtPoint("denominator vanishes at q = " + to_string(q_value));
  return eval_even_in_q(x.num(), q_value) / d;
}

Rational limit_at_q1(const QRatio& x) {
  HalfPowerPoly num = x.num();
  HalfPowerPoly den = x.den();
  const Rational one = 1;
  while (den.eval_p(one) == 0) {
    if (num.eval_p(one) != 0) throw PoleAtOne("limit at q = 1 is infinite");
    num = divide_by_p_minus_one(num);
    den = divide_by_p_minus_one(den);
  }
  return num.eval_p(one) / den.eval_p(one);
}

std::optional<HalfPowerPoly> is_polynomial(const QRatio& x) {
  if (x.is_polynomial()) return x.num();
  return std::nullopt;
}

}  // namespace qbk
