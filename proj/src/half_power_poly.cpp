#include "qbk/half_power_poly.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbk/errors.hpp"

namespace qbk {

namespace {

// Dense integer polynomial, index = exponent.
using IntCoeffs = std::vector<Integer>;
using RatCoeffs = std::vector<Rational>;

void trim(IntCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Dense coefficients of p^(-low) * a, so the constant term is nonzero.
RatCoeffs to_dense(const HalfPowerPoly& a) {
  const int low = a.low_exponent();
  RatCoeffs out(static_cast<std::size_t>(a.high_exponent() - low + 1));
  for (const auto& [e, c] : a.terms()) out[static_cast<std::size_t>(e - low)] = c;
  return out;
}

HalfPowerPoly from_dense(const RatCoeffs& c, int low) {
  HalfPowerPoly::Terms terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) terms.emplace_hint(terms.end(), low + static_cast<int>(i), c[i]);
  }
  return HalfPowerPoly(std::move(terms));
}

// Primitive integer polynomial with the same roots as `c`.
IntCoeffs primitive_part(const RatCoeffs& c) {
  Integer den_lcm = 1;
  for (const auto& x : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  IntCoeffs out(c.size());
  Integer content = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = c[i].get_num() * (den_lcm / c[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

void make_primitive(IntCoeffs& c) {
  Integer content = 0;
  for (const auto& x : c) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content == 1) return;
  }
  if (content > 1) {
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0), in place.
void pseudo_remainder(IntCoeffs& a, const IntCoeffs& b) {
  const Integer& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    // a <- lb*a - la*p^shift*b, with gcd(la, lb) removed from both multipliers.
    Integer g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    const Integer ma = lb / g;
    const Integer mb = la / g;
    if (ma != 1) {
      for (auto& x : a) x *= ma;
    }
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= mb * b[i];
    assert(a.back() == 0);
    trim(a);
  }
}

// Constant term of an IntCoeffs may be zero after pseudo-division; strip p-factors.
void strip_low_zeros(IntCoeffs& c) {
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  if (k > 0) c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
}

HalfPowerPoly normalized_from_int(const IntCoeffs& c) {
  RatCoeffs r(c.size());
  const Rational low(c.front());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = Rational(c[i]) / low;
  return from_dense(r, 0);
}

}  // namespace

// mpq_class(num, den) leaves the fraction unreduced; every stored coefficient is canonical.
HalfPowerPoly::HalfPowerPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c).first->second.canonicalize();
}

HalfPowerPoly::HalfPowerPoly(Terms terms) : terms_(std::move(terms)) {
  for (auto& [e, c] : terms_) c.canonicalize();
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

HalfPowerPoly HalfPowerPoly::monomial(const Rational& c, int p_exponent) {
  HalfPowerPoly out;
  if (c != 0) out.terms_.emplace(p_exponent, c).first->second.canonicalize();
  return out;
}

Rational HalfPowerPoly::coefficient(int p_exponent) const {
  const auto it = terms_.find(p_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool HalfPowerPoly::has_odd_exponents() const noexcept {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) return true;
  }
  return false;
}

HalfPowerPoly HalfPowerPoly::shifted(int p_exponent) const {
  if (p_exponent == 0) return *this;
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace_hint(out.end(), e + p_exponent, c);
  HalfPowerPoly r;
  r.terms_ = std::move(out);
  return r;
}

Rational HalfPowerPoly::eval_p(const Rational& p_value) const {
  if (is_zero()) return 0;
  if (p_value == 0) {
    if (low_exponent() < 0) throw DivisionByZero("negative power of p at p = 0");
    return coefficient(0);
  }
  // Horner over the dense range, then rescale by p^low.
  Rational acc = 0;
  int prev = high_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= qbk::pow(p_value, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * qbk::pow(p_value, low_exponent());
}

HalfPowerPoly HalfPowerPoly::operator-() const {
  HalfPowerPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HalfPowerPoly& HalfPowerPoly::operator+=(const HalfPowerPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

HalfPowerPoly& HalfPowerPoly::operator-=(const HalfPowerPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

HalfPowerPoly operator*(const HalfPowerPoly& a, const HalfPowerPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) {
    HalfPowerPoly r = b.shifted(a.low_exponent());
    return r *= a.low_coefficient();
  }
  if (b.is_monomial()) {
    HalfPowerPoly r = a.shifted(b.low_exponent());
    return r *= b.low_coefficient();
  }
  const RatCoeffs da = to_dense(a);
  const RatCoeffs db = to_dense(b);
  RatCoeffs out(da.size() + db.size() - 1);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < db.size(); ++j) {
      if (db[j] == 0) continue;
      out[i + j] += da[i] * db[j];
    }
  }
  return from_dense(out, a.low_exponent() + b.low_exponent());
}

HalfPowerPoly& HalfPowerPoly::operator*=(const HalfPowerPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

HalfPowerPoly& HalfPowerPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

HalfPowerPoly HalfPowerPoly::pow(unsigned e) const {
  HalfPowerPoly result(1);
  HalfPowerPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string HalfPowerPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += qbk::to_string(abs(c));
    if (e == 0) continue;
    if (e % 2 == 0) {
      out += "*q^" + std::to_string(e / 2);
    } else {
      out += "*q^(" + std::to_string(e) + "/2)";
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  HalfPowerPoly parse() {
    HalfPowerPoly out;
    if (text_ == "0") return out;
    bool negative = consume("-");
    for (;;) {
      auto [c, e] = term();
      out += HalfPowerPoly::monomial(negative ? Rational(-c) : c, e);
      if (pos_ == text_.size()) break;
      if (consume(" + ")) {
        negative = false;
      } else if (consume(" - ")) {
        negative = true;
      } else {
        fail("expected ' + ' or ' - '");
      }
    }
    return out;
  }

 private:
  std::pair<Rational, int> term() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected coefficient");
    const Rational c = parse_rational(text_.substr(start, pos_ - start));
    if (!consume("*q^")) return {c, 0};
    if (consume("(")) {
      const int e = integer();
      if (!consume("/2)")) fail("expected '/2)'");
      return {c, e};
    }
    return {c, 2 * integer()};
  }

  int integer() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-") fail("expected exponent");
    return std::stoi(digits);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HalfPowerPoly HalfPowerPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

HalfPowerPoly poly_gcd(const HalfPowerPoly& a, const HalfPowerPoly& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
  if (a.is_zero() || b.is_zero()) {
    const HalfPowerPoly& x = a.is_zero() ? b : a;
    return from_dense(to_dense(x), 0) * (Rational(1) / x.low_coefficient());
  }
  if (a.is_monomial() || b.is_monomial()) return HalfPowerPoly(1);

  IntCoeffs x = primitive_part(to_dense(a));
  IntCoeffs y = primitive_part(to_dense(b));
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    pseudo_remainder(x, y);
    strip_low_zeros(x);
    if (x.empty()) return normalized_from_int(y);
    make_primitive(x);
    std::swap(x, y);
    if (x.size() < y.size()) std::swap(x, y);
  }
  return HalfPowerPoly(1);
}

std::optional<HalfPowerPoly> divide_exact(const HalfPowerPoly& a, const HalfPowerPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return HalfPowerPoly();
  if (b.is_monomial()) {
    HalfPowerPoly r = a.shifted(-b.low_exponent());
    return r *= Rational(1) / b.low_coefficient();
  }
  RatCoeffs num = to_dense(a);
  const RatCoeffs den = to_dense(b);
  if (num.size() < den.size()) return std::nullopt;
  const std::size_t dd = den.size() - 1;
  const Rational inv_lead = Rational(1) / den.back();
  RatCoeffs quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    if (num[i] == 0) continue;
    const Rational f = num[i] * inv_lead;
    quot[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (den[j] != 0) num[i - dd + j] -= f * den[j];
    }
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) return std::nullopt;
  }
  return from_dense(quot, a.low_exponent() - b.low_exponent());
}

HalfPowerPoly divide_by_p_minus_one(const HalfPowerPoly& a) {
  if (a.is_zero()) return {};
  // Synthetic division from the top: q_{i-1} = a_i + q_i.
  const RatCoeffs c = to_dense(a);
  RatCoeffs quot(c.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry += c[i];
    quot[i - 1] = carry;
  }
  if (carry + c[0] != 0) throw std::invalid_argument("polynomial does not vanish at p = 1");
  return from_dense(quot, a.low_exponent());
}

}  // namespace qbk
