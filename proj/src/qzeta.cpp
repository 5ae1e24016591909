#include "qbk/qzeta.hpp"

#include <stdexcept>

#include "qbk/errors.hpp"
#include "qbk/qbernoulli.hpp"

namespace qbk {

std::string_view to_string(ZetaVariant v) { return v == ZetaVariant::shifted ? "shifted" : "plain"; }

ZetaVariant zeta_variant_from_string(std::string_view name) {
  if (name == "shifted") return ZetaVariant::shifted;
  if (name == "plain") return ZetaVariant::plain;
  throw std::invalid_argument("unknown zeta variant '" + std::string(name) + "'");
}

nlohmann::ordered_json ZetaResult::to_json() const {
  nlohmann::ordered_json j;
  j["variant"] = std::string(qbk::to_string(variant));
  j["s"] = qbk::to_string(query.s);
  j["q"] = qbk::to_string(query.q);
  j["k"] = query.k;
  j["tolerance"] = qbk::to_string(query.tolerance);
  j["value"] = qbk::to_string(value);
  j["terms_used"] = terms_used;
  return j;
}

namespace {

// q^{e/2} at a fixed rational q.
class HalfPowers {
 public:
  explicit HalfPowers(const Rational& q) : q_(q), sqrt_q_(rational_sqrt(q)) {}

  Rational operator()(long e) const {
    if (e % 2 == 0) return qbk::pow(q_, e / 2);
    if (!sqrt_q_) {
      throw IrrationalTerm("q^(" + std::to_string(e) + "/2) is irrational at q = " + to_string(q_));
    }
    return qbk::pow(*sqrt_q_, e);
  }

 private:
  Rational q_;
  std::optional<Rational> sqrt_q_;
};

// [N]_x for rational x != 1
Rational q_integer(const Rational& x, long n) { return (qbk::pow(x, n) - 1) / (x - 1); }

}  // namespace

ZetaResult zeta_series(const ZetaQuery& query, ZetaVariant variant) {
  if (sgn(query.tolerance) <= 0) throw std::invalid_argument("tolerance must be positive");
  if (query.k < 1) throw std::invalid_argument("k must be a positive integer");
  if (query.q <= 1) {
    throw DivergentParameters("series diverges for q = " + to_string(query.q) + " (needs q > 1)");
  }
  // Asymptotic ratio q^{1-3s/2} (shifted) or q^{1-s/2} (plain) is < 1 iff 3s > 2 / s > 2.
  const bool convergent =
      variant == ZetaVariant::shifted ? query.s * 3 > 2 : query.s > 2;
  if (!convergent) {
    throw DivergentParameters("term ratio does not tend below 1 for s = " + to_string(query.s));
  }
  if (query.s.get_den() != 1) {
    throw IrrationalTerm("[N]_q^s is irrational for non-integer s = " + to_string(query.s));
  }
  const long s = query.s.get_num().get_si();
  const long k = query.k;
  const Rational& q = query.q;
  const Rational q2 = q * q;
  const HalfPowers half_power(q);

  // Weight exponent (in half-powers of q) and ratio factor per variant.
  const long first_index = variant == ZetaVariant::shifted ? 0 : 1;
  auto term = [&](long n) -> Rational {
    const long big_n = variant == ZetaVariant::shifted ? n + k : n;
    const long weight_exp = variant == ZetaVariant::shifted ? -n * (s + 2) : (k - n) * (2 - s);
    return q_integer(q2, big_n) * half_power(weight_exp) / qbk::pow(q_integer(q, big_n), s);
  };
  const Rational ratio_scale =
      qbk::pow(q, -s) * half_power(variant == ZetaVariant::shifted ? -(s + 2) : s - 2);

  ZetaResult result{variant, query, 0, 0};
  for (long n = first_index;; ++n) {
    const Rational t = term(n);
    result.value += t;
    ++result.terms_used;
    const long big_n = variant == ZetaVariant::shifted ? n + k : n;
    const Rational r = q_integer(q2, big_n + 1) / q_integer(q2, big_n) * ratio_scale;
    if (r < 1 && t * r / (1 - r) < query.tolerance) break;
  }
  return result;
}

QRatio zeta_special(int n, int k) { return -beta_star(n, k) / QRatio(n); }

}  // namespace qbk
