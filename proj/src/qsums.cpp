#include "qbk/qsums.hpp"

#include <stdexcept>
#include <string>

#include "qbk/errors.hpp"
#include "qbk/qbernoulli.hpp"
#include "qbk/qcore.hpp"

namespace qbk {

namespace {

// 1 + q^b + q^{2b} + ... + q^{(k-1)b}
HalfPowerPoly geometric_poly(int k, int base) {
  HalfPowerPoly::Terms terms;
  for (int i = 0; i < k; ++i) terms.emplace(2 * base * i, 1);
  return HalfPowerPoly(std::move(terms));
}

void require_even_order(int n, int k) {
  if (n < 1 || n % 2 != 0) {
    throw OddOrder("order n = " + std::to_string(n) + " must be a positive even integer");
  }
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
}

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
}

const HalfPowerPoly kOne(1);

// 1 - q^{e/2}
QRatio one_minus_p(int e) { return QRatio(kOne - HalfPowerPoly::monomial(1, e)); }
QRatio one_minus_q(int e) { return one_minus_p(2 * e); }
QRatio q_pow(int e) { return QRatio::p_power(2 * e); }

}  // namespace

HalfPowerPoly s_mn_brute(int m, int n) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  HalfPowerPoly acc;
  for (int k = 1; k <= n; ++k) {
    acc += geometric_poly(k, 2) * geometric_poly(k, 1).pow(static_cast<unsigned>(m - 1)) *
           HalfPowerPoly::monomial(1, (n - k) * (m + 1));
  }
  return acc;
}

HalfPowerPoly s_theorem3_brute(int n, int k) {
  require_even_order(n, k);
  HalfPowerPoly acc;
  for (int j = 1; j < k; ++j) {  // the j = 0 term has [0]_{q^2} = 0
    acc += geometric_poly(j, 2) * geometric_poly(j, 1).pow(static_cast<unsigned>(n - 1)) *
           HalfPowerPoly::monomial(1, (n + 1) * (k - j));
  }
  return acc;
}

QRatio s_theorem3_closed(int n, int k) {
  return (beta_star_poly(n, k) - beta_star(n, k)) / QRatio(n);
}

QRatio s_theorem3_closed_printed(int n, int k) {
  return (beta_star_poly_printed(n, k) - beta_star(n, k)) / QRatio(n);
}

QRatio warnaar_lhs(int n) {
  require_positive(n);
  QRatio acc;
  const QRatio den = one_minus_q(1).pow(2) * one_minus_q(2);
  for (int k = 1; k <= n; ++k) {
    acc += q_pow(2 * n - 2 * k) * one_minus_q(k).pow(2) * one_minus_q(2 * k) / den;
  }
  return acc;
}

QRatio garrett_hummel_lhs(int n) {
  require_positive(n);
  QRatio acc;
  for (int k = 1; k <= n; ++k) {
    const QRatio square = (one_minus_q(k) / one_minus_q(1)).pow(2);
    const QRatio bracket = one_minus_q(k - 1) / one_minus_q(2) + one_minus_q(k + 1) / one_minus_q(2);
    acc += q_pow(k - 1) * square * bracket;
  }
  return acc;
}

QRatio sum_of_cubes_rhs(int n) { return QRatio(q_binomial(n + 1, 2)).pow(2); }

QRatio schlosser_rhs(int m, int n) {
  require_positive(n);
  switch (m) {
    case 2:
      return q_int(n) * q_int(n + 1) * q_int(QIndex::half(2 * n + 1)) /
             (q_int(1) * q_int(2) * q_int(QIndex::half(3)));
    case 3:
      return sum_of_cubes_rhs(n);
    case 4: {
      const QRatio outer = one_minus_q(n) * one_minus_q(n + 1) * one_minus_p(2 * n + 1) /
                           (one_minus_q(1) * one_minus_q(2) * one_minus_p(5));
      const QRatio inner = one_minus_q(n) * one_minus_q(n + 1) / one_minus_q(1).pow(2) -
                           q_pow(n) * one_minus_p(1) / one_minus_p(3);
      return outer * inner;
    }
    case 5: {
      const QRatio outer = one_minus_q(n).pow(2) * one_minus_q(n + 1).pow(2) /
                           (one_minus_q(1).pow(2) * one_minus_q(2) * one_minus_q(3));
      const QRatio inner = one_minus_q(n) * one_minus_q(n + 1) / one_minus_q(1).pow(2) -
                           q_pow(n) * one_minus_q(1) / one_minus_q(2);
      return outer * inner;
    }
    default:
      throw UnsupportedM("no closed form for m = " + std::to_string(m) + " (supported: 2..5)");
  }
}

QRatio kim_lhs(KimFormula which, int n) {
  require_positive(n);
  QRatio acc;
  for (int k = 0; k < n; ++k) {
    acc += which == KimFormula::linear ? q_pow(k) * q_int(k) : q_pow(k + 1) * q_int(k).pow(2);
  }
  return acc;
}

QRatio kim_rhs(KimFormula which, int n) {
  require_positive(n);
  const QRatio half(Rational(1, 2));
  const QRatio linear = half * (q_int(n).pow(2) - q_int(2 * n) / q_int(2));
  if (which == KimFormula::linear) return linear;
  const QRatio third(Rational(1, 3));
  return third * q_int(n).pow(3) - linear - third * (q_int(3 * n) / q_int(3));
}

VerificationReport warnaar_check(int n) {
  return VerificationReport::compare(IdentityId::warnaar, {n}, warnaar_lhs(n), sum_of_cubes_rhs(n));
}

VerificationReport garrett_hummel_check(int n) {
  return VerificationReport::compare(IdentityId::garrett_hummel, {n}, garrett_hummel_lhs(n),
                                     sum_of_cubes_rhs(n));
}

VerificationReport schlosser_check(int m, int n) {
  if (m < 2 || m > 5) {
    throw UnsupportedM("no closed form for m = " + std::to_string(m) + " (supported: 2..5)");
  }
  const auto id = static_cast<IdentityId>(static_cast<int>(IdentityId::schlosser_m2) + (m - 2));
  return VerificationReport::compare(id, {m, n}, QRatio(s_mn_brute(m, n)), schlosser_rhs(m, n));
}

VerificationReport kim_check(KimFormula which, int n) {
  const auto id = which == KimFormula::linear ? IdentityId::kim_linear : IdentityId::kim_quadratic;
  return VerificationReport::compare(id, {n}, kim_lhs(which, n), kim_rhs(which, n));
}

VerificationReport theorem3_check(int n, int k) {
  return VerificationReport::compare(IdentityId::theorem3, {n, k}, QRatio(s_theorem3_brute(n, k)),
                                     s_theorem3_closed(n, k));
}

VerificationReport theorem3_bridge_check(int n, int k) {
  const HalfPowerPoly lhs = s_theorem3_brute(n, k);
  const HalfPowerPoly rhs = HalfPowerPoly::monomial(1, n + 1) * s_mn_brute(n, k - 1);
  return VerificationReport::compare(IdentityId::s12_vs_theorem3, {n, k}, QRatio(lhs), QRatio(rhs));
}

}  // namespace qbk
