#include "qbk/qbernoulli.hpp"

#include <stdexcept>
#include <string>

#include "qbk/errors.hpp"
#include "qbk/qcore.hpp"
#include "qbk/regularized_sum.hpp"

namespace qbk {

namespace {

void require_even_order(int n, int k) {
  if (n < 1 || n % 2 != 0) {
    throw OddOrder("order n = " + std::to_string(n) + " must be a positive even integer");
  }
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
}

const HalfPowerPoly kOne(1);

// 1 - p^e, any integer e.
HalfPowerPoly one_minus_p(int e) { return kOne - HalfPowerPoly::monomial(1, e); }

QRatio one_minus_q_power(int q_exponent) { return QRatio(one_minus_p(2 * q_exponent)); }

// Sum shared by both beta_star_poly variants; only the prefactor differs.
QRatio theorem2_sum(int n, int k) {
  QRatio acc;
  for (int m = 1; m <= n; ++m) {
    const QRatio weight(Rational(binomial(n, m) * m * (m % 2 == 0 ? 1 : -1)));
    // p-exponents of q^{m-(n-1)/2-2} and q^{m-(n-1)/2}
    const int low = 2 * m - (n - 1) - 4;
    const int high = 2 * m - (n - 1);
    const QRatio first(HalfPowerPoly::q_power(k * (m - 1)), one_minus_p(low));
    const QRatio second(HalfPowerPoly::q_power(k * (m + 1)), one_minus_p(high));
    acc += weight * (first - second);
  }
  return acc;
}

}  // namespace

QRatio beta_star(int n, int k) {
  require_even_order(n, k);
  QRatio acc;
  for (int m = 1; m <= n; ++m) {
    const Rational weight(binomial(n, m) * m * (m % 2 == 0 ? 1 : -1));
    const int numerator_exp = (n - 1) * (k - 1) + 2 * k + 2 * m - 4;
    const HalfPowerPoly den = one_minus_p(2 * m - (n - 1) - 4) * one_minus_p(2 * m - (n - 1));
    acc += QRatio(HalfPowerPoly::monomial(weight, numerator_exp), den);
  }
  return acc * one_minus_q_power(1).inverse().pow(n);
}

QRatio beta_star_poly(int n, int k) {
  require_even_order(n, k);
  const QRatio prefactor = (q_int(2) * one_minus_q_power(1).pow(n)).inverse();
  return prefactor * theorem2_sum(n, k);
}

QRatio beta_star_poly_printed(int n, int k) {
  require_even_order(n, k);
  const QRatio prefactor = (q_int(2) * one_minus_q_power(1).pow(n - 1)).inverse();
  return prefactor * theorem2_sum(n, k);
}

namespace {

using GC = GeometricCombination;

// [j + shift]_{q^base} as a combination in j.
GC q_int_in_j(int base, int shift) {
  const QRatio scale = one_minus_q_power(base).inverse();
  return GC::constant(scale) + GC::geometric(-scale * QRatio::p_power(2 * base * shift), 2 * base);
}

// n! [t^n] of -t * sum_j w(j) exp(t x(j)) is -n * sum_j w(j) x(j)^{n-1}.
QRatio coefficient_from_generating_sum(int n, const GC& weight, const GC& exponent_rate) {
  const GC summand = weight * exponent_rate.pow(static_cast<unsigned>(n - 1));
  return QRatio(-n) * summand.regularized_sum();
}

}  // namespace

QRatio beta_star_oracle(int n, int k) {
  require_even_order(n, k);
  // -t sum_j q^{k-j} [j]_{q^2} exp(t [j]_q q^{(k-j)/2})
  const GC weight = GC::geometric(QRatio::p_power(2 * k), -2) * q_int_in_j(2, 0);
  const GC rate = q_int_in_j(1, 0) * GC::geometric(QRatio::p_power(k), -1);
  return coefficient_from_generating_sum(n, weight, rate);
}

QRatio beta_star_poly_oracle(int n, int k) {
  require_even_order(n, k);
  // -t sum_j q^{-j} [j+k]_{q^2} exp(t [j+k]_q q^{-j/2})
  const GC weight = GC::geometric(QRatio(1), -2) * q_int_in_j(2, k);
  const GC rate = q_int_in_j(1, k) * GC::geometric(QRatio(1), -1);
  return coefficient_from_generating_sum(n, weight, rate);
}

std::string_view to_string(BetaKind kind) {
  return kind == BetaKind::number ? "number" : "polynomial";
}

std::string_view to_string(BetaMethod method) {
  return method == BetaMethod::closed_form ? "closed_form" : "oracle";
}

BetaResult compute_beta(BetaKind kind, BetaMethod method, int n, int k) {
  BetaResult r{n, k, kind, method, {}};
  if (kind == BetaKind::number) {
    r.value = method == BetaMethod::closed_form ? beta_star(n, k) : beta_star_oracle(n, k);
  } else {
    r.value = method == BetaMethod::closed_form ? beta_star_poly(n, k) : beta_star_poly_oracle(n, k);
  }
  return r;
}

Rational beta_limit_q1(int n, int k, BetaKind which) {
  return limit_at_q1(which == BetaKind::number ? beta_star(n, k) : beta_star_poly(n, k));
}

}  // namespace qbk
