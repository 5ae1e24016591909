#include "qbk/qcore.hpp"

#include <stdexcept>
#include <string>

namespace qbk {

namespace {

// (p^a - 1)/(p^b - 1) for a >= 0, b > 0.
QRatio geometric_ratio(int a, int b) {
  const HalfPowerPoly one(1);
  return QRatio(HalfPowerPoly::monomial(1, a) - one, HalfPowerPoly::monomial(1, b) - one);
}

}  // namespace

QRatio q_int(QIndex a) {
  if (a.twice_index < 0) {
    throw std::invalid_argument("negative q-integer index " + std::to_string(a.twice_index) + "/2");
  }
  return geometric_ratio(a.twice_index, 2);
}

QRatio q_int_base(int k, int m) {
  if (k < 0) throw std::invalid_argument("q_int_base requires k >= 0");
  if (m < 1) throw std::invalid_argument("q_int_base requires m >= 1");
  return geometric_ratio(2 * m * k, 2 * m);
}

HalfPowerPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_binomial requires n, k >= 0");
  if (k > n) return {};
  const HalfPowerPoly one(1);
  QRatio acc(1);
  for (int j = 1; j <= k; ++j) {
    acc *= QRatio(one - HalfPowerPoly::q_power(n + 1 - j), one - HalfPowerPoly::q_power(j));
  }
  auto poly = is_polynomial(acc);
  if (!poly) throw std::logic_error("q-binomial product did not reduce to a polynomial");
  return *poly;
}

}  // namespace qbk
