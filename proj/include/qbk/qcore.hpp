#pragma once

#include "qbk/half_power_poly.hpp"
#include "qbk/qratio.hpp"

namespace qbk {

/// Index a of a q-integer [a]_q, stored doubled so half-integers are exact.
struct QIndex {
  int twice_index = 0;

  static constexpr QIndex integer(int a) { return QIndex{2 * a}; }
  /// a = twice / 2, e.g. half(3) is 3/2.
  static constexpr QIndex half(int twice) { return QIndex{twice}; }

  friend constexpr bool operator==(QIndex, QIndex) = default;
};

/// [a]_q = (q^a - 1)/(q - 1). Negative indices throw std::invalid_argument.
QRatio q_int(QIndex a);
inline QRatio q_int(int a) { return q_int(QIndex::integer(a)); }

/// [k]_{q^m} = (q^{mk} - 1)/(q^m - 1), for k >= 0 and m >= 1.
QRatio q_int_base(int k, int m);

/// Gaussian binomial coefficient; zero when k > n.
HalfPowerPoly q_binomial(int n, int k);

}  // namespace qbk
