#pragma once

#include <map>

#include "qbk/qratio.hpp"

namespace qbk {

/**
 * A function of a summation index j >= 0 of the form  sum_b c_b * (p^b)^j.
 *
 * Products of q-integers in j ([j]_q, [j+k]_{q^2}, q^{-j/2}, ...) are closed under
 * this representation, which lets an infinite j-sum be regularized term by term:
 *   sum_{j>=0} c * x^j  ->  c / (1 - x)    for x != 1.
 */
class GeometricCombination {
 public:
  using Terms = std::map<int, QRatio>;  // p-exponent of the base -> coefficient

  GeometricCombination() = default;
  static GeometricCombination constant(const QRatio& c) { return geometric(c, 0); }
  /// c * (p^base_exponent)^j
  static GeometricCombination geometric(const QRatio& c, int base_exponent);

  const Terms& terms() const noexcept { return terms_; }

  GeometricCombination& operator+=(const GeometricCombination& rhs);
  friend GeometricCombination operator+(GeometricCombination a, const GeometricCombination& b) {
    return a += b;
  }
  friend GeometricCombination operator*(const GeometricCombination& a, const GeometricCombination& b);
  GeometricCombination pow(unsigned e) const;

  QRatio at(long j) const;
  /// sum_{j=0}^{count-1}
  QRatio partial_sum(long count) const;
  /// Regularized sum_{j>=0}; throws SingularRegularization on a base of exactly 1.
  QRatio regularized_sum() const;

 private:
  Terms terms_;
};

}  // namespace qbk
