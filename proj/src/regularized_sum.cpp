#include "qbk/regularized_sum.hpp"

#include "qbk/errors.hpp"

namespace qbk {

GeometricCombination GeometricCombination::geometric(const QRatio& c, int base_exponent) {
  GeometricCombination out;
  if (!c.is_zero()) out.terms_.emplace(base_exponent, c);
  return out;
}

GeometricCombination& GeometricCombination::operator+=(const GeometricCombination& rhs) {
  for (const auto& [b, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

GeometricCombination operator*(const GeometricCombination& a, const GeometricCombination& b) {
  GeometricCombination out;
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) out += GeometricCombination::geometric(ca * cb, ba + bb);
  }
  return out;
}

GeometricCombination GeometricCombination::pow(unsigned e) const {
  GeometricCombination result = constant(QRatio(1));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

QRatio GeometricCombination::at(long j) const {
  QRatio acc;
  for (const auto& [b, c] : terms_) acc += c * QRatio::p_power(static_cast<int>(b * j));
  return acc;
}

QRatio GeometricCombination::partial_sum(long count) const {
  QRatio acc;
  for (const auto& [b, c] : terms_) {
    if (b == 0) {
      acc += c * QRatio(count);
    } else {
      const HalfPowerPoly one(1);
      acc += c * QRatio(one - HalfPowerPoly::monomial(1, static_cast<int>(b * count)),
                        one - HalfPowerPoly::monomial(1, b));
    }
  }
  return acc;
}

QRatio GeometricCombination::regularized_sum() const {
  QRatio acc;
  for (const auto& [b, c] : terms_) {
    if (b == 0) {
      throw SingularRegularization("geometric base q^0 = 1 has no regularized sum");
    }
    acc += c * QRatio(HalfPowerPoly(1), HalfPowerPoly(1) - HalfPowerPoly::monomial(1, b));
  }
  return acc;
}

}  // namespace qbk
