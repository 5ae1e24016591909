#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qbk/qratio.hpp"
#include "qbk/rational.hpp"

namespace qbk {

enum class ZetaVariant {
  shifted,  ///< sum_{n>=0} [n+k]_{q^2} q^{-n(s+2)/2} / [n+k]_q^s
  plain,    ///< sum_{n>=1} [n]_{q^2} q^{(k-n)(2-s)/2} / [n]_q^s
};

std::string_view to_string(ZetaVariant v);
ZetaVariant zeta_variant_from_string(std::string_view name);

struct ZetaQuery {
  Rational s;
  Rational q;  ///< evaluation point; must exceed 1
  int k = 1;
  Rational tolerance;
};

struct ZetaResult {
  ZetaVariant variant = ZetaVariant::shifted;
  ZetaQuery query;
  Rational value;
  long terms_used = 0;

  /// {"variant","s","q","k","tolerance","value","terms_used"}
  nlohmann::ordered_json to_json() const;
};

/**
 * Truncated series value with a rigorous geometric tail bound.
 *
 * Only q > 1 converges (for q < 1 the factor q^{-n(s+2)/2} grows). Every term
 * ratio from index N on is bounded by
 *   r_N = ([N+1]_{q^2}/[N]_{q^2}) * q^{-s} * q^{-(s+2)/2}     (shifted)
 *   r_N = ([N+1]_{q^2}/[N]_{q^2}) * q^{-s} * q^{(s-2)/2}      (plain)
 * and summation stops after the first term t with t * r/(1 - r) < tolerance, so the
 * result is within tolerance of the series limit.
 *
 * Throws DivergentParameters when the asymptotic ratio (q^{1-3s/2} shifted,
 * q^{1-s/2} plain) is >= 1 or q <= 1; IrrationalTerm when s is not an integer, or
 * s is odd and q is not a rational square.
 */
ZetaResult zeta_series(const ZetaQuery& query, ZetaVariant variant);

/// zeta*_{k,q}(1-n) = -beta*_{n,k,q}/n, taken as the defining special-value formula.
QRatio zeta_special(int n, int k);

}  // namespace qbk
