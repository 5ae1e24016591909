#pragma once

#include <string_view>

#include "qbk/qratio.hpp"

namespace qbk {

/// beta*_{0,k,q}; the n = 0 coefficient vanishes for every k.
inline QRatio beta_star_order_zero() { return QRatio(); }

/**
 * q-Bernoulli number beta*_{n,k,q} for even n >= 2 from its closed form
 *
 *   (1/(1-q))^n sum_{m=0}^{n} C(n,m) (-1)^m m q^{(n-1)(k-1)/2 + k + m - 2}
 *              / ((1 - q^{m-(n-1)/2-2}) (1 - q^{m-(n-1)/2})).
 *
 * For even n the m-sum is antisymmetric under m -> n - m and the value is 0.
 * Throws OddOrder for odd n.
 */
QRatio beta_star(int n, int k);

/**
 * q-Bernoulli polynomial beta*_{n,k,q}(k) for even n >= 2:
 *
 *   1/([2]_q (1-q)^n) sum_{m=0}^{n} C(n,m) (-1)^m
 *       ( m q^{k(m-1)}/(1 - q^{m-(n-1)/2-2}) - m q^{k(m+1)}/(1 - q^{m-(n-1)/2}) ).
 *
 * The frequently quoted variant with (1-q)^{n-1} in the prefactor is off by a factor
 * (1-q) against the generating function; it survives as beta_star_poly_printed.
 */
QRatio beta_star_poly(int n, int k);

/// The same sum under the prefactor 1/([2]_q (1-q)^{n-1}), kept verbatim.
/// Equals (1 - q) * beta_star_poly(n, k).
QRatio beta_star_poly_printed(int n, int k);

/// beta*_{n,k,q} from the regularized j-sum of its generating function.
QRatio beta_star_oracle(int n, int k);

/// beta*_{n,k,q}(k) from the regularized j-sum of its generating function.
QRatio beta_star_poly_oracle(int n, int k);

enum class BetaKind { number, polynomial };
enum class BetaMethod { closed_form, oracle };

std::string_view to_string(BetaKind kind);
std::string_view to_string(BetaMethod method);

struct BetaResult {
  int n = 0;
  int k = 0;
  BetaKind kind = BetaKind::number;
  BetaMethod method = BetaMethod::closed_form;
  QRatio value;
};

BetaResult compute_beta(BetaKind kind, BetaMethod method, int n, int k);

/// Exact q -> 1 limit of the closed-form value.
Rational beta_limit_q1(int n, int k, BetaKind which);

}  // namespace qbk
