#pragma once

#include "qbk/half_power_poly.hpp"
#include "qbk/qratio.hpp"
#include "qbk/report.hpp"

namespace qbk {

/// S_{m,n}(q) = sum_{k=1}^{n} [k]_{q^2} [k]_q^{m-1} q^{(n-k)(m+1)/2}.
HalfPowerPoly s_mn_brute(int m, int n);

/// sum_{j=0}^{k-1} [j]_{q^2} [j]_q^{n-1} q^{(n+1)(k-j)/2}, for even n >= 2.
HalfPowerPoly s_theorem3_brute(int n, int k);

/// (beta*_{n,k,q}(k) - beta*_{n,k,q}) / n.
QRatio s_theorem3_closed(int n, int k);

/// Same quotient built from beta_star_poly_printed;
/// equals (1 - q) * s_theorem3_brute(n, k).
QRatio s_theorem3_closed_printed(int n, int k);

enum class KimFormula { linear, quadratic };

VerificationReport warnaar_check(int n);
VerificationReport garrett_hummel_check(int n);
/// m in {2,3,4,5}; throws UnsupportedM otherwise.
VerificationReport schlosser_check(int m, int n);
VerificationReport kim_check(KimFormula which, int n);
VerificationReport theorem3_check(int n, int k);
/// s_theorem3_brute(n, k) against q^{(n+1)/2} * s_mn_brute(n, k-1).
VerificationReport theorem3_bridge_check(int n, int k);

// Both sides in their literal grouping, exposed so tests can evaluate them independently.
QRatio warnaar_lhs(int n);
QRatio garrett_hummel_lhs(int n);
/// [n+1 choose 2]_q^2
QRatio sum_of_cubes_rhs(int n);
QRatio schlosser_rhs(int m, int n);
QRatio kim_lhs(KimFormula which, int n);
QRatio kim_rhs(KimFormula which, int n);

}  // namespace qbk
