#pragma once

/**
 * @file chebyshev.hpp
 * @brief Combinatorial Chebyshev polynomials.
 *
 * Both kinds satisfy P_k = P_{k-1} - x^2 P_{k-2} and differ only in the
 * start values: T_0 = 2, T_1 = 1 and U_0 = U_1 = 1. Running the U
 * recurrence backwards gives U_{-1} = 0, which is accepted as an index.
 *
 * They relate to the classical polynomials by T_k(x) = 2 x^k T_k(1/2x)
 * and U_k(x) = x^k U_k(1/2x); nothing here evaluates the classical form.
 */

#include "balgf/bigpoly.hpp"
#include "balgf/report.hpp"

namespace balgf {

enum class ChebKind { T, U };

/// Recurrence construction, memoized. Accepts k >= -1 for U and k >= 0 for T.
Poly cheb(ChebKind kind, int k);

/// Alternating binomial sums:
///   U_k = sum_j (-1)^j C(k-j, j) x^{2j}
///   T_k = sum_j (-1)^j (C(k-j, j) + C(k-j-1, j-1)) x^{2j}
Poly cheb_explicit(ChebKind kind, int k);

inline Poly cheb_u(int k) { return cheb(ChebKind::U, k); }
inline Poly cheb_t(int k) { return cheb(ChebKind::T, k); }

/**
 * For 0 <= k <= k_max checks
 *   U_{2k}      = U_k^2 - x^2 U_{k-1}^2
 *   U_{2k+1}    = U_k^2 - 2x^2 U_k U_{k-1}
 *   T_{k+1}     = U_k - 2x^2 U_{k-1}
 *   T_{k+1}     = U_{k+1} - x^2 U_{k-1}
 *   gcd(U_k, U_{k-1}) = 1
 *   cheb == cheb_explicit for both kinds
 */
Report cheb_identity_check(int k_max);

}  // namespace balgf
