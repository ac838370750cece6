#pragma once

/**
 * @file reconcile.hpp
 * @brief Polynomials linking the transfer-matrix and lattice-path formulas.
 *
 *   A_{2m} = U_m - x U_{m-1}       A_{2m+1} = T_{m+1} = U_m - 2x^2 U_{m-1}
 *   B_{2m} = U_m + x U_{m-1}       B_{2m+1} = U_m
 *   C_k = (k A_k - 2x B_{k-1}) / (1 - 2x)
 *   P_k = (k U_k - 2x W_k) / (1 - 2x)
 *
 * with U_k = A_k B_k, P_k = B_k C_k, W_k = B_k B_{k-1}, R_k = B_{k+1}/A_{k+1}
 * and the cross-term identity
 *
 *   C_k A_{k-1} - C_{k-1} A_k = W_k.
 *
 * The index-shifted form C_k A_{k+1} - C_{k-1} A_k = W_k
 * already fails at k = 2 and is kept only as
 * shifted_cross_term_holds() to document the discrepancy.
 */

#include "balgf/bigpoly.hpp"
#include "balgf/report.hpp"

namespace balgf {

/// Accepts k >= -1 (B_{-1} = 0); A_{-1} is not defined.
Poly a_poly(int k);
Poly b_poly(int k);

struct ReconcileSet {
    int k = 0;
    Poly a;
    Poly b;
    Poly c;
    Poly p;
};

/// Throws std::domain_error if C_k or P_k is not divisible by 1 - 2x.
ReconcileSet reconcile_set(int k);

/// C_k A_{k-1} - C_{k-1} A_k == W_k, for k >= 1.
bool cross_term_holds(int k);

/// C_k A_{k+1} - C_{k-1} A_k == W_k, for k >= 1.
bool shifted_cross_term_holds(int k);

/**
 * For 0 <= k <= k_max: P_k = B_k C_k, U_k = A_k B_k, W_k = B_k B_{k-1},
 * R_k = B_{k+1}/A_{k+1}, f_k = W_{k+1}/(A_{k+1} A_k) = g_k, and (k >= 1)
 * the cross-term identity. Also records that the index-shifted cross-term
 * variant fails at k = 2.
 */
Report verify_reconciliation(int k_max);

/// k A_k(1/2) = B_{k-1}(1/2) and k U_k(1/2) = W_k(1/2), by exact rational evaluation.
Report c_divisibility_check(int k_max);

}  // namespace balgf
