#pragma once

/**
 * @file lattice.hpp
 * @brief Generating functions for height-restricted u/d lattice paths.
 *
 * Paths bounded by 0 <= y <= k:
 *   F_k  ends at 0                 U_k / U_{k+1}
 *   G_k  ends at k (size steps-k)  1 / U_{k+1}
 *   H_k  ends anywhere             H_{2m}   = (U_m + x U_{m-1}) / T_{m+1}
 *                                  H_{2m+1} = U_m / (U_{m+1} - x U_m)
 * Paths bounded by -k <= y <= k:
 *   Fbar_k ends at 0               U_k / T_{k+1}
 *   Gbar_k ends at k (steps-k)     1 / T_{k+1}
 *   Hbar_k ends anywhere           Hbar_{2m}   = (U_m + x U_{m-1})^2 / T_{2m+1}
 *                                  Hbar_{2m+1} = (1 + 2x) U_m^2 / T_{2m+2}
 * Strings of vertical extent <= k (k-balanced):
 *   g_k = H_k (1 + x H_{k-1}) = R_k R_{k-1} with
 *   R_{2m} = U_m / T_{m+1},  R_{2m+1} = (U_{m+1} + x U_m) / (U_{m+1} - x U_m).
 *
 * Conventions for the g_0 edge: H_{-1} = 0 and R_{-1} = 1.
 */

#include <string>
#include <string_view>

#include "balgf/bigpoly.hpp"
#include "balgf/report.hpp"

namespace balgf {

enum class Family { F, G, Fbar, Gbar, H, Hbar, R, g };

struct PathFamily {
    Family family;
    int k;
};

std::string_view family_name(Family f);

/// Closed form; k >= 0, plus k = -1 for H and R.
RatFunc family_gf(const PathFamily& pf);

RatFunc r_gf(int k);

/// H_k (1 + x H_{k-1}); throws std::logic_error if it disagrees with R_k R_{k-1}.
RatFunc g_balanced(int k);

/// Unreduced numerator and denominator of the even/odd product form of g_k.
struct ProductForm {
    Poly num;
    Poly den;
};
ProductForm g_product_form(int k);

/**
 * For 1 <= k <= k_max checks every defining recurrence of the six path
 * families against the closed forms, plus H_k(1 + x H_{k-1}) = R_k R_{k-1},
 * g_k = product form, lowest terms of the product form, and the identities
 * R_{2m} = Fbar_m, R_{2m+1} = 1 + 2x H_{2m+1} for 2m+1 <= k_max.
 */
Report verify_table_recurrences(int k_max);

}  // namespace balgf
