#pragma once

/**
 * @file crosscheck.hpp
 * @brief Verification suites that tie the generating functions to each
 *        other and to the brute-force counters.
 */

#include <optional>
#include <string_view>

#include "balgf/lattice.hpp"
#include "balgf/oracle.hpp"
#include "balgf/report.hpp"

namespace balgf {

enum class Suite { cheb, tables, transfer, reconcile, oracle, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// The k = 0..7 rows of the combinatorial Chebyshev table, both constructions.
Report check_cheb_golden_table();

/// The brute-force path class counted by a lattice path family with parameter k.
PathSpec family_path_spec(Family family, int k);

/**
 * Series against brute force, for n <= n_max:
 *   g_k and f_k vs k-balanced strings (0 <= k <= k_max),
 *   F, G, Fbar, Gbar, H, Hbar vs path counts (0 <= k <= k_max),
 *   extent paths vs strings, bad/good walks vs walk counts and the
 *   bad-walk / (k-2)-balanced correspondence (3 <= k <= k_max + 2),
 * plus self-validation of the DP path counter and the balance predicate.
 */
Report verify_against_oracle(int k_max, int n_max, const OracleOptions& opts = {});

Report run_suite(Suite suite, int k_max, int n_max, const OracleOptions& opts = {});

}  // namespace balgf
