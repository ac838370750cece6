#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force counts of strings, walks and lattice paths.
 *
 * Nothing here touches generating functions. Exhaustive counters visit all
 * 2^n bit patterns; the path counters also have a dynamic-programming form
 * that is checked against the exhaustive one before being used for larger n.
 *
 * Every counter refuses to run past an enumeration budget (default 2^24
 * states, overridable through BALGF_ENUM_BUDGET) and throws BudgetExceeded.
 * Exhaustive counts may be split over worker threads by prefix; the
 * result does not depend on the number of workers.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "balgf/bigpoly.hpp"

namespace balgf {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;
inline constexpr const char* kBudgetEnvVar = "BALGF_ENUM_BUDGET";

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// kDefaultEnumerationBudget unless BALGF_ENUM_BUDGET holds a positive integer.
std::uint64_t budget_from_env();

struct OracleOptions {
    std::uint64_t budget = budget_from_env();
    unsigned workers = 1;
};

/// max prefix sum - min prefix sum <= k, with '1' = +1 and '0' = -1.
bool is_k_balanced(std::string_view bits, int k);

/// Same predicate straight from the definition: every substring has |#1 - #0| <= k.
bool is_k_balanced_by_substrings(std::string_view bits, int k);

Integer count_balanced_strings(int k, int n, const OracleOptions& opts = {});

/// Length-n walks from v_0 on C_k that visit every node (cover) or miss one (!cover).
Integer count_walks(int k, int n, bool cover, const OracleOptions& opts = {});

enum class Terminal { ground, top, any };
enum class SizeConvention { steps, steps_minus_top };

struct PathSpec {
    int lower = 0;
    int upper = 0;
    Terminal terminal = Terminal::ground;
    SizeConvention size = SizeConvention::steps;
};

/// Fills in the size convention forced by the terminal condition.
PathSpec make_path_spec(int lower, int upper, Terminal terminal);

/// Number of step sequences for a given size: size, or size + upper when ending at the top.
int path_steps(const PathSpec& spec, int size);

/// Dynamic programming over (step, height).
Integer count_paths(const PathSpec& spec, int size, const OracleOptions& opts = {});

/// All 2^steps u/d sequences.
Integer count_paths_exhaustive(const PathSpec& spec, int size, const OracleOptions& opts = {});

/// n-step u/d paths with max height - min height <= k.
Integer count_extent_paths(int k, int n, const OracleOptions& opts = {});

enum class CountWhat { strings, walks, paths, extent };

struct CountQuery {
    CountWhat what = CountWhat::strings;
    int k = 0;
    int n = 0;
    bool cover = false;
    PathSpec path{};
};

Integer count(const CountQuery& query, const OracleOptions& opts = {});

}  // namespace balgf
