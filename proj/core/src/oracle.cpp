#include "balgf/oracle.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <thread>
#include <vector>

namespace balgf {
namespace {

constexpr int kMaxEnumerationBits = 62;

void require_budget(std::uint64_t states, const OracleOptions& opts, std::string_view what) {
    if (states > opts.budget) {
        throw BudgetExceeded(std::string(what) + " needs " + std::to_string(states) +
                             " states, budget is " + std::to_string(opts.budget) + " (set " +
                             kBudgetEnvVar + " to raise it)");
    }
}

std::uint64_t exhaustive_states(int n, const OracleOptions& opts, std::string_view what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": length must be >= 0");
    if (n > kMaxEnumerationBits) {
        throw BudgetExceeded(std::string(what) + ": 2^" + std::to_string(n) + " states is beyond enumeration range");
    }
    const std::uint64_t states = std::uint64_t{1} << n;
    require_budget(states, opts, what);
    return states;
}

// Sums pred(mask) over [0, states), split into contiguous ranges per worker.
template <typename Pred>
Integer partitioned_count(std::uint64_t states, unsigned workers, Pred pred) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(states, 256))));
    std::vector<std::uint64_t> partial(workers, 0);
    auto run = [&](unsigned w) {
        const std::uint64_t lo = states * w / workers;
        const std::uint64_t hi = states * (w + 1) / workers;
        std::uint64_t c = 0;
        for (std::uint64_t mask = lo; mask < hi; ++mask) c += pred(mask) ? 1 : 0;
        partial[w] = c;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    Integer total = 0;
    for (auto c : partial) total += Integer(static_cast<unsigned long>(c));
    return total;
}

// Bit i of mask is step i: 1 = up, 0 = down.
bool spread_within(std::uint64_t mask, int n, int k) {
    int h = 0, lo = 0, hi = 0;
    for (int i = 0; i < n; ++i) {
        h += (mask >> i) & 1 ? 1 : -1;
        lo = std::min(lo, h);
        hi = std::max(hi, h);
        if (hi - lo > k) return false;
    }
    return true;
}

void validate_spec(const PathSpec& spec) {
    if (spec.lower > 0 || spec.upper < 0) {
        throw std::invalid_argument("path bounds must satisfy lower <= 0 <= upper");
    }
    const bool top = spec.terminal == Terminal::top;
    if (top != (spec.size == SizeConvention::steps_minus_top)) {
        throw std::invalid_argument("paths ending at the top are sized as steps - upper, all others as steps");
    }
}

bool terminal_ok(const PathSpec& spec, int h) {
    switch (spec.terminal) {
        case Terminal::ground: return h == 0;
        case Terminal::top: return h == spec.upper;
        case Terminal::any: return true;
    }
    return false;
}

}  // namespace

std::uint64_t budget_from_env() {
    const char* raw = std::getenv(kBudgetEnvVar);
    if (raw == nullptr || *raw == '\0') return kDefaultEnumerationBudget;
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0' || v == 0) return kDefaultEnumerationBudget;
    return v;
}

bool is_k_balanced(std::string_view bits, int k) {
    if (k < 0) throw std::invalid_argument("balance bound must be >= 0");
    int h = 0, lo = 0, hi = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("not a bit string");
        h += c == '1' ? 1 : -1;
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    return hi - lo <= k;
}

bool is_k_balanced_by_substrings(std::string_view bits, int k) {
    if (k < 0) throw std::invalid_argument("balance bound must be >= 0");
    for (std::size_t i = 0; i < bits.size(); ++i) {
        int delta = 0;
        for (std::size_t j = i; j < bits.size(); ++j) {
            if (bits[j] != '0' && bits[j] != '1') throw std::invalid_argument("not a bit string");
            delta += bits[j] == '1' ? 1 : -1;
            if (delta > k || delta < -k) return false;
        }
    }
    return true;
}

Integer count_balanced_strings(int k, int n, const OracleOptions& opts) {
    if (k < 0) throw std::invalid_argument("balance bound must be >= 0");
    const std::uint64_t states = exhaustive_states(n, opts, "string enumeration");
    return partitioned_count(states, opts.workers, [=](std::uint64_t mask) { return spread_within(mask, n, k); });
}

Integer count_walks(int k, int n, bool cover, const OracleOptions& opts) {
    if (k < 3) throw std::invalid_argument("walks need a circular digraph with k >= 3 nodes");
    if (k > 64) throw std::invalid_argument("walk enumeration supports at most 64 nodes");
    const std::uint64_t states = exhaustive_states(n, opts, "walk enumeration");
    const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    return partitioned_count(states, opts.workers, [=](std::uint64_t mask) {
        int v = 0;
        std::uint64_t seen = 1;
        for (int i = 0; i < n; ++i) {
            v = (mask >> i) & 1 ? (v + 1) % k : (v + k - 1) % k;
            seen |= std::uint64_t{1} << v;
        }
        return (seen == all) == cover;
    });
}

PathSpec make_path_spec(int lower, int upper, Terminal terminal) {
    return {lower, upper, terminal,
            terminal == Terminal::top ? SizeConvention::steps_minus_top : SizeConvention::steps};
}

int path_steps(const PathSpec& spec, int size) {
    return spec.size == SizeConvention::steps_minus_top ? size + spec.upper : size;
}

Integer count_paths(const PathSpec& spec, int size, const OracleOptions& opts) {
    validate_spec(spec);
    if (size < 0) throw std::invalid_argument("path size must be >= 0");
    const int steps = path_steps(spec, size);
    const auto width = static_cast<std::size_t>(spec.upper - spec.lower + 1);
    require_budget(static_cast<std::uint64_t>(steps + 1) * width, opts, "path DP");

    const auto origin = static_cast<std::size_t>(-spec.lower);
    std::vector<Integer> cur(width), next(width);
    cur[origin] = 1;
    for (int s = 0; s < steps; ++s) {
        std::fill(next.begin(), next.end(), Integer(0));
        for (std::size_t h = 0; h < width; ++h) {
            if (cur[h] == 0) continue;
            if (h + 1 < width) next[h + 1] += cur[h];
            if (h > 0) next[h - 1] += cur[h];
        }
        std::swap(cur, next);
    }
    Integer total = 0;
    for (std::size_t h = 0; h < width; ++h) {
        if (terminal_ok(spec, static_cast<int>(h) + spec.lower)) total += cur[h];
    }
    return total;
}

Integer count_paths_exhaustive(const PathSpec& spec, int size, const OracleOptions& opts) {
    validate_spec(spec);
    if (size < 0) throw std::invalid_argument("path size must be >= 0");
    const int steps = path_steps(spec, size);
    const std::uint64_t states = exhaustive_states(steps, opts, "path enumeration");
    return partitioned_count(states, opts.workers, [=](std::uint64_t mask) {
        int h = 0;
        for (int i = 0; i < steps; ++i) {
            h += (mask >> i) & 1 ? 1 : -1;
            if (h < spec.lower || h > spec.upper) return false;
        }
        return terminal_ok(spec, h);
    });
}

Integer count_extent_paths(int k, int n, const OracleOptions& opts) {
    if (k < 0) throw std::invalid_argument("extent bound must be >= 0");
    if (n < 0) throw std::invalid_argument("path length must be >= 0");
    // state (a, s): a = height - running min, s = running max - running min
    const auto dim = static_cast<std::size_t>(k + 1);
    require_budget(static_cast<std::uint64_t>(n + 1) * dim * dim, opts, "extent DP");
    std::vector<Integer> cur(dim * dim), next(dim * dim);
    auto at = [dim](std::size_t a, std::size_t s) { return a * dim + s; };
    cur[at(0, 0)] = 1;
    for (int step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), Integer(0));
        for (std::size_t s = 0; s < dim; ++s) {
            for (std::size_t a = 0; a <= s; ++a) {
                const Integer& c = cur[at(a, s)];
                if (c == 0) continue;
                const std::size_t s_up = std::max(s, a + 1);
                if (s_up < dim) next[at(a + 1, s_up)] += c;
                if (a > 0) {
                    next[at(a - 1, s)] += c;
                } else if (s + 1 < dim) {
                    next[at(0, s + 1)] += c;
                }
            }
        }
        std::swap(cur, next);
    }
    Integer total = 0;
    for (const auto& c : cur) total += c;
    return total;
}

Integer count(const CountQuery& q, const OracleOptions& opts) {
    switch (q.what) {
        case CountWhat::strings: return count_balanced_strings(q.k, q.n, opts);
        case CountWhat::walks: return count_walks(q.k, q.n, q.cover, opts);
        case CountWhat::paths: return count_paths(q.path, q.n, opts);
        case CountWhat::extent: return count_extent_paths(q.k, q.n, opts);
    }
    throw std::invalid_argument("unknown count query");
}

}  // namespace balgf
