#include "balgf/crosscheck.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "balgf/chebyshev.hpp"
#include "balgf/reconcile.hpp"
#include "balgf/transfer.hpp"

namespace balgf {
namespace {

// Coefficients of x^0, x^2, x^4, x^6 for k = 0..7.
struct GoldenRow {
    int k;
    std::array<long, 4> t;
    std::array<long, 4> u;
};

constexpr std::array<GoldenRow, 8> kGoldenTable{{
    {0, {2, 0, 0, 0}, {1, 0, 0, 0}},
    {1, {1, 0, 0, 0}, {1, 0, 0, 0}},
    {2, {1, -2, 0, 0}, {1, -1, 0, 0}},
    {3, {1, -3, 0, 0}, {1, -2, 0, 0}},
    {4, {1, -4, 2, 0}, {1, -3, 1, 0}},
    {5, {1, -5, 5, 0}, {1, -4, 3, 0}},
    {6, {1, -6, 9, -2}, {1, -5, 6, -1}},
    {7, {1, -7, 14, -7}, {1, -6, 10, -4}},
}};

Poly even_poly(const std::array<long, 4>& c) {
    return Poly{c[0], 0, c[1], 0, c[2], 0, c[3]};
}

// "" on agreement, otherwise the first mismatching index.
std::string first_mismatch(const Series& s, int n_max, auto&& count_at) {
    for (int n = 0; n <= n_max; ++n) {
        const Integer expected = count_at(n);
        if (s.terms[static_cast<std::size_t>(n)] != expected) {
            return "n=" + std::to_string(n) + " series=" + s.terms[static_cast<std::size_t>(n)].get_str() +
                   " brute=" + expected.get_str();
        }
    }
    return {};
}

void add_series_check(Report& report, const std::string& identity, int k, const RatFunc& f, int n_max,
                      auto&& count_at) {
    const Series s = series_expand(f, static_cast<std::size_t>(n_max) + 1);
    std::string mismatch = first_mismatch(s, n_max, count_at);
    const bool ok = mismatch.empty();
    report.add(identity, k, ok, std::move(mismatch));
}

std::string bits_of(unsigned mask, int len) {
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i)
        if ((mask >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : {Suite::cheb, Suite::tables, Suite::transfer, Suite::reconcile, Suite::oracle, Suite::all}) {
        if (suite_name(s) == name) return s;
    }
    return std::nullopt;
}

std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::cheb: return "cheb";
        case Suite::tables: return "tables";
        case Suite::transfer: return "transfer";
        case Suite::reconcile: return "reconcile";
        case Suite::oracle: return "oracle";
        case Suite::all: return "all";
    }
    return "?";
}

Report check_cheb_golden_table() {
    Report report("cheb");
    for (const auto& row : kGoldenTable) {
        const Poly t = even_poly(row.t);
        const Poly u = even_poly(row.u);
        report.add("T_k table row (recurrence)", row.k, cheb_t(row.k) == t, t.to_string());
        report.add("T_k table row (explicit sum)", row.k, cheb_explicit(ChebKind::T, row.k) == t);
        report.add("U_k table row (recurrence)", row.k, cheb_u(row.k) == u, u.to_string());
        report.add("U_k table row (explicit sum)", row.k, cheb_explicit(ChebKind::U, row.k) == u);
    }
    return report;
}

PathSpec family_path_spec(Family family, int k) {
    switch (family) {
        case Family::F: return make_path_spec(0, k, Terminal::ground);
        case Family::G: return make_path_spec(0, k, Terminal::top);
        case Family::H: return make_path_spec(0, k, Terminal::any);
        case Family::Fbar: return make_path_spec(-k, k, Terminal::ground);
        case Family::Gbar: return make_path_spec(-k, k, Terminal::top);
        case Family::Hbar: return make_path_spec(-k, k, Terminal::any);
        case Family::R:
        case Family::g: break;
    }
    throw std::invalid_argument("family " + std::string(family_name(family)) + " is not a bounded path class");
}

Report verify_against_oracle(int k_max, int n_max, const OracleOptions& opts) {
    if (k_max < 1 || n_max < 1) throw std::invalid_argument("verify_against_oracle needs k_max, n_max >= 1");
    Report report("oracle");

    // the fast counters first, against raw enumeration
    const int self_n = std::min(n_max, 14);
    for (int k = 0; k <= std::min(k_max, 6); ++k) {
        for (Family f : {Family::F, Family::G, Family::Fbar, Family::Gbar, Family::H, Family::Hbar}) {
            const PathSpec spec = family_path_spec(f, k);
            bool ok = true;
            for (int n = 0; n <= self_n && ok; ++n) {
                if (path_steps(spec, n) > 20) break;
                ok = count_paths(spec, n, opts) == count_paths_exhaustive(spec, n, opts);
            }
            report.add("path DP = exhaustive (" + std::string(family_name(f)) + ")", k, ok);
        }
    }
    const int pred_len = std::min(n_max, 12);
    bool pred_ok = true;
    for (int len = 0; len <= pred_len && pred_ok; ++len) {
        for (unsigned mask = 0; mask < (1u << len) && pred_ok; ++mask) {
            const std::string s = bits_of(mask, len);
            for (int k = 0; k <= len; ++k) pred_ok = pred_ok && is_k_balanced(s, k) == is_k_balanced_by_substrings(s, k);
        }
    }
    report.add("prefix-spread balance = substring balance", pred_len, pred_ok);

    for (int k = 0; k <= k_max; ++k) {
        auto strings = [&](int n) { return count_balanced_strings(k, n, opts); };
        add_series_check(report, "series(g_k) = k-balanced strings", k, g_balanced(k), n_max, strings);
        add_series_check(report, "series(f_k) = k-balanced strings", k, f_balanced(k), n_max, strings);
        bool extent_ok = true;
        for (int n = 0; n <= n_max && extent_ok; ++n) extent_ok = count_extent_paths(k, n, opts) == strings(n);
        report.add("extent paths = k-balanced strings", k, extent_ok);

        for (Family f : {Family::F, Family::G, Family::Fbar, Family::Gbar, Family::H, Family::Hbar}) {
            const PathSpec spec = family_path_spec(f, k);
            add_series_check(report, "series(" + std::string(family_name(f)) + "_k) = path count", k,
                             family_gf({f, k}), n_max, [&](int n) { return count_paths(spec, n, opts); });
        }
    }

    for (int k = 3; k <= k_max + 2; ++k) {
        add_series_check(report, "series(bad walks) = walk count", k, bad_walk_gf(k), n_max,
                         [&](int n) { return count_walks(k, n, false, opts); });
        add_series_check(report, "series(good walks) = walk count", k, good_walk_gf(k), n_max,
                         [&](int n) { return count_walks(k, n, true, opts); });
        bool bij = true;
        for (int n = 0; n <= n_max && bij; ++n) {
            bij = count_walks(k, n, false, opts) == count_balanced_strings(k - 2, n, opts);
        }
        report.add("bad walks on C_k = (k-2)-balanced strings", k, bij);
    }
    return report;
}

Report run_suite(Suite suite, int k_max, int n_max, const OracleOptions& opts) {
    if (k_max < 1 || n_max < 1) throw std::invalid_argument("k_max and n_max must be >= 1");
    Report out(std::string(suite_name(suite)));
    const bool all = suite == Suite::all;
    if (all || suite == Suite::cheb) {
        out.append(check_cheb_golden_table());
        out.append(cheb_identity_check(k_max));
    }
    if (all || suite == Suite::tables) out.append(verify_table_recurrences(k_max));
    if (all || suite == Suite::transfer) out.append(verify_transfer(k_max));
    if (all || suite == Suite::reconcile) {
        out.append(verify_reconciliation(k_max));
        out.append(c_divisibility_check(k_max));
    }
    if (all || suite == Suite::oracle) out.append(verify_against_oracle(k_max, n_max, opts));
    return out;
}

}  // namespace balgf
