#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balgf/chebyshev.hpp"
#include "balgf/crosscheck.hpp"
#include "balgf/lattice.hpp"
#include "balgf/oracle.hpp"
#include "balgf/transfer.hpp"
#include "support/brute_force.hpp"

using namespace balgf;
using balgf::testing::integers;

namespace {

Series expand(Family f, int k, std::size_t n) { return series_expand(family_gf({f, k}), n); }

}  // namespace

TEST_CASE("table examples") {
    CHECK(family_gf({Family::F, 2}) == RatFunc(Poly{1, 0, -1}, Poly{1, 0, -2}));
    CHECK(expand(Family::F, 2, 7).terms == integers({1, 0, 1, 0, 2, 0, 4}));
    // Dyck paths of length 6 and height <= 2: Catalan(3) - 1
    CHECK(count_paths(make_path_spec(0, 2, Terminal::ground), 6) == 4);

    CHECK(family_gf({Family::Gbar, 1}) == RatFunc(Poly{1}, Poly{1, 0, -2}));

    CHECK(family_gf({Family::Hbar, 1}) == RatFunc(Poly{1, 2}, Poly{1, 0, -2}));
    CHECK(expand(Family::Hbar, 1, 6).terms == integers({1, 2, 2, 4, 4, 8}));

    CHECK(family_gf({Family::G, 0}) == RatFunc(Poly{1}));
    CHECK(family_gf({Family::H, 0}) == RatFunc(Poly{1}));
    CHECK(family_gf({Family::H, 1}) == RatFunc(Poly{1}, Poly{1, -1}));
    CHECK(family_gf({Family::H, -1}) == RatFunc());
}

TEST_CASE("family argument errors") {
    CHECK_THROWS_AS(family_gf({Family::F, -1}), std::out_of_range);
    CHECK_THROWS_AS(family_gf({Family::H, -2}), std::out_of_range);
    CHECK_THROWS_AS(family_gf({static_cast<Family>(42), 1}), std::invalid_argument);
    CHECK_THROWS_AS(r_gf(-2), std::out_of_range);
    CHECK_THROWS_AS(g_balanced(-1), std::out_of_range);
}

TEST_CASE("R sequence") {
    CHECK(r_gf(-1) == RatFunc(Poly{1}));
    CHECK(r_gf(0) == RatFunc(Poly{1}));
    CHECK(r_gf(1) == RatFunc(Poly{1, 1}, Poly{1, -1}));
    CHECK(r_gf(2) == RatFunc(Poly{1}, Poly{1, 0, -2}));
}

TEST_CASE("g examples") {
    CHECK(g_balanced(0) == RatFunc(Poly{1}));
    CHECK(g_balanced(1) == RatFunc(Poly{1, 1}, Poly{1, -1}));
    CHECK(series_expand(g_balanced(1), 6).terms == integers({1, 2, 2, 2, 2, 2}));
    CHECK(g_balanced(2) == RatFunc(Poly{1, 1}, Poly{1, -1} * Poly{1, 0, -2}));
    CHECK(series_expand(g_balanced(2), 8).terms == integers({1, 2, 4, 6, 10, 14, 22, 30}));
    CHECK(g_balanced(3) == RatFunc(Poly{1, 1, -1}, Poly{1, 0, -2} * Poly{1, -1, -1}));
    CHECK(series_expand(g_balanced(3), 6).terms == integers({1, 2, 4, 8, 14, 26}));
}

TEST_CASE("g routes agree with each other and with the transfer route") {
    for (int k = 0; k <= 12; ++k) {
        CAPTURE(k);
        const RatFunc g = g_balanced(k);
        CHECK(g == r_gf(k) * r_gf(k - 1));
        const ProductForm pf = g_product_form(k);
        CHECK(g == RatFunc(pf.num, pf.den));
        CHECK(gcd(pf.num, pf.den) == Poly{1});
        CHECK(gcd(g.num(), g.den()) == Poly{1});
        CHECK(g == f_balanced(k));
    }
}

TEST_CASE("recurrence examples") {
    const RatFunc f1 = family_gf({Family::F, 1});
    const RatFunc f2 = family_gf({Family::F, 2});
    CHECK(f1 == RatFunc(Poly{1}, Poly{1, 0, -1}));
    CHECK(RatFunc(Poly{1}) + RatFunc(Poly{0, 0, 1}) * f1 * f2 == f2);

    const RatFunc h0 = family_gf({Family::H, 0});
    const RatFunc f0 = family_gf({Family::F, 0});
    const RatFunc h1 = family_gf({Family::H, 1});
    CHECK(h0 == RatFunc(Poly{1}));
    CHECK(f0 == RatFunc(Poly{1}));
    CHECK(RatFunc(Poly{1}) + RatFunc(Poly{0, 1}) * h0 + RatFunc(Poly{0, 0, 1}) * f0 * h1 == h1);

    const RatFunc hbar3 = family_gf({Family::Hbar, 3});
    const RatFunc h2 = family_gf({Family::H, 2});
    CHECK(RatFunc(Poly{1}) + RatFunc(Poly{0, 2}) * h2 + RatFunc(Poly{0, 0, 2}) * f2 * hbar3 == hbar3);
}

TEST_CASE("recurrence report") {
    const Report r = verify_table_recurrences(12);
    CHECK(r.all_passed());
    for (const auto& e : r.entries()) {
        CAPTURE(e.identity);
        CAPTURE(e.k);
        CHECK(e.passed);
    }
    CHECK_THROWS_AS(verify_table_recurrences(0), std::invalid_argument);
}

TEST_CASE("R parity identities") {
    for (int m = 0; m <= 6; ++m) {
        CHECK(r_gf(2 * m) == family_gf({Family::Fbar, m}));
        CHECK(r_gf(2 * m + 1) == RatFunc(Poly{1}) + RatFunc(Poly{0, 2}) * family_gf({Family::H, 2 * m + 1}));
    }
}

TEST_CASE("families against brute-force path counts") {
    for (int k = 0; k <= 6; ++k) {
        for (Family f : {Family::F, Family::G, Family::Fbar, Family::Gbar, Family::H, Family::Hbar}) {
            CAPTURE(family_name(f));
            CAPTURE(k);
            const PathSpec spec = family_path_spec(f, k);
            const Series s = expand(f, k, 17);
            for (int n = 0; n <= 16; ++n) CHECK(s.terms[static_cast<std::size_t>(n)] == count_paths(spec, n));
        }
    }
}

TEST_CASE("monotone in k and bounded by 2^n") {
    const std::size_t n = 24;
    std::vector<Series> s;
    for (int k = 0; k <= 10; ++k) s.push_back(series_expand(g_balanced(k), n));
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(s[k].terms[i] <= s[k + 1].terms[i]);
            CHECK(s[k + 1].terms[i] <= Integer(1) << static_cast<mp_bitcnt_t>(i));
        }
    }
}
