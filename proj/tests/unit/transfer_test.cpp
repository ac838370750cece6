#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balgf/chebyshev.hpp"
#include "balgf/oracle.hpp"
#include "balgf/transfer.hpp"
#include "support/brute_force.hpp"

using namespace balgf;
using balgf::testing::integers;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix m(rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("adjacency matrices") {
    CHECK(adjacency(1) == int_matrix({{0}}));
    CHECK(adjacency(2) == int_matrix({{0, 1}, {1, 0}}));
    CHECK(adjacency(3) == int_matrix({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
    CHECK_THROWS_AS(adjacency(0), std::invalid_argument);
}

TEST_CASE("resolvent determinant") {
    CHECK(det_resolvent(2) == Poly{1, 0, -1});
    CHECK(det_resolvent(3) == Poly{1, 0, -2});
    CHECK(det_resolvent(0) == Poly{1});
    for (int k = 0; k <= 6; ++k) CHECK(det_resolvent(k) == testing::leibniz_det(resolvent_matrix(k)));
    for (int k = 0; k <= 16; ++k) CHECK(det_resolvent(k) == cheb_u(k));
}

TEST_CASE("bareiss determinant needs pivoting") {
    // [[0, 1], [1, x]] has determinant -1
    PolyMatrix m(2);
    m(0, 0) = Poly{};
    m(0, 1) = Poly{1};
    m(1, 0) = Poly{1};
    m(1, 1) = Poly{0, 1};
    CHECK(bareiss_determinant(m) == Poly{-1});
    CHECK(bareiss_determinant(m) == testing::leibniz_det(m));
    PolyMatrix singular(2);
    singular(0, 0) = Poly{1, 1};
    singular(0, 1) = Poly{1, 1};
    singular(1, 0) = Poly{2};
    singular(1, 1) = Poly{2};
    CHECK(bareiss_determinant(singular).is_zero());
    CHECK_THROWS_AS(solve_fraction_free(singular, {Poly{1}, Poly{1}}), std::domain_error);
}

TEST_CASE("direct entry sum") {
    CHECK(s_sum_direct(0) == RatFunc());
    CHECK(s_sum_direct(1) == RatFunc(Poly{1}));
    CHECK(s_sum_direct(2) == RatFunc(Poly{2}, Poly{1, -1}));
    CHECK(cross_equal(s_sum_direct(2), RatFunc(Poly{2, 2}, Poly{1, 0, -1})));
    // unreduced form (3 - 2x - 8x^2) / ((1 - 2x)(1 - 2x^2))
    const RatFunc s3(Poly{3, -2, -8}, Poly{1, -2} * Poly{1, 0, -2});
    CHECK(s_sum_direct(3) == s3);

    // independent Cramer-rule oracle
    for (int k = 1; k <= 5; ++k) {
        CAPTURE(k);
        const auto ref = testing::cramer_solve(resolvent_matrix(k), std::vector<Poly>(static_cast<std::size_t>(k), Poly{1}));
        RatFunc sum;
        for (const auto& v : ref) sum += v;
        CHECK(s_sum_direct(k) == sum);
        CHECK(resolvent_solution(k) == ref);
    }
}

TEST_CASE("resolvent inverse") {
    for (int k = 1; k <= 6; ++k) {
        const RatMatrix inv = resolvent_inverse(k);
        const PolyMatrix m = resolvent_matrix(k);
        RatFunc total;
        for (std::size_t r = 0; r < inv.dim(); ++r) {
            for (std::size_t c = 0; c < inv.dim(); ++c) {
                total += inv(r, c);
                RatFunc prod;
                for (std::size_t j = 0; j < inv.dim(); ++j) prod += RatFunc(m(r, j)) * inv(j, c);
                CHECK(prod == RatFunc(Poly{r == c ? 1 : 0}));
            }
        }
        CHECK(total == s_sum_direct(k));
    }
}

TEST_CASE("solution symmetry and weighted row sum") {
    for (int k = 2; k <= 12; ++k) {
        CAPTURE(k);
        const auto sol = resolvent_solution(k);
        CHECK(sol.front() == sol.back());
        RatFunc weighted = RatFunc(Poly{1, -1}) * (sol.front() + sol.back());
        for (std::size_t i = 1; i + 1 < sol.size(); ++i) weighted += RatFunc(Poly{1, -2}) * sol[i];
        CHECK(weighted == RatFunc(Poly{k}));
        // x_1 = W_k / U_k
        CHECK(sol.front() == RatFunc(w_det(k), cheb_u(k)));
    }
}

TEST_CASE("W determinant") {
    CHECK(w_det(0).is_zero());
    CHECK(w_det(1) == Poly{1});
    CHECK(w_det(2) == Poly{1, 1});
    CHECK(w_det(3) == Poly{1, 1});
    CHECK(w_det(4) == Poly{1, 1, -1});
    CHECK(w_det_closed(2) == (cheb_u(1) + Poly::x() * cheb_u(0)) * cheb_u(0));
    CHECK(w_det_closed(4) == (cheb_u(2) + Poly::x() * cheb_u(1)) * cheb_u(1));
    for (int k = 0; k <= 32; ++k) CHECK(w_det(k) == w_det_closed(k));
    for (int k = 1; k <= 6; ++k) {
        PolyMatrix m = resolvent_matrix(k);
        for (std::size_t r = 0; r < m.dim(); ++r) m(r, 0) = Poly{1};
        CHECK(w_det_cramer(k) == testing::leibniz_det(m));
    }
    for (int k = 1; k <= 14; ++k) CHECK(w_det_cramer(k) == w_det(k));
    CHECK_THROWS_AS(w_det(-1), std::invalid_argument);
}

TEST_CASE("closed entry sum") {
    CHECK(s_closed(0) == RatFunc());
    CHECK(s_closed(1) == RatFunc(Poly{1}));
    CHECK(s_closed(2) == RatFunc(Poly{2}, Poly{1, -1}));
    CHECK(s_closed(3) == RatFunc(Poly{3, -2, -8}, Poly{1, -2} * Poly{1, 0, -2}));
    for (int k = 0; k <= 12; ++k) CHECK(s_closed(k) == s_sum_direct(k));
}

TEST_CASE("balanced-string generating function") {
    CHECK(f_balanced(0) == RatFunc(Poly{1}));
    CHECK(f_balanced(1) == RatFunc(Poly{1, 1}, Poly{1, -1}));
    CHECK(f_balanced(2) == RatFunc(Poly{1, 1}, Poly{1, -1} * Poly{1, 0, -2}));
    CHECK(series_expand(f_balanced(2), 8).terms == integers({1, 2, 4, 6, 10, 14, 22, 30}));
    for (int k = 0; k <= 5; ++k) {
        const Series s = series_expand(f_balanced(k), 13);
        for (int n = 0; n <= 12; ++n) CHECK(s.terms[static_cast<std::size_t>(n)] == count_balanced_strings(k, n));
    }
}

TEST_CASE("walk generating functions") {
    CHECK(bad_walk_gf(3) == RatFunc(Poly{1, 1}, Poly{1, -1}));
    CHECK(series_expand(bad_walk_gf(3), 2).terms[1] == 2);
    CHECK(series_expand(good_walk_gf(4), 4).terms[3] == 2);
    for (int k = 3; k <= 9; ++k) {
        const Series good = series_expand(good_walk_gf(k), 30);
        for (int n = 0; n < k - 1; ++n) CHECK(good.terms[static_cast<std::size_t>(n)] == 0);
        for (const auto& c : good.terms) CHECK(c >= 0);
        CHECK(good.terms[static_cast<std::size_t>(k - 1)] == 2);
    }
    CHECK_THROWS_AS(bad_walk_gf(2), std::invalid_argument);
    CHECK_THROWS_AS(good_walk_gf(1), std::invalid_argument);
}

TEST_CASE("walk codec") {
    CHECK(encode_walk(Walk{4, {0, 1, 2, 1, 2, 3}}) == "11011");
    CHECK(decode_walk(4, "11011") == Walk{4, {0, 1, 2, 1, 2, 3}});
    CHECK(encode_walk(Walk{5, {0}}).empty());
    CHECK(decode_walk(3, "000") == Walk{3, {0, 2, 1, 0}});
    CHECK(encode_walk(Walk{3, {0, 2, 1, 0}}) == "000");

    CHECK_THROWS_AS(encode_walk(Walk{4, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(encode_walk(Walk{4, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(encode_walk(Walk{4, {}}), std::invalid_argument);
    CHECK_THROWS_AS(encode_walk(Walk{4, {0, 7}}), std::invalid_argument);
    CHECK_THROWS_AS(encode_walk(Walk{2, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(decode_walk(4, "10a1"), std::invalid_argument);
    CHECK_THROWS_AS(decode_walk(2, "1"), std::invalid_argument);
}

TEST_CASE("property: codec round trips") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> kdist(3, 12);
    std::uniform_int_distribution<std::size_t> len(0, 40);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = kdist(rng);
        const std::string bits = testing::random_bits(rng, len(rng));
        const Walk w = decode_walk(k, bits);
        CHECK(w.nodes.size() == bits.size() + 1);
        CHECK(encode_walk(w) == bits);
        CHECK(decode_walk(k, encode_walk(w)) == w);
    }
}

TEST_CASE("verification report") {
    const Report r = verify_transfer(12);
    CHECK(r.all_passed());
    CHECK(r.failures() == 0);
}
