#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "balgf/chebyshev.hpp"

using namespace balgf;

namespace {

Integer binom(long n, long r) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

}  // namespace

TEST_CASE("recurrence construction") {
    CHECK(cheb(ChebKind::U, 4) == Poly{1, 0, -3, 0, 1});
    CHECK(cheb(ChebKind::T, 6) == Poly{1, 0, -6, 0, 9, 0, -2});
    CHECK(cheb(ChebKind::U, -1).is_zero());
    CHECK(cheb(ChebKind::T, 0) == Poly{2});
    CHECK(cheb(ChebKind::U, 0) == Poly{1});
    CHECK_THROWS_AS(cheb(ChebKind::U, -2), std::out_of_range);
    CHECK_THROWS_AS(cheb(ChebKind::T, -1), std::out_of_range);
}

TEST_CASE("explicit sums") {
    CHECK(cheb_explicit(ChebKind::U, 5) == Poly{1, 0, -4, 0, 3});
    CHECK(cheb_explicit(ChebKind::T, 7) == Poly{1, 0, -7, 0, 14, 0, -7});
    CHECK(cheb_explicit(ChebKind::U, 0) == Poly{1});
    CHECK(cheb_explicit(ChebKind::T, 0) == Poly{2});
    CHECK_THROWS_AS(cheb_explicit(ChebKind::U, -1), std::out_of_range);
}

TEST_CASE("recurrence and explicit sums agree up to 64") {
    for (int k = 0; k <= 64; ++k) {
        CAPTURE(k);
        CHECK(cheb_u(k) == cheb_explicit(ChebKind::U, k));
        CHECK(cheb_t(k) == cheb_explicit(ChebKind::T, k));
    }
}

TEST_CASE("coefficient structure") {
    for (int k = 0; k <= 40; ++k) {
        CAPTURE(k);
        const Poly u = cheb_u(k);
        const Poly t = cheb_t(k);
        CHECK(u.degree() == 2 * (k / 2));
        CHECK(t.degree() == 2 * (k / 2));
        for (int j = 0; j <= k / 2; ++j) {
            const Integer c = u.coeff(static_cast<std::size_t>(2 * j));
            CHECK(abs(c) == binom(k - j, j));
            CHECK((j % 2 == 0 ? c > 0 : c < 0));
        }
        for (std::size_t i = 1; i < u.coefficients().size(); i += 2) CHECK(u.coeff(i) == 0);
        for (std::size_t i = 1; i < t.coefficients().size(); i += 2) CHECK(t.coeff(i) == 0);
        CHECK(u.coeff(0) == 1);
        if (k >= 1) CHECK(t.coeff(0) == 1);
    }
}

TEST_CASE("identity check examples") {
    const Poly x2 = Poly::monomial(1, 2);
    // k = 2: U_4 = U_2^2 - x^2 U_1^2
    CHECK(cheb_u(4) == cheb_u(2) * cheb_u(2) - x2 * cheb_u(1) * cheb_u(1));
    // k = 1: T_2 = U_1 - 2x^2 U_0
    CHECK(cheb_t(2) == cheb_u(1) - 2 * (x2 * cheb_u(0)));
    CHECK(cheb_t(2) == Poly{1, 0, -2});
    // k = 0: U_1 = U_0^2 - 2x^2 U_0 U_{-1}
    CHECK(cheb_u(1) == cheb_u(0) * cheb_u(0) - 2 * (x2 * cheb_u(0) * cheb_u(-1)));
}

TEST_CASE("identity report") {
    const Report r = cheb_identity_check(16);
    CHECK(r.all_passed());
    CHECK(r.entries().size() == 17 * 7);
    CHECK_THROWS_AS(cheb_identity_check(0), std::invalid_argument);
}

TEST_CASE("memo table is consistent under concurrent use") {
    std::vector<Poly> results(8);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 8; ++t) {
            pool.emplace_back([t, &results] {
                for (int k = 0; k <= 80; ++k) (void)cheb_u(k);
                results[static_cast<std::size_t>(t)] = cheb_u(80 - t);
            });
        }
    }
    for (int t = 0; t < 8; ++t) CHECK(results[static_cast<std::size_t>(t)] == cheb_explicit(ChebKind::U, 80 - t));
}
