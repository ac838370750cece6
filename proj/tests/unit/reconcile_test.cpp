#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balgf/chebyshev.hpp"
#include "balgf/lattice.hpp"
#include "balgf/reconcile.hpp"
#include "balgf/transfer.hpp"

using namespace balgf;

TEST_CASE("reconcile set examples") {
    const ReconcileSet s2 = reconcile_set(2);
    CHECK(s2.a == Poly{1, -1});
    CHECK(s2.b == Poly{1, 1});
    CHECK(s2.c == Poly{2});
    CHECK(s2.p == Poly{2, 2});
    CHECK(s2.a * s2.b == cheb_u(2));

    const ReconcileSet s3 = reconcile_set(3);
    CHECK(s3.a == Poly{1, 0, -2});
    CHECK(s3.b == Poly{1});
    CHECK(s3.c == Poly{3, 4});

    const ReconcileSet s0 = reconcile_set(0);
    CHECK(s0.a == Poly{1});
    CHECK(s0.b == Poly{1});
    CHECK(s0.c.is_zero());
    CHECK(s0.p.is_zero());

    CHECK(b_poly(-1).is_zero());
    CHECK_THROWS_AS(a_poly(-1), std::out_of_range);
    CHECK_THROWS_AS(reconcile_set(-1), std::out_of_range);
}

TEST_CASE("cross-term identity examples") {
    // k = 2: C_2 A_1 - C_1 A_2 = 2 - (1 - x) = 1 + x = W_2
    const ReconcileSet s1 = reconcile_set(1);
    CHECK(s1.a == Poly{1});
    CHECK(s1.c == Poly{1});
    CHECK(reconcile_set(2).c * s1.a - s1.c * reconcile_set(2).a == w_det(2));
    // k = 3: (3 + 4x)(1 - x) - 2(1 - 2x^2) = 1 + x = W_3
    CHECK(Poly{3, 4} * Poly{1, -1} - 2 * Poly{1, 0, -2} == Poly{1, 1});
    CHECK(w_det(3) == Poly{1, 1});

    for (int k = 1; k <= 16; ++k) CHECK(cross_term_holds(k));
}

TEST_CASE("shifted index variant of the cross-term identity fails") {
    CHECK_FALSE(shifted_cross_term_holds(2));
    // C_2 A_3 - C_1 A_2 = 1 + x - 4x^2
    CHECK(reconcile_set(2).c * a_poly(3) - reconcile_set(1).c * a_poly(2) == Poly{1, 1, -4});
}

TEST_CASE("end-to-end chain at k = 1") {
    const RatFunc chain(w_det(2), a_poly(2) * a_poly(1));
    CHECK(chain == RatFunc(Poly{1, 1}, Poly{1, -1}));
    CHECK(chain == f_balanced(1));
    CHECK(chain == g_balanced(1));
}

TEST_CASE("reconciliation report") {
    const Report r = verify_reconciliation(16);
    for (const auto& e : r.entries()) {
        CAPTURE(e.identity);
        CAPTURE(e.k);
        CHECK(e.passed);
    }
    CHECK(r.entries().size() > 16 * 8);
}

TEST_CASE("divisibility by 1 - 2x via evaluation at 1/2") {
    const Rational half(1, 2);
    CHECK(Rational(3) * a_poly(3).evaluate(half) == Rational(3, 2));
    CHECK(b_poly(2).evaluate(half) == Rational(3, 2));
    CHECK(a_poly(1).evaluate(half) == 1);
    CHECK(b_poly(0).evaluate(half) == 1);
    CHECK(Rational(2) * a_poly(2).evaluate(half) == 1);
    CHECK(b_poly(1).evaluate(half) == 1);
    CHECK(c_divisibility_check(24).all_passed());
}

TEST_CASE("W from the parity split") {
    for (int k = 0; k <= 32; ++k) CHECK(b_poly(k) * b_poly(k - 1) == w_det(k));
}

TEST_CASE("f = g on 64-term series") {
    for (int k = 0; k <= 12; ++k) {
        CHECK(series_expand(f_balanced(k), 64).terms == series_expand(g_balanced(k), 64).terms);
    }
}
