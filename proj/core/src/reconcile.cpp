#include "balgf/reconcile.hpp"

#include <stdexcept>
#include <string>

#include "balgf/chebyshev.hpp"
#include "balgf/lattice.hpp"
#include "balgf/parity.hpp"
#include "balgf/transfer.hpp"

namespace balgf {
namespace {

const Poly& one_minus_2x() {
    static const Poly v{1, -2};
    return v;
}

Poly divide_by_one_minus_2x(const Poly& p, const char* what, int k) {
    try {
        return divide_exact(p, one_minus_2x());
    } catch (const std::domain_error&) {
        throw std::domain_error(std::string(what) + " is not divisible by 1 - 2x at k = " + std::to_string(k));
    }
}

Poly c_poly(int k) {
    if (k < 0) throw std::out_of_range("C_k needs k >= 0");
    return divide_by_one_minus_2x(k * a_poly(k) - Poly{0, 2} * b_poly(k - 1), "C_k", k);
}

}  // namespace

Poly a_poly(int k) {
    if (k < 0) throw std::out_of_range("A_k needs k >= 0");
    const auto [m, odd] = split_parity(k);
    if (odd) return cheb_t(m + 1);
    return cheb_u(m) - Poly::x() * cheb_u(m - 1);
}

Poly b_poly(int k) {
    if (k < -1) throw std::out_of_range("B_k needs k >= -1");
    const auto [m, odd] = split_parity(k);
    if (odd) return cheb_u(m);
    return cheb_u(m) + Poly::x() * cheb_u(m - 1);
}

ReconcileSet reconcile_set(int k) {
    if (k < 0) throw std::out_of_range("reconcile set needs k >= 0");
    Poly p = divide_by_one_minus_2x(k * cheb_u(k) - Poly{0, 2} * w_det(k), "P_k", k);
    return {k, a_poly(k), b_poly(k), c_poly(k), std::move(p)};
}

bool cross_term_holds(int k) {
    if (k < 1) throw std::out_of_range("cross-term identity needs k >= 1");
    return c_poly(k) * a_poly(k - 1) - c_poly(k - 1) * a_poly(k) == w_det(k);
}

bool shifted_cross_term_holds(int k) {
    if (k < 1) throw std::out_of_range("cross-term identity needs k >= 1");
    return c_poly(k) * a_poly(k + 1) - c_poly(k - 1) * a_poly(k) == w_det(k);
}

Report verify_reconciliation(int k_max) {
    if (k_max < 1) throw std::invalid_argument("verify_reconciliation needs k_max >= 1");
    Report report("reconcile");
    for (int k = 0; k <= k_max; ++k) {
        ReconcileSet s;
        try {
            s = reconcile_set(k);
            report.add("C_k and P_k divisible by 1 - 2x", k, true);
        } catch (const std::domain_error& e) {
            report.add("C_k and P_k divisible by 1 - 2x", k, false, e.what());
            continue;
        }
        const Poly wk = w_det(k);
        const Poly a_next = a_poly(k + 1);

        report.add("P_k = B_k C_k", k, s.p == s.b * s.c);
        report.add("P_k / U_k = S_k", k, RatFunc(s.p, cheb_u(k)) == s_closed(k));
        report.add("U_k = A_k B_k", k, cheb_u(k) == s.a * s.b);
        report.add("W_k = B_k B_(k-1)", k, wk == s.b * b_poly(k - 1));
        report.add("R_k = B_(k+1) / A_(k+1)", k, r_gf(k) == RatFunc(b_poly(k + 1), a_next));
        if (k >= 1) report.add("C_k A_(k-1) - C_(k-1) A_k = W_k", k, cross_term_holds(k));

        const RatFunc f = f_balanced(k);
        const RatFunc chain = RatFunc(w_det(k + 1), a_next * s.a);
        report.add("f_k = W_(k+1) / (A_(k+1) A_k)", k, f == chain);
        report.add("W_(k+1) / (A_(k+1) A_k) = g_k", k, chain == g_balanced(k));
    }
    if (k_max >= 2) {
        report.add("shifted C_k A_(k+1) - C_(k-1) A_k = W_k fails", 2, !shifted_cross_term_holds(2),
                   "expected failure of the shifted index variant");
    }
    return report;
}

Report c_divisibility_check(int k_max) {
    if (k_max < 1) throw std::invalid_argument("c_divisibility_check needs k_max >= 1");
    Report report("reconcile");
    const Rational half(1, 2);
    for (int k = 1; k <= k_max; ++k) {
        report.add("k A_k(1/2) = B_(k-1)(1/2)", k, Rational(k) * a_poly(k).evaluate(half) == b_poly(k - 1).evaluate(half));
        report.add("k U_k(1/2) = W_k(1/2)", k, Rational(k) * cheb_u(k).evaluate(half) == w_det(k).evaluate(half));
    }
    return report;
}

}  // namespace balgf
