#include "balgf/lattice.hpp"

#include <stdexcept>
#include <string>

#include "balgf/chebyshev.hpp"
#include "balgf/parity.hpp"

namespace balgf {
namespace {

const RatFunc& one() {
    static const RatFunc v(Poly{1});
    return v;
}

RatFunc x_times(const RatFunc& f, long c = 1) { return RatFunc(Poly{0, c}) * f; }
RatFunc x2_times(const RatFunc& f, long c = 1) { return RatFunc(Poly{0, 0, c}) * f; }

RatFunc h_gf(int k) {
    if (k == -1) return {};
    const auto [m, odd] = split_parity(k);
    const Poly x = Poly::x();
    if (odd) return RatFunc(cheb_u(m), cheb_u(m + 1) - x * cheb_u(m));
    return RatFunc(cheb_u(m) + x * cheb_u(m - 1), cheb_t(m + 1));
}

RatFunc hbar_gf(int k) {
    const auto [m, odd] = split_parity(k);
    const Poly um = cheb_u(m);
    if (odd) return RatFunc(Poly{1, 2} * um * um, cheb_t(2 * m + 2));
    const Poly b = um + Poly::x() * cheb_u(m - 1);
    return RatFunc(b * b, cheb_t(2 * m + 1));
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::Fbar: return "Fbar";
        case Family::Gbar: return "Gbar";
        case Family::H: return "H";
        case Family::Hbar: return "Hbar";
        case Family::R: return "R";
        case Family::g: return "g";
    }
    throw std::invalid_argument("unknown path family");
}

RatFunc family_gf(const PathFamily& pf) {
    const int k = pf.k;
    const bool allows_minus_one = pf.family == Family::H || pf.family == Family::R;
    if (k < 0 && !(k == -1 && allows_minus_one)) {
        throw std::out_of_range(std::string(family_name(pf.family)) + " needs k >= 0, got " + std::to_string(k));
    }
    switch (pf.family) {
        case Family::F: return RatFunc(cheb_u(k), cheb_u(k + 1));
        case Family::G: return RatFunc(Poly{1}, cheb_u(k + 1));
        case Family::Fbar: return RatFunc(cheb_u(k), cheb_t(k + 1));
        case Family::Gbar: return RatFunc(Poly{1}, cheb_t(k + 1));
        case Family::H: return h_gf(k);
        case Family::Hbar: return hbar_gf(k);
        case Family::R: return r_gf(k);
        case Family::g: return g_balanced(k);
    }
    throw std::invalid_argument("unknown path family");
}

RatFunc r_gf(int k) {
    if (k < -1) throw std::out_of_range("R_k needs k >= -1");
    if (k == -1) return one();
    const auto [m, odd] = split_parity(k);
    if (!odd) return RatFunc(cheb_u(m), cheb_t(m + 1));
    const Poly xu = Poly::x() * cheb_u(m);
    return RatFunc(cheb_u(m + 1) + xu, cheb_u(m + 1) - xu);
}

RatFunc g_balanced(int k) {
    if (k < 0) throw std::out_of_range("g_k needs k >= 0");
    RatFunc g = h_gf(k) * (one() + x_times(h_gf(k - 1)));
    if (g != r_gf(k) * r_gf(k - 1)) {
        throw std::logic_error("H-decomposition and R_k R_{k-1} disagree at k = " + std::to_string(k));
    }
    return g;
}

ProductForm g_product_form(int k) {
    if (k < 0) throw std::out_of_range("g_k needs k >= 0");
    if (k == 0) return {Poly{1}, Poly{1}};
    const auto [m, odd] = split_parity(k);
    const Poly x = Poly::x();
    if (!odd) {
        // U_m/T_{m+1} * (U_m + x U_{m-1})/(U_m - x U_{m-1})
        const Poly xu = x * cheb_u(m - 1);
        return {cheb_u(m) * (cheb_u(m) + xu), cheb_t(m + 1) * (cheb_u(m) - xu)};
    }
    // (U_{m+1} + x U_m)/(U_{m+1} - x U_m) * U_m/T_{m+1}
    const Poly xu = x * cheb_u(m);
    return {(cheb_u(m + 1) + xu) * cheb_u(m), (cheb_u(m + 1) - xu) * cheb_t(m + 1)};
}

Report verify_table_recurrences(int k_max) {
    if (k_max < 1) throw std::invalid_argument("verify_table_recurrences needs k_max >= 1");
    Report report("tables");
    auto gf = [](Family f, int k) { return family_gf({f, k}); };

    RatFunc f_prefix_product = one();  // F_1 ... F_{k-1}
    for (int k = 1; k <= k_max; ++k) {
        const RatFunc fk = gf(Family::F, k);
        const RatFunc fk1 = gf(Family::F, k - 1);
        const RatFunc fbar = gf(Family::Fbar, k);
        const RatFunc hk = gf(Family::H, k);
        const RatFunc hk1 = gf(Family::H, k - 1);
        const RatFunc hbar = gf(Family::Hbar, k);

        report.add("F_k = 1 + x^2 F_(k-1) F_k", k, fk == one() + x2_times(fk1 * fk));
        report.add("G_k = F_1 ... F_k", k, gf(Family::G, k) == f_prefix_product * fk);
        report.add("Fbar_k = 1 + 2x^2 F_(k-1) Fbar_k", k, fbar == one() + x2_times(fk1 * fbar, 2));
        report.add("Gbar_k = Fbar_k F_(k-1) ... F_1", k, gf(Family::Gbar, k) == fbar * f_prefix_product);
        report.add("H_k = 1 + x H_(k-1) + x^2 F_(k-1) H_k", k,
                   hk == one() + x_times(hk1) + x2_times(fk1 * hk));
        report.add("Hbar_k = 1 + 2x H_(k-1) + 2x^2 F_(k-1) Hbar_k", k,
                   hbar == one() + x_times(hk1, 2) + x2_times(fk1 * hbar, 2));

        const RatFunc g_h = hk * (one() + x_times(hk1));
        report.add("H_k (1 + x H_(k-1)) = R_k R_(k-1)", k, g_h == r_gf(k) * r_gf(k - 1));

        const ProductForm pf = g_product_form(k);
        report.add("g_k = even/odd product form", k, g_h == RatFunc(pf.num, pf.den));
        report.add("product form in lowest terms", k, gcd(pf.num, pf.den) == Poly{1});

        f_prefix_product *= fk;
    }
    for (int m = 0; 2 * m <= k_max; ++m) {
        report.add("R_2m = Fbar_m", 2 * m, r_gf(2 * m) == gf(Family::Fbar, m));
        if (2 * m + 1 <= k_max) {
            report.add("R_(2m+1) = 1 + 2x H_(2m+1)", 2 * m + 1,
                       r_gf(2 * m + 1) == one() + x_times(gf(Family::H, 2 * m + 1), 2));
        }
    }
    return report;
}

}  // namespace balgf
