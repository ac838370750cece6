#include "balgf/chebyshev.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>

namespace balgf {
namespace {

Integer binomial(long n, long r) {
    if (n < 0 || r < 0 || r > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

// Grows on demand; deque keeps earlier entries stable while later ones are appended.
class ChebTable {
public:
    ChebTable(Poly p0, Poly p1) {
        table_.push_back(std::move(p0));
        table_.push_back(std::move(p1));
    }

    Poly get(std::size_t k) {
        std::lock_guard lock(mu_);
        const Poly x2 = Poly::monomial(1, 2);
        while (table_.size() <= k) {
            const std::size_t n = table_.size();
            table_.push_back(table_[n - 1] - x2 * table_[n - 2]);
        }
        return table_[k];
    }

private:
    std::mutex mu_;
    std::deque<Poly> table_;
};

ChebTable& table_for(ChebKind kind) {
    static ChebTable u_table(Poly{1}, Poly{1});
    static ChebTable t_table(Poly{2}, Poly{1});
    return kind == ChebKind::U ? u_table : t_table;
}

void check_index(ChebKind kind, int k) {
    const int lowest = kind == ChebKind::U ? -1 : 0;
    if (k < lowest) {
        throw std::out_of_range(std::string("Chebyshev index out of range for kind ") +
                                (kind == ChebKind::U ? "U" : "T") + ": " + std::to_string(k));
    }
}

}  // namespace

Poly cheb(ChebKind kind, int k) {
    check_index(kind, k);
    if (k == -1) return {};
    return table_for(kind).get(static_cast<std::size_t>(k));
}

Poly cheb_explicit(ChebKind kind, int k) {
    if (k < 0) throw std::out_of_range("explicit Chebyshev sum needs k >= 0");
    std::vector<Integer> cs(static_cast<std::size_t>(k) + 1);
    for (long j = 0; j <= k / 2; ++j) {
        Integer c = binomial(k - j, j);
        if (kind == ChebKind::T) c += binomial(k - j - 1, j - 1);
        if (j % 2 == 1) c = -c;
        cs[static_cast<std::size_t>(2 * j)] = c;
    }
    // k = 0 special case of the T sum: C(0,0) + C(-1,-1) with C(-1,-1) := 1
    if (kind == ChebKind::T && k == 0) cs[0] = 2;
    return Poly(std::move(cs));
}

Report cheb_identity_check(int k_max) {
    if (k_max < 1) throw std::invalid_argument("cheb_identity_check needs k_max >= 1");
    Report report("cheb");
    const Poly x2 = Poly::monomial(1, 2);
    const Poly two_x2 = Poly::monomial(2, 2);
    for (int k = 0; k <= k_max; ++k) {
        const Poly uk = cheb_u(k);
        const Poly uk1 = cheb_u(k - 1);
        report.add("U_2k = U_k^2 - x^2 U_(k-1)^2", k, cheb_u(2 * k) == uk * uk - x2 * uk1 * uk1);
        report.add("U_(2k+1) = U_k^2 - 2x^2 U_k U_(k-1)", k,
                   cheb_u(2 * k + 1) == uk * uk - two_x2 * uk * uk1);
        report.add("T_(k+1) = U_k - 2x^2 U_(k-1)", k, cheb_t(k + 1) == uk - two_x2 * uk1);
        report.add("T_(k+1) = U_(k+1) - x^2 U_(k-1)", k, cheb_t(k + 1) == cheb_u(k + 1) - x2 * uk1);
        report.add("gcd(U_k, U_(k-1)) = 1", k, gcd(uk, uk1) == Poly{1});
        report.add("U_k recurrence = explicit sum", k, cheb_u(k) == cheb_explicit(ChebKind::U, k));
        report.add("T_k recurrence = explicit sum", k, cheb_t(k) == cheb_explicit(ChebKind::T, k));
    }
    return report;
}

}  // namespace balgf
