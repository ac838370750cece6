#include "balgf/transfer.hpp"

#include <stdexcept>
#include <utility>

#include "balgf/chebyshev.hpp"
#include "balgf/parity.hpp"

namespace balgf {
namespace {

using Rows = std::vector<std::vector<Poly>>;

// In-place Bareiss elimination over the leading n x n block of rows (rows may
// carry extra augmented columns). Returns the sign of the row permutation, or
// 0 if the block is singular.
int bareiss_eliminate(Rows& rows, std::size_t n) {
    int sign = 1;
    Poly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (rows[k][k].is_zero()) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && rows[swap_with][k].is_zero()) ++swap_with;
            if (swap_with == n) return 0;
            std::swap(rows[k], rows[swap_with]);
            sign = -sign;
        }
        const std::size_t cols = rows[k].size();
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                rows[i][j] = divide_exact(rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j], prev);
            }
            rows[i][k] = Poly{};
        }
        prev = rows[k][k];
    }
    if (n > 0 && rows[n - 1][n - 1].is_zero()) return 0;
    return sign;
}

Rows to_rows(const PolyMatrix& m) {
    Rows rows(m.dim(), std::vector<Poly>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
    return rows;
}

void require_walk_k(int k) {
    if (k < 3) throw std::invalid_argument("walks need a circular digraph with k >= 3 nodes");
}

}  // namespace

IntMatrix adjacency(int k) {
    if (k < 1) throw std::invalid_argument("adjacency matrix needs k >= 1");
    const auto n = static_cast<std::size_t>(k);
    IntMatrix a(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = 1;
        a(i + 1, i) = 1;
    }
    return a;
}

PolyMatrix resolvent_matrix(int k) {
    if (k < 0) throw std::invalid_argument("resolvent matrix needs k >= 0");
    const auto n = static_cast<std::size_t>(k);
    PolyMatrix m(n);
    if (n == 0) return m;
    const IntMatrix a = adjacency(k);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = Poly{r == c ? 1 : 0, -a(r, c)};
    return m;
}

Poly bareiss_determinant(PolyMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) return Poly{1};
    Rows rows = to_rows(m);
    const int sign = bareiss_eliminate(rows, n);
    if (sign == 0) return {};
    return sign > 0 ? rows[n - 1][n - 1] : -rows[n - 1][n - 1];
}

std::vector<RatFunc> solve_fraction_free(PolyMatrix m, const std::vector<Poly>& rhs) {
    const std::size_t n = m.dim();
    if (rhs.size() != n) throw std::invalid_argument("right-hand side has the wrong length");
    if (n == 0) return {};
    Rows rows = to_rows(m);
    for (std::size_t r = 0; r < n; ++r) rows[r].push_back(rhs[r]);
    if (bareiss_eliminate(rows, n) == 0) throw std::domain_error("singular system");

    // y_i = D * x_i are the Cramer numerators; divide by D once at the end.
    const Poly& d = rows[n - 1][n - 1];
    std::vector<Poly> y(n);
    y[n - 1] = rows[n - 1][n];
    for (std::size_t i = n - 1; i-- > 0;) {
        Poly acc = d * rows[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= rows[i][j] * y[j];
        y[i] = divide_exact(acc, rows[i][i]);
    }
    std::vector<RatFunc> out;
    out.reserve(n);
    for (auto& v : y) out.emplace_back(std::move(v), d);
    return out;
}

Poly det_resolvent(int k) { return bareiss_determinant(resolvent_matrix(k)); }

std::vector<RatFunc> resolvent_solution(int k) {
    return solve_fraction_free(resolvent_matrix(k), std::vector<Poly>(static_cast<std::size_t>(k), Poly{1}));
}

RatMatrix resolvent_inverse(int k) {
    const PolyMatrix m = resolvent_matrix(k);
    const std::size_t n = m.dim();
    RatMatrix inv(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Poly> e(n);
        e[c] = Poly{1};
        const auto col = solve_fraction_free(m, e);
        for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
    }
    return inv;
}

RatFunc s_sum_direct(int k) {
    if (k < 0) throw std::invalid_argument("S_k needs k >= 0");
    RatFunc sum;
    for (const auto& v : resolvent_solution(k)) sum += v;
    return sum;
}

Poly w_det(int k) {
    if (k < 0) throw std::invalid_argument("W_k needs k >= 0");
    Poly w;  // W_0
    for (int i = 1; i <= k; ++i) w = cheb_u(i - 1) + Poly::x() * w;
    return w;
}

Poly w_det_closed(int k) {
    if (k < 0) throw std::invalid_argument("W_k needs k >= 0");
    const auto [m, odd] = split_parity(k);
    const Poly b_even = cheb_u(m) + Poly::x() * cheb_u(m - 1);
    return b_even * (odd ? cheb_u(m) : cheb_u(m - 1));
}

Poly w_det_cramer(int k) {
    if (k < 1) throw std::invalid_argument("Cramer determinant needs k >= 1");
    PolyMatrix m = resolvent_matrix(k);
    for (std::size_t r = 0; r < m.dim(); ++r) m(r, 0) = Poly{1};
    return bareiss_determinant(std::move(m));
}

RatFunc s_closed(int k) {
    if (k < 0) throw std::invalid_argument("S_k needs k >= 0");
    if (k == 0) return {};
    const Poly u = cheb_u(k);
    return RatFunc(k * u - Poly{0, 2} * w_det(k), Poly{1, -2} * u);
}

RatFunc f_balanced(int k) {
    if (k < 0) throw std::invalid_argument("f_k needs k >= 0");
    return s_closed(k + 1) - s_closed(k);
}

RatFunc bad_walk_gf(int k) {
    require_walk_k(k);
    return s_closed(k - 1) - s_closed(k - 2);
}

RatFunc good_walk_gf(int k) {
    require_walk_k(k);
    return RatFunc(Poly{1}, Poly{1, -2}) - bad_walk_gf(k);
}

std::string encode_walk(const Walk& walk) {
    require_walk_k(walk.k);
    if (walk.nodes.empty() || walk.nodes.front() != 0) {
        throw std::invalid_argument("walk must start at v0");
    }
    std::string bits;
    bits.reserve(walk.nodes.size() - 1);
    for (std::size_t i = 0; i < walk.nodes.size(); ++i) {
        const int v = walk.nodes[i];
        if (v < 0 || v >= walk.k) throw std::invalid_argument("node index out of range: " + std::to_string(v));
        if (i == 0) continue;
        const int prev = walk.nodes[i - 1];
        if (v == (prev + 1) % walk.k) {
            bits.push_back('1');
        } else if (v == (prev + walk.k - 1) % walk.k) {
            bits.push_back('0');
        } else {
            throw std::invalid_argument("nodes " + std::to_string(prev) + " and " + std::to_string(v) +
                                        " are not adjacent");
        }
    }
    return bits;
}

Walk decode_walk(int k, std::string_view bits) {
    require_walk_k(k);
    Walk walk{k, {0}};
    walk.nodes.reserve(bits.size() + 1);
    for (char c : bits) {
        const int prev = walk.nodes.back();
        if (c == '1') {
            walk.nodes.push_back((prev + 1) % k);
        } else if (c == '0') {
            walk.nodes.push_back((prev + k - 1) % k);
        } else {
            throw std::invalid_argument(std::string("not a bit: '") + c + "'");
        }
    }
    return walk;
}

Report verify_transfer(int k_max) {
    if (k_max < 1) throw std::invalid_argument("verify_transfer needs k_max >= 1");
    Report report("transfer");
    for (int k = 0; k <= k_max; ++k) {
        report.add("det(I - xA_k) = U_k", k, det_resolvent(k) == cheb_u(k));

        const auto sol = resolvent_solution(k);
        RatFunc sum;
        for (const auto& v : sol) sum += v;
        report.add("S_k direct = closed form", k, sum == s_closed(k));
        if (k >= 1) report.add("x_1 = x_k", k, sol.front() == sol.back());
        if (k >= 2) {
            RatFunc weighted = RatFunc(Poly{1, -1}) * (sol.front() + sol.back());
            for (std::size_t i = 1; i + 1 < sol.size(); ++i) weighted += RatFunc(Poly{1, -2}) * sol[i];
            report.add("weighted row sum = k", k, weighted == RatFunc(Poly{k}));
        }

        const Poly w = w_det(k);
        report.add("W_k recurrence = closed form", k, w == w_det_closed(k));
        if (k >= 1) report.add("W_k recurrence = Cramer determinant", k, w == w_det_cramer(k));
    }
    return report;
}

}  // namespace balgf
