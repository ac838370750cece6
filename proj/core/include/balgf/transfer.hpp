#pragma once

/**
 * @file transfer.hpp
 * @brief Transfer-matrix route to the k-balanced generating function.
 *
 * A_k is the adjacency matrix of the path graph on k vertices (1s on the
 * sub- and super-diagonal). S_k is the sum of all entries of
 * (I_k - x A_k)^{-1}. Walks from v_0 on the circular digraph C_k that miss
 * some node have generating function S_{k-1} - S_{k-2}; the k-balanced
 * strings have f_k = S_{k+1} - S_k.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "balgf/bigpoly.hpp"
#include "balgf/report.hpp"

namespace balgf {

/// Dense row-major square matrix.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<int>;
using PolyMatrix = SquareMatrix<Poly>;
using RatMatrix = SquareMatrix<RatFunc>;

/// Tridiagonal A_k. Throws std::invalid_argument for k == 0.
IntMatrix adjacency(int k);

/// I_k - x A_k with polynomial entries (k >= 0).
PolyMatrix resolvent_matrix(int k);

/// Fraction-free (Bareiss) determinant over Z[x].
Poly bareiss_determinant(PolyMatrix m);

/**
 * Solution of m * v = rhs over Q(x), by Bareiss elimination on the
 * augmented matrix. Each component is a Cramer numerator divided once by
 * the determinant. Throws std::domain_error if m is singular.
 */
std::vector<RatFunc> solve_fraction_free(PolyMatrix m, const std::vector<Poly>& rhs);

/// det(I_k - x A_k); equals U_k. k = 0 gives 1.
Poly det_resolvent(int k);

/// Components x_1..x_k of (I_k - x A_k) v = (1, ..., 1)^T.
std::vector<RatFunc> resolvent_solution(int k);

/// (I_k - x A_k)^{-1} with RatFunc entries.
RatMatrix resolvent_inverse(int k);

/// S_k as x_1 + ... + x_k from the linear solve. S_0 = 0.
RatFunc s_sum_direct(int k);

/// W_k by W_0 = 0, W_1 = 1, W_k = U_{k-1} + x W_{k-1}.
Poly w_det(int k);

/// W_{2m} = (U_m + x U_{m-1}) U_{m-1},  W_{2m+1} = (U_m + x U_{m-1}) U_m.
Poly w_det_closed(int k);

/// W_k as the determinant of I_k - x A_k with its first column replaced by ones.
Poly w_det_cramer(int k);

/// S_k = (k U_k - 2x W_k) / ((1 - 2x) U_k). S_0 = 0.
RatFunc s_closed(int k);

/// f_k = S_{k+1} - S_k, the generating function of k-balanced strings.
RatFunc f_balanced(int k);

/// S_{k-1} - S_{k-2}: walks from v_0 on C_k that miss a node. Needs k >= 3.
RatFunc bad_walk_gf(int k);

/// 1/(1 - 2x) - bad_walk_gf(k): walks from v_0 covering all of C_k. Needs k >= 3.
RatFunc good_walk_gf(int k);

/// A walk v_{w_0}, ..., v_{w_n} on C_k.
struct Walk {
    int k = 0;
    std::vector<int> nodes;

    friend bool operator==(const Walk&, const Walk&) = default;
};

/// Bit '1' for a clockwise step (i -> i+1 mod k), '0' for counterclockwise.
/// Throws std::invalid_argument for k < 3, w_0 != 0, or non-adjacent steps.
std::string encode_walk(const Walk& walk);

/// The walk from v_0 spelled by bits. Throws std::invalid_argument for k < 3 or non-bit characters.
Walk decode_walk(int k, std::string_view bits);

/// det = U, direct solve = closed form (with the x_1 = x_k symmetry and the
/// weighted row-sum equation), and W recurrence = closed form = Cramer
/// determinant, for 0 <= k <= k_max.
Report verify_transfer(int k_max);

}  // namespace balgf
