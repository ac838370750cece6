#pragma once

namespace balgf {

/// k = 2m (even) or k = 2m + 1 (odd), with floor semantics so k = -1 gives m = -1, odd.
struct ParitySplit {
    int m;
    bool odd;
};

constexpr ParitySplit split_parity(int k) noexcept {
    const int m = k >= 0 ? k / 2 : -((-k + 1) / 2);
    return {m, k - 2 * m == 1};
}

static_assert(split_parity(-1).m == -1 && split_parity(-1).odd);
static_assert(split_parity(0).m == 0 && !split_parity(0).odd);
static_assert(split_parity(5).m == 2 && split_parity(5).odd);
static_assert(split_parity(-2).m == -1 && !split_parity(-2).odd);

}  // namespace balgf
