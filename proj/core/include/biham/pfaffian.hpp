#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace biham {

// Pfaffian of an even-order skew-symmetric matrix over any exact
// commutative ring: recursive expansion along the first remaining row,
// memoized on the subset of active indices. Pf of the empty matrix is 1.
//
// R needs: construction from long, +, -, *, and a false-like is_zero test
// supplied by the caller through the matrix entries being exact values.
template <class R>
R pfaffian(const std::vector<std::vector<R>>& s)
{
    const int n = static_cast<int>(s.size());
    if (n % 2 != 0) return R(0L); // odd order: rank is even, Pf undefined -> 0 by convention
    if (n == 0) return R(1L);

    std::unordered_map<std::uint32_t, R> memo;

    auto rec = [&](auto&& self, std::uint32_t mask) -> R {
        if (mask == 0) return R(1L);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        // Lowest active index anchors the expansion.
        int first = -1;
        std::vector<int> rest;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            if (first < 0)
                first = i;
            else
                rest.push_back(i);
        }
        R total(0L);
        long sign = 1;
        for (int j : rest) {
            const R& entry = s[static_cast<std::size_t>(first)][static_cast<std::size_t>(j)];
            std::uint32_t sub = mask & ~(1u << first) & ~(1u << j);
            R term = entry * self(self, sub);
            total = (sign > 0) ? total + term : total - term;
            sign = -sign;
        }
        memo.emplace(mask, total);
        return total;
    };

    std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    return rec(rec, full);
}

} // namespace biham
