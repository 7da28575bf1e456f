#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lomlab {

/// Exact C(n, k) in 64 bits; 0 when k > n. Throws std::overflow_error instead of wrapping.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc = C(n-k+i-1, i-1) here, so acc * (n-k+i) / i is exact
        acc = acc * (n - k + i);
        acc /= i;
        if (acc > UINT64_MAX) throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

/// Checked 64-bit add / multiply.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit addition overflow");
    return out;
}
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit multiplication overflow");
    return out;
}

/// Calls fn(const std::vector<int>&) for every k-subset of {1..n} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(static_cast<const std::vector<int>&>(c));
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Position of the strictly increasing subset b of {1..n} among all |b|-subsets in lexicographic order.
inline std::uint64_t lex_rank(const std::vector<int>& b, int n) {
    const int k = static_cast<int>(b.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < b[static_cast<std::size_t>(i)]; ++v) {
            rank += binomial(static_cast<std::uint64_t>(n - v), static_cast<std::uint64_t>(k - i - 1));
        }
        prev = b[static_cast<std::size_t>(i)];
    }
    return rank;
}

}  // namespace lomlab
