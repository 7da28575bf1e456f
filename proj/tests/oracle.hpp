#pragma once

// Brute-force reference computations used only by the tests. Nothing here calls into
// lomlab beyond reading matrix entries, so agreement with the library is meaningful.

#include <cstdint>
#include <random>
#include <vector>

#include "lomlab/sign_matrix.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;  // 0-based, entries +1/-1

inline Grid grid_of(const lomlab::SignMatrix& a) {
    Grid g(static_cast<std::size_t>(a.rows()), std::vector<int>(static_cast<std::size_t>(a.cols())));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) g[i][j] = lomlab::to_int(a.at(i + 1, j + 1));
    }
    return g;
}

// all k-subsets of {0..n-1} as index vectors, recursively
inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        subsets(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

// chi(B) for an increasing 0-based basis: product of a[i][b_i]
inline int chi(const Grid& g, const std::vector<int>& basis) {
    int s = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) s *= g[i][static_cast<std::size_t>(basis[i])];
    return s;
}

struct Circuit {
    std::vector<int> support;  // 0-based
    std::vector<int> signs;
};

// For each (r+1)-subset, chi(X \ j_i) = -X_{j_i} X_{j_{i+1}} chi(X \ j_{i+1}) fixes the
// signs up to a global factor.
inline std::vector<Circuit> circuits(const Grid& g) {
    const int r = static_cast<int>(g.size());
    const int n = static_cast<int>(g[0].size());
    std::vector<Circuit> out;
    for (const auto& x : subsets(n, r + 1)) {
        auto without = [&](std::size_t skip) {
            std::vector<int> b;
            for (std::size_t t = 0; t < x.size(); ++t) {
                if (t != skip) b.push_back(x[t]);
            }
            return b;
        };
        Circuit c{x, std::vector<int>(x.size())};
        c.signs[0] = 1;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            c.signs[i + 1] = -c.signs[i] * chi(g, without(i)) * chi(g, without(i + 1));
        }
        out.push_back(c);
    }
    return out;
}

// Smallest of |X+|, |X-| over circuits after reorienting the 0-based columns in `flip`.
inline int min_side(const std::vector<Circuit>& cs, std::uint64_t flip) {
    int best = 1 << 20;
    for (const auto& c : cs) {
        int pos = 0, neg = 0;
        for (std::size_t t = 0; t < c.support.size(); ++t) {
            const int s = ((flip >> c.support[t]) & 1U) ? -c.signs[t] : c.signs[t];
            (s > 0 ? pos : neg) += 1;
        }
        best = std::min(best, std::min(pos, neg));
    }
    return best;
}

// f: number of subsets R of the ground set whose reorientation is k-neighborly, meaning
// every circuit has at least k+1 positive and k+1 negative elements. No halving.
inline std::uint64_t f(const lomlab::SignMatrix& a, int k) {
    const auto cs = circuits(grid_of(a));
    std::uint64_t count = 0;
    for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << a.cols()); ++flip) {
        if (min_side(cs, flip) >= k + 1) ++count;
    }
    return count;
}

// o[i]: subsets whose reorientation is i-neighborly but not (i+1)-neighborly
inline std::vector<std::uint64_t> o_vector(const lomlab::SignMatrix& a) {
    const auto cs = circuits(grid_of(a));
    std::vector<std::uint64_t> o(static_cast<std::size_t>((a.rows() - 1) / 2 + 1), 0);
    for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << a.cols()); ++flip) {
        const int level = min_side(cs, flip) - 1;
        if (level >= 0) ++o[static_cast<std::size_t>(level)];
    }
    return o;
}

inline bool acyclic(const lomlab::SignMatrix& a, std::uint64_t flip) {
    return min_side(circuits(grid_of(a)), flip) >= 1;
}

// Every drop set in {2..n} of size at most r-1, counted directly.
inline std::uint64_t plain_travel_count(int r, int n) {
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
        if (__builtin_popcountll(m) <= r - 1) ++count;
    }
    return count;
}

// True if some row and column reorientation maps a to b (exhaustive).
inline bool related_by_reorientation(const lomlab::SignMatrix& a, const lomlab::SignMatrix& b) {
    const Grid ga = grid_of(a), gb = grid_of(b);
    const int r = a.rows(), n = a.cols();
    for (std::uint64_t rows = 0; rows < (std::uint64_t{1} << r); ++rows) {
        for (std::uint64_t cols = 0; cols < (std::uint64_t{1} << n); ++cols) {
            bool same = true;
            for (int i = 0; i < r && same; ++i) {
                for (int j = 0; j < n && same; ++j) {
                    int s = ga[i][j];
                    if ((rows >> i) & 1U) s = -s;
                    if ((cols >> j) & 1U) s = -s;
                    same = s == gb[i][j];
                }
            }
            if (same) return true;
        }
    }
    return false;
}

inline lomlab::SignMatrix random_matrix(int r, int n, std::mt19937_64& rng) {
    lomlab::SignMatrix a(r, n);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= n; ++j) a.set(i, j, (rng() & 1U) ? lomlab::Sign::minus : lomlab::Sign::plus);
    }
    return a;
}

}  // namespace oracle
