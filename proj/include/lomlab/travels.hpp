#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lomlab/combinatorics.hpp"
#include "lomlab/sign_matrix.hpp"

namespace lomlab {

struct Position {
    int row = 0;
    int col = 0;
    friend bool operator==(Position, Position) = default;
};

enum class TravelKind { top, bottom };

/// Top or bottom travel of a sign matrix.
///
/// The top travel starts at (1,1) and moves right while the row keeps the sign it was
/// entered with; the first sign change drops it one row in the same column. In the last
/// row a sign change ends the travel and makes it positive, which certifies a positive
/// circuit of M_A. The bottom travel mirrors this from (r,n) moving left and up, and is
/// positive on a sign change in row 1.
struct Travel {
    TravelKind kind = TravelKind::top;
    std::vector<Position> path;
    std::vector<int> drop_columns;  // columns of the vertical moves, in travel order
    bool positive = false;
};

/// A candidate top-travel path recorded by its strictly increasing drop columns in {2..n}.
struct PlainTravel {
    std::vector<int> drops;
    friend bool operator==(const PlainTravel&, const PlainTravel&) = default;
    friend auto operator<=>(const PlainTravel&, const PlainTravel&) = default;
};

namespace detail {

// Sign bits of row i after reorienting `flips`; bit j-1 set iff the entry is -1.
inline std::uint64_t row_bits(const SignMatrix& a, int i, std::uint64_t flips) noexcept {
    return a.negative_mask(i) ^ flips;
}

inline bool bit_at(std::uint64_t bits, int col) noexcept { return (bits >> (col - 1)) & 1U; }

/// Positivity of the top travel of A with columns `flips` reoriented, without building the path.
inline bool top_travel_positive(const SignMatrix& a, std::uint64_t flips) noexcept {
    const int r = a.rows();
    const std::uint64_t all = a.all_columns().mask();
    int row = 1;
    int col = 1;
    while (true) {
        const std::uint64_t bits = row_bits(a, row, flips);
        const std::uint64_t anchor = bit_at(bits, col) ? all : 0;
        // columns col+1..n are bits col..n-1
        const std::uint64_t ahead = (bits ^ anchor) & all & ~((std::uint64_t{1} << col) - 1);
        if (ahead == 0) return false;
        col = std::countr_zero(ahead) + 1;
        if (row == r) return true;
        ++row;
    }
}

}  // namespace detail

inline Travel top_travel(const SignMatrix& a) {
    if (a.cols() < 2) throw dimension_error("travels need n >= 2");
    Travel t;
    t.kind = TravelKind::top;
    int row = 1;
    int col = 1;
    Sign anchor = a.get(row, col);
    t.path.push_back({row, col});
    while (col < a.cols()) {
        ++col;
        t.path.push_back({row, col});
        if (a.get(row, col) == anchor) continue;
        if (row == a.rows()) {
            t.positive = true;
            break;
        }
        t.drop_columns.push_back(col);
        ++row;
        t.path.push_back({row, col});
        anchor = a.get(row, col);
    }
    return t;
}

inline Travel bottom_travel(const SignMatrix& a) {
    if (a.cols() < 2) throw dimension_error("travels need n >= 2");
    Travel t;
    t.kind = TravelKind::bottom;
    int row = a.rows();
    int col = a.cols();
    Sign anchor = a.get(row, col);
    t.path.push_back({row, col});
    while (col > 1) {
        --col;
        t.path.push_back({row, col});
        if (a.get(row, col) == anchor) continue;
        if (row == 1) {
            t.positive = true;
            break;
        }
        t.drop_columns.push_back(col);
        --row;
        t.path.push_back({row, col});
        anchor = a.get(row, col);
    }
    return t;
}

/// One line per path position "(row,col)=sign", then "positive: yes|no".
inline std::string format_travel(const SignMatrix& a, const Travel& t) {
    std::string out;
    for (const auto& p : t.path) {
        out += "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")=" + to_char(a.get(p.row, p.col)) + "\n";
    }
    out += t.positive ? "positive: yes\n" : "positive: no\n";
    return out;
}

/// M_A is acyclic iff its top travel is not positive.
inline bool is_acyclic_via_travel(const SignMatrix& a) {
    if (a.cols() < a.rows() + 1) throw dimension_error("acyclicity test needs n >= r+1");
    return !detail::top_travel_positive(a, 0);
}

namespace detail {

inline bool is_k_neighborly_flipped(const SignMatrix& a, std::uint64_t flips, int k) {
    for (int size = 0; size <= k && size <= a.cols(); ++size) {
        bool positive = false;
        for_each_subset(a.cols(), size, [&](const std::vector<int>& s) {
            if (positive) return;
            std::uint64_t m = 0;
            for (int c : s) m |= std::uint64_t{1} << (c - 1);
            positive = top_travel_positive(a, flips ^ m);
        });
        if (positive) return false;
    }
    return true;
}

}  // namespace detail

/// A is k-neighborly iff no reorientation of at most k columns has a positive top travel.
inline bool is_k_neighborly_matrix(const SignMatrix& a, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    return detail::is_k_neighborly_flipped(a, 0, k);
}

/// All plain travels of an r x n matrix, drop sets in lexicographic order.
inline std::vector<PlainTravel> enumerate_plain_travels(int r, int n) {
    if (r < 2 || n < r) throw dimension_error("plain travels need 2 <= r <= n");
    std::vector<PlainTravel> out;
    std::vector<int> drops;
    auto walk = [&](auto&& self, int from) -> void {
        out.push_back({drops});
        if (static_cast<int>(drops.size()) == r - 1) return;
        for (int c = from; c <= n; ++c) {
            drops.push_back(c);
            self(self, c + 1);
            drops.pop_back();
        }
    };
    walk(walk, 2);
    return out;
}

namespace detail {

inline void check_plain_travel(const PlainTravel& p, int r, int n) {
    if (static_cast<int>(p.drops.size()) > r - 1) throw dimension_error("plain travel has more than r-1 drops");
    int prev = 1;
    for (int c : p.drops) {
        if (c <= prev || c > n) throw label_error("plain travel drops must be strictly increasing within 2..n");
        prev = c;
    }
}

// Columns to reorient (never column 1) so the top travel follows the drops of p.
inline std::uint64_t realizing_flips(const SignMatrix& a, const PlainTravel& p) {
    std::uint64_t flips = 0;
    int row = 1;
    bool anchor = bit_at(a.negative_mask(1), 1);
    std::size_t next_drop = 0;
    for (int c = 2; c <= a.cols(); ++c) {
        const bool here = bit_at(a.negative_mask(row), c);
        const bool drop = next_drop < p.drops.size() && p.drops[next_drop] == c;
        // a drop needs the entry to differ from the row's anchor, otherwise it must match
        const bool flip = drop ? (here == anchor) : (here != anchor);
        if (flip) flips |= std::uint64_t{1} << (c - 1);
        if (drop) {
            ++next_drop;
            ++row;
            anchor = bit_at(a.negative_mask(row), c) != flip;
        }
    }
    return flips;
}

}  // namespace detail

/// The unique R with 1 not in R such that the top travel of A reoriented by R has drop set P.
inline std::pair<SignMatrix, Reorientation> realize_plain_travel(const SignMatrix& a, const PlainTravel& p) {
    detail::check_plain_travel(p, a.rows(), a.cols());
    const Reorientation r(detail::realizing_flips(a, p));
    return {reorient_columns(a, r), r};
}

/// |PT^k|: plain travels whose realized matrix is k-neighborly.
inline std::uint64_t count_k_neighborly_plain_travels(const SignMatrix& a, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (a.cols() < a.rows() + 1) throw dimension_error("counting needs n >= r+1");
    if (a.rows() < 2 * k + 1) return 0;
    std::uint64_t count = 0;
    for (const auto& p : enumerate_plain_travels(a.rows(), a.cols())) {
        if (detail::is_k_neighborly_flipped(a, detail::realizing_flips(a, p), k)) ++count;
    }
    return count;
}

/// Each k-neighborly plain travel accounts for the pair {R, E \ R}.
inline std::uint64_t f_via_travels(const SignMatrix& a, int k) { return 2 * count_k_neighborly_plain_travels(a, k); }

/// Smallest S (by size, then lexicographically) within `allowed`, |S| <= k, whose
/// reorientation makes the top travel positive.
inline std::optional<Reorientation> positivizing_set(const SignMatrix& a, int k, LabelSet allowed) {
    if ((allowed.mask() & ~a.all_columns().mask()) != 0) {
        throw label_error("column " + std::to_string(allowed.max_label()) + " outside 1.." + std::to_string(a.cols()));
    }
    const std::vector<int> pool = allowed.labels();
    const int m = static_cast<int>(pool.size());
    for (int size = 0; size <= k && size <= m; ++size) {
        std::optional<Reorientation> found;
        for_each_subset(m, size, [&](const std::vector<int>& idx) {
            if (found) return;
            LabelSet s;
            for (int i : idx) s.insert(pool[static_cast<std::size_t>(i - 1)]);
            if (detail::top_travel_positive(a, s.mask())) found = s;
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace lomlab
