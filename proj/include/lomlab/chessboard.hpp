#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lomlab/sign_matrix.hpp"

namespace lomlab {

/// Version of the class-index bit layout; stored in checkpoints and result files.
inline constexpr int encoding_version = 1;

/// (r-1) x (n-1) board; square s(i,j) is black iff the 2x2 window of A with upper-left
/// corner (i,j) has product -1. Invariant under reorienting rows or columns of A.
class Chessboard {
public:
    Chessboard(int rows, int cols)
        : rows_(rows), cols_(cols), black_(static_cast<std::size_t>(rows * cols), false) {
        if (rows < 1 || cols < 1) throw dimension_error("chessboard needs at least one square");
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    bool black(int i, int j) const {
        check(i, j);
        return black_[index(i, j)];
    }
    void set_black(int i, int j, bool value) {
        check(i, j);
        black_[index(i, j)] = value;
    }

    friend bool operator==(const Chessboard&, const Chessboard&) = default;

private:
    std::size_t index(int i, int j) const noexcept { return static_cast<std::size_t>((i - 1) * cols_ + (j - 1)); }
    void check(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw label_error("square (" + std::to_string(i) + "," + std::to_string(j) + ") outside board");
        }
    }

    int rows_;
    int cols_;
    std::vector<bool> black_;
};

/// Index of a LOM reorientation class at fixed (r,n). Bit t is the colour of the t-th
/// relevant square in row-major order (bit 0 first), 1 = black.
struct ClassIndex {
    std::uint64_t value = 0;
    friend bool operator==(ClassIndex, ClassIndex) = default;
    friend auto operator<=>(ClassIndex, ClassIndex) = default;
};

inline Chessboard chessboard_of(const SignMatrix& a) {
    if (a.rows() < 2 || a.cols() < 2) throw dimension_error("chessboard needs r >= 2 and n >= 2");
    Chessboard b(a.rows() - 1, a.cols() - 1);
    for (int i = 1; i < a.rows(); ++i) {
        // bit j-1 of `pair` is the parity of a[i][j]*a[i+1][j]; a square is black when
        // adjacent columns disagree
        const std::uint64_t pair = a.negative_mask(i) ^ a.negative_mask(i + 1);
        const std::uint64_t diff = pair ^ (pair >> 1);
        for (int j = 1; j < a.cols(); ++j) b.set_black(i, j, (diff >> (j - 1)) & 1U);
    }
    return b;
}

/// Squares s(i,j) with 1 <= i <= r-1 and i+1 <= j <= n-r+i-1, in row-major order.
/// Only these squares influence M_A.
inline std::vector<std::pair<int, int>> relevant_squares(int r, int n) {
    if (r < 1 || n < r + 1) throw dimension_error("relevant squares need n >= r+1");
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= r - 1; ++i) {
        for (int j = i + 1; j <= n - r + i - 1; ++j) out.emplace_back(i, j);
    }
    return out;
}

inline bool is_relevant_square(int r, int n, int i, int j) noexcept {
    return i >= 1 && i <= r - 1 && j >= i + 1 && j <= n - r + i - 1;
}

/// 2^((n-r-1)(r-1)) reorientation classes of rank r LOMs on n elements.
inline std::uint64_t class_count(int r, int n) {
    if (r < 1 || n < r + 1) throw dimension_error("class count needs n >= r+1");
    const int bits = (n - r - 1) * (r - 1);
    if (bits >= 64) throw std::overflow_error("class count 2^" + std::to_string(bits) + " exceeds 64 bits");
    return std::uint64_t{1} << bits;
}

/// Canonical matrix of a class: first row and column all +1, irrelevant squares white,
/// and a[i+1][j+1] = colour(i,j) * a[i][j] * a[i][j+1] * a[i+1][j] filled row by row.
inline SignMatrix representative_of_index(int r, int n, ClassIndex c) {
    if (c.value >= class_count(r, n)) {
        throw std::out_of_range("class index " + std::to_string(c.value) + " >= " + std::to_string(class_count(r, n)));
    }
    SignMatrix a(r, n);
    const int width = n - r - 1;
    std::uint64_t prev = 0;  // negative mask of row i
    for (int i = 1; i < r; ++i) {
        // black squares of row i as a column mask (bit j-1 for square s(i,j))
        std::uint64_t black = 0;
        for (int t = 0; t < width; ++t) {
            if ((c.value >> ((i - 1) * width + t)) & 1U) black |= std::uint64_t{1} << (i + t);
        }
        // With d_j = a[i][j]*a[i+1][j] (as parity bits), square (i,j) black iff d_j != d_{j+1};
        // d_1 = parity(a[i][1]) since a[i+1][1] = +1. Prefix-xor over the black squares.
        std::uint64_t d = prev & 1U;
        std::uint64_t next = 0;
        for (int j = 1; j <= n; ++j) {
            if (j > 1 && ((black >> (j - 2)) & 1U)) d ^= 1U;
            const std::uint64_t bit = ((prev >> (j - 1)) & 1U) ^ d;
            next |= bit << (j - 1);
        }
        a.set_negative_mask(i + 1, next);
        prev = next;
    }
    return a;
}

inline ClassIndex index_of_chessboard(const Chessboard& b, int r, int n) {
    if (b.rows() != r - 1 || b.cols() != n - 1) {
        throw dimension_error("chessboard is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                              ", expected " + std::to_string(r - 1) + "x" + std::to_string(n - 1));
    }
    std::uint64_t value = 0;
    int t = 0;
    for (const auto& [i, j] : relevant_squares(r, n)) {
        if (b.black(i, j)) value |= std::uint64_t{1} << t;
        ++t;
    }
    return {value};
}

inline ClassIndex class_index_of(const SignMatrix& a) { return index_of_chessboard(chessboard_of(a), a.rows(), a.cols()); }

/// r-1 lines; relevant squares as 'B'/'W', irrelevant ones as 'b'/'w'.
inline std::string format_chessboard(const Chessboard& b, int r, int n) {
    std::string out;
    for (int i = 1; i <= b.rows(); ++i) {
        for (int j = 1; j <= b.cols(); ++j) {
            const bool rel = is_relevant_square(r, n, i, j);
            out += b.black(i, j) ? (rel ? 'B' : 'b') : (rel ? 'W' : 'w');
        }
        out += '\n';
    }
    return out;
}

}  // namespace lomlab
