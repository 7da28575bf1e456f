#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lomlab {

/// Raised when matrix or ground-set dimensions violate an operation's preconditions.
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an element, row or column label falls outside its 1-based range.
class label_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised on malformed matrix text.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator-(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::plus : Sign::minus; }
constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// Largest ground set we support; element sets are stored as 64-bit masks.
inline constexpr int max_elements = 64;

/// A set of 1-based labels drawn from {1..64}, stored as a bit mask (label l is bit l-1).
class LabelSet {
public:
    constexpr LabelSet() noexcept = default;
    constexpr explicit LabelSet(std::uint64_t mask) noexcept : mask_(mask) {}

    /// Builds a set from labels, checking each lies in 1..bound.
    static LabelSet from_labels(const std::vector<int>& labels, int bound) {
        LabelSet s;
        for (int l : labels) {
            if (l < 1 || l > bound) {
                throw label_error("label " + std::to_string(l) + " outside 1.." + std::to_string(bound));
            }
            s.insert(l);
        }
        return s;
    }

    /// {1..count}
    static constexpr LabelSet first(int count) noexcept {
        return LabelSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
    }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr bool contains(int label) const noexcept { return (mask_ >> (label - 1)) & 1U; }
    constexpr void insert(int label) noexcept { mask_ |= std::uint64_t{1} << (label - 1); }
    constexpr void erase(int label) noexcept { mask_ &= ~(std::uint64_t{1} << (label - 1)); }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    /// Highest label present, 0 when empty.
    constexpr int max_label() const noexcept { return 64 - std::countl_zero(mask_); }

    std::vector<int> labels() const {
        std::vector<int> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
            out.push_back(std::countr_zero(m) + 1);
        }
        return out;
    }

    friend constexpr bool operator==(LabelSet, LabelSet) noexcept = default;
    friend constexpr auto operator<=>(LabelSet, LabelSet) noexcept = default;
    friend constexpr LabelSet operator|(LabelSet a, LabelSet b) noexcept { return LabelSet(a.mask_ | b.mask_); }
    friend constexpr LabelSet operator&(LabelSet a, LabelSet b) noexcept { return LabelSet(a.mask_ & b.mask_); }
    friend constexpr LabelSet operator^(LabelSet a, LabelSet b) noexcept { return LabelSet(a.mask_ ^ b.mask_); }

private:
    std::uint64_t mask_ = 0;
};

/// Set of reoriented elements (columns of the defining matrix).
using Reorientation = LabelSet;

inline std::string format_labels(LabelSet s) {
    std::string out = "{";
    bool first = true;
    for (int l : s.labels()) {
        if (!first) out += ',';
        out += std::to_string(l);
        first = false;
    }
    return out + "}";
}

/// An r x n matrix of signs; row i stores its negative entries as a bit mask over columns.
class SignMatrix {
public:
    SignMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < rows) {
            throw dimension_error("sign matrix needs 1 <= r <= n, got r=" + std::to_string(rows) +
                                  " n=" + std::to_string(cols));
        }
        if (cols > max_elements) {
            throw dimension_error("at most " + std::to_string(max_elements) + " columns supported");
        }
        negative_.assign(static_cast<std::size_t>(rows), 0);
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Sign at(int i, int j) const {
        check_entry(i, j);
        return get(i, j);
    }
    void set(int i, int j, Sign s) {
        check_entry(i, j);
        put(i, j, s);
    }

    /// Unchecked 1-based access.
    Sign get(int i, int j) const noexcept {
        return ((negative_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U) ? Sign::minus : Sign::plus;
    }
    void put(int i, int j, Sign s) noexcept {
        auto& row = negative_[static_cast<std::size_t>(i - 1)];
        const std::uint64_t bit = std::uint64_t{1} << (j - 1);
        row = (s == Sign::minus) ? (row | bit) : (row & ~bit);
    }

    /// Mask of negative entries of row i (bit j-1 set iff a[i][j] = -1).
    std::uint64_t negative_mask(int i) const noexcept { return negative_[static_cast<std::size_t>(i - 1)]; }
    void set_negative_mask(int i, std::uint64_t mask) noexcept {
        negative_[static_cast<std::size_t>(i - 1)] = mask & LabelSet::first(cols_).mask();
    }

    LabelSet all_columns() const noexcept { return LabelSet::first(cols_); }

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    void check_entry(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw label_error("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
        }
    }

    int rows_;
    int cols_;
    std::vector<std::uint64_t> negative_;
};

/// The all-plus matrix; its LOM is the alternating oriented matroid C_r(n).
inline SignMatrix alternating_matrix(int r, int n) { return SignMatrix(r, n); }

/// Negates every column in S.
inline SignMatrix reorient_columns(const SignMatrix& a, Reorientation s) {
    if ((s.mask() & ~a.all_columns().mask()) != 0) {
        throw label_error("column label " + std::to_string(s.max_label()) + " outside 1.." +
                          std::to_string(a.cols()));
    }
    SignMatrix out = a;
    for (int i = 1; i <= a.rows(); ++i) {
        out.set_negative_mask(i, a.negative_mask(i) ^ s.mask());
    }
    return out;
}

/// Negates every row in T. The oriented matroid is unchanged up to chirotope sign.
inline SignMatrix reorient_rows(const SignMatrix& a, LabelSet t) {
    if ((t.mask() & ~LabelSet::first(a.rows()).mask()) != 0) {
        throw label_error("row label " + std::to_string(t.max_label()) + " outside 1.." +
                          std::to_string(a.rows()));
    }
    SignMatrix out = a;
    for (int i : t.labels()) {
        out.set_negative_mask(i, ~a.negative_mask(i));
    }
    return out;
}

/// Removes column e; on the LOM this is deletion of element e.
inline SignMatrix delete_column(const SignMatrix& a, int e) {
    if (e < 1 || e > a.cols()) {
        throw label_error("column " + std::to_string(e) + " outside 1.." + std::to_string(a.cols()));
    }
    SignMatrix out(a.rows(), a.cols() - 1);
    const std::uint64_t low = (std::uint64_t{1} << (e - 1)) - 1;
    for (int i = 1; i <= a.rows(); ++i) {
        const std::uint64_t m = a.negative_mask(i);
        out.set_negative_mask(i, (m & low) | ((m >> 1) & ~low));
    }
    return out;
}

// Text format: r lines of exactly n characters from {+,-}; '#' lines are comments.

inline SignMatrix parse_matrix(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        for (char c : line) {
            if (c != '+' && c != '-') {
                throw parse_error("line " + std::to_string(line_no) + ": unexpected character '" +
                                  std::string(1, c) + "'");
            }
        }
        if (!rows.empty() && line.size() != rows.front().size()) {
            throw parse_error("line " + std::to_string(line_no) + ": row length " +
                              std::to_string(line.size()) + " differs from " +
                              std::to_string(rows.front().size()));
        }
        rows.push_back(line);
    }
    if (rows.empty()) throw parse_error("no matrix rows");
    const int r = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows.front().size());
    SignMatrix a(r, n);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= n; ++j) {
            a.put(i, j, rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == '-'
                            ? Sign::minus
                            : Sign::plus);
        }
    }
    return a;
}

inline SignMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

inline std::string format_matrix(const SignMatrix& a) {
    std::string out;
    out.reserve(static_cast<std::size_t>(a.rows() * (a.cols() + 1)));
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) out += to_char(a.get(i, j));
        out += '\n';
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const SignMatrix& a) { return os << format_matrix(a); }

}  // namespace lomlab
