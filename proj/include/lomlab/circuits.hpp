#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lomlab/combinatorics.hpp"
#include "lomlab/neighborly.hpp"
#include "lomlab/sign_matrix.hpp"

namespace lomlab {

/// One representative of a circuit pair {X, -X}: the smallest support element is positive.
struct SignedCircuit {
    std::vector<int> support;  // strictly increasing labels
    std::vector<Sign> signs;   // one per support element

    LabelSet support_set() const {
        LabelSet s;
        for (int e : support) s.insert(e);
        return s;
    }
    LabelSet positive() const {
        LabelSet s;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (signs[i] == Sign::plus) s.insert(support[i]);
        }
        return s;
    }
    LabelSet negative() const { return support_set() ^ positive(); }

    CircuitMask mask() const { return {support_set().mask(), positive().mask()}; }

    std::string sign_string() const {
        std::string s;
        for (Sign x : signs) s += to_char(x);
        return s;
    }

    friend bool operator==(const SignedCircuit&, const SignedCircuit&) = default;
};

namespace detail {

inline void check_support(const std::vector<int>& support, std::size_t expected, int n) {
    if (support.size() != expected) {
        throw dimension_error("circuit support must have " + std::to_string(expected) + " elements, got " +
                              std::to_string(support.size()));
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 1 || support[i] > n) {
            throw label_error("element " + std::to_string(support[i]) + " outside 1.." + std::to_string(n));
        }
        if (i > 0 && support[i] <= support[i - 1]) {
            throw label_error("support labels must be strictly increasing");
        }
    }
}

// Adjacent support elements j_i < j_{i+1} satisfy X_{j_{i+1}} = -X_{j_i} a[i][j_i] a[i][j_{i+1}].
inline CircuitMask circuit_mask_unchecked(const SignMatrix& a, const int* support) {
    CircuitMask m;
    bool negative = false;
    m.support = std::uint64_t{1} << (support[0] - 1);
    m.positive = m.support;
    for (int i = 1; i <= a.rows(); ++i) {
        const int lo = support[i - 1];
        const int hi = support[i];
        const std::uint64_t row = a.negative_mask(i);
        const bool flip = ((row >> (lo - 1)) ^ (row >> (hi - 1))) & 1U;
        negative = negative == flip;  // negated unless the two entries differ
        const std::uint64_t bit = std::uint64_t{1} << (hi - 1);
        m.support |= bit;
        if (!negative) m.positive |= bit;
    }
    return m;
}

}  // namespace detail

/// Circuit of M_A supported on the given r+1 elements.
inline SignedCircuit circuit_of_support(const SignMatrix& a, const std::vector<int>& support) {
    detail::check_support(support, static_cast<std::size_t>(a.rows()) + 1, a.cols());
    SignedCircuit c;
    c.support = support;
    c.signs.reserve(support.size());
    Sign x = Sign::plus;
    c.signs.push_back(x);
    for (int i = 1; i <= a.rows(); ++i) {
        const int lo = support[static_cast<std::size_t>(i - 1)];
        const int hi = support[static_cast<std::size_t>(i)];
        x = -(x * a.get(i, lo) * a.get(i, hi));
        c.signs.push_back(x);
    }
    return c;
}

/// All C(n, r+1) circuits in lexicographic support order; empty when n = r.
inline std::vector<SignedCircuit> all_circuits(const SignMatrix& a) {
    std::vector<SignedCircuit> out;
    for_each_subset(a.cols(), a.rows() + 1, [&](const std::vector<int>& s) { out.push_back(circuit_of_support(a, s)); });
    return out;
}

/// Compiled circuit masks of M_A, same order as all_circuits.
inline std::vector<CircuitMask> circuit_masks(const SignMatrix& a) {
    std::vector<CircuitMask> out;
    out.reserve(static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(a.cols()),
                                                  static_cast<std::uint64_t>(a.rows() + 1))));
    for_each_subset(a.cols(), a.rows() + 1,
                    [&](const std::vector<int>& s) { out.push_back(detail::circuit_mask_unchecked(a, s.data())); });
    return out;
}

inline NeighborlyCounter circuit_counter(const SignMatrix& a) {
    return NeighborlyCounter(circuit_masks(a), a.rows(), a.cols());
}

inline void check_reorientation(const SignMatrix& a, Reorientation r) {
    if ((r.mask() & ~a.all_columns().mask()) != 0) {
        throw label_error("element " + std::to_string(r.max_label()) + " outside 1.." + std::to_string(a.cols()));
    }
}

/// Whether the reorientation of R in M_A is k-neighborly, decided from the circuits.
inline bool is_k_neighborly_circuits(const SignMatrix& a, Reorientation r, int k) {
    check_reorientation(a, r);
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    const int hi = a.rows() + 1 - k;
    bool ok = true;
    for_each_subset(a.cols(), a.rows() + 1, [&](const std::vector<int>& s) {
        if (!ok) return;
        const CircuitMask c = detail::circuit_mask_unchecked(a, s.data());
        const int p = std::popcount((c.positive ^ r.mask()) & c.support);
        if (p <= k || p >= hi) ok = false;
    });
    return ok;
}

/// f_{M_A}(r,n,k): number of subsets R of {1..n} whose reorientation is k-neighborly.
inline std::uint64_t count_k_neighborly_reorientations(const SignMatrix& a, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (a.cols() < a.rows() + 1) throw dimension_error("counting needs n >= r+1");
    return circuit_counter(a).count_enumerated(k);
}

inline std::vector<std::uint64_t> o_vector(const SignMatrix& a) {
    if (a.cols() < a.rows() + 1) throw dimension_error("o-vector needs n >= r+1");
    return circuit_counter(a).o_vector();
}

}  // namespace lomlab
