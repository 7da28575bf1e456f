#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lomlab/circuits.hpp"
#include "lomlab/combinatorics.hpp"
#include "lomlab/neighborly.hpp"
#include "lomlab/sign_matrix.hpp"

namespace lomlab {

/// Basis signs of a uniform rank-r oriented matroid on {1..n}, one per r-subset in
/// lexicographic order.
class ChirotopeTable {
public:
    ChirotopeTable(int rank, int elements, std::vector<Sign> signs)
        : rank_(rank), elements_(elements), signs_(std::move(signs)) {
        if (rank < 1 || elements < rank || elements > max_elements) {
            throw dimension_error("chirotope needs 1 <= r <= n <= 64");
        }
        if (signs_.size() != binomial(static_cast<std::uint64_t>(elements), static_cast<std::uint64_t>(rank))) {
            throw dimension_error("chirotope table length must be C(n,r)");
        }
    }

    int rank() const noexcept { return rank_; }
    int elements() const noexcept { return elements_; }
    const std::vector<Sign>& signs() const noexcept { return signs_; }

    /// Sign of the strictly increasing basis b.
    Sign operator()(const std::vector<int>& b) const { return signs_[lex_rank(b, elements_)]; }

    ChirotopeTable negated() const {
        std::vector<Sign> s = signs_;
        for (auto& x : s) x = -x;
        return {rank_, elements_, std::move(s)};
    }

    friend bool operator==(const ChirotopeTable&, const ChirotopeTable&) = default;

private:
    int rank_;
    int elements_;
    std::vector<Sign> signs_;
};

/// chi(B) = prod_i a[i][j_i] for the basis j_1 < ... < j_r.
inline Sign chirotope_sign(const SignMatrix& a, const std::vector<int>& basis) {
    detail::check_support(basis, static_cast<std::size_t>(a.rows()), a.cols());
    Sign s = Sign::plus;
    for (int i = 1; i <= a.rows(); ++i) s = s * a.get(i, basis[static_cast<std::size_t>(i - 1)]);
    return s;
}

inline ChirotopeTable chirotope_from_matrix(const SignMatrix& a) {
    std::vector<Sign> signs;
    for_each_subset(a.cols(), a.rows(), [&](const std::vector<int>& b) { signs.push_back(chirotope_sign(a, b)); });
    return {a.rows(), a.cols(), std::move(signs)};
}

/// Deletion of e: bases avoiding e keep their sign; labels above e shift down by one.
inline ChirotopeTable delete_element(const ChirotopeTable& t, int e) {
    if (e < 1 || e > t.elements()) {
        throw label_error("element " + std::to_string(e) + " outside 1.." + std::to_string(t.elements()));
    }
    if (t.elements() - 1 < t.rank()) throw dimension_error("deletion needs n-1 >= r");
    std::vector<Sign> signs;
    std::vector<int> lifted(static_cast<std::size_t>(t.rank()));
    for_each_subset(t.elements() - 1, t.rank(), [&](const std::vector<int>& b) {
        for (std::size_t i = 0; i < b.size(); ++i) lifted[i] = b[i] >= e ? b[i] + 1 : b[i];
        signs.push_back(t(lifted));
    });
    return {t.rank(), t.elements() - 1, std::move(signs)};
}

/// Contraction of e: chi'(b) = chi(b, e) extended alternatingly, i.e. the sorted basis
/// sign times (-1)^(number of b above e). Labels above e shift down by one.
inline ChirotopeTable contract_element(const ChirotopeTable& t, int e) {
    if (e < 1 || e > t.elements()) {
        throw label_error("element " + std::to_string(e) + " outside 1.." + std::to_string(t.elements()));
    }
    if (t.rank() < 2) throw dimension_error("contraction needs r >= 2");
    std::vector<Sign> signs;
    std::vector<int> merged(static_cast<std::size_t>(t.rank()));
    for_each_subset(t.elements() - 1, t.rank() - 1, [&](const std::vector<int>& b) {
        int above = 0;
        std::size_t out = 0;
        bool placed = false;
        for (int x : b) {
            const int label = x >= e ? x + 1 : x;
            if (label > e) {
                if (!placed) {
                    merged[out++] = e;
                    placed = true;
                }
                ++above;
            }
            merged[out++] = label;
        }
        if (!placed) merged[out++] = e;
        const Sign s = t(merged);
        signs.push_back(above % 2 == 0 ? s : -s);
    });
    return {t.rank() - 1, t.elements() - 1, std::move(signs)};
}

/// Circuits from basis signs via chi(X \ j_i) = -X_{j_i} X_{j_{i+1}} chi(X \ j_{i+1}).
inline std::vector<SignedCircuit> circuits_from_chirotope(const ChirotopeTable& t) {
    std::vector<SignedCircuit> out;
    const auto r = static_cast<std::size_t>(t.rank());
    std::vector<int> without(r);
    auto drop = [&](const std::vector<int>& s, std::size_t skip) -> const std::vector<int>& {
        std::size_t o = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != skip) without[o++] = s[i];
        }
        return without;
    };
    for_each_subset(t.elements(), t.rank() + 1, [&](const std::vector<int>& s) {
        SignedCircuit c;
        c.support = s;
        Sign x = Sign::plus;
        c.signs.push_back(x);
        Sign prev = t(drop(s, 0));
        for (std::size_t i = 0; i < r; ++i) {
            const Sign next = t(drop(s, i + 1));
            x = -(x * prev * next);
            c.signs.push_back(x);
            prev = next;
        }
        out.push_back(std::move(c));
    });
    return out;
}

inline NeighborlyCounter chirotope_counter(const ChirotopeTable& t) {
    std::vector<CircuitMask> masks;
    for (const auto& c : circuits_from_chirotope(t)) masks.push_back(c.mask());
    return NeighborlyCounter(std::move(masks), t.rank(), t.elements());
}

inline std::uint64_t count_k_neighborly_reorientations_chirotope(const ChirotopeTable& t, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (t.elements() < t.rank() + 1) throw dimension_error("counting needs n >= r+1");
    return chirotope_counter(t).count_enumerated(k);
}

}  // namespace lomlab
