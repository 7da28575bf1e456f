#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "lomlab/sign_matrix.hpp"

namespace lomlab {

/// A circuit compiled to masks: support bits and positive-part bits (label l is bit l-1).
struct CircuitMask {
    std::uint64_t support = 0;
    std::uint64_t positive = 0;
};

/// Counting f and o-vectors from a list of compiled circuits of a uniform rank-r
/// oriented matroid on n elements. Every circuit has r+1 elements.
class NeighborlyCounter {
public:
    /// Enumeration is exhaustive over subsets, so n is capped well below 64.
    static constexpr int max_enumerated_elements = 40;

    NeighborlyCounter(std::vector<CircuitMask> circuits, int rank, int elements)
        : circuits_(std::move(circuits)), rank_(rank), elements_(elements) {
        if (elements > max_enumerated_elements) {
            throw dimension_error("reorientation enumeration limited to n <= " +
                                  std::to_string(max_enumerated_elements));
        }
        by_max_.assign(static_cast<std::size_t>(elements), {});
        for (const auto& c : circuits_) {
            by_max_[static_cast<std::size_t>(63 - std::countl_zero(c.support))].push_back(c);
        }
    }

    int rank() const noexcept { return rank_; }
    int elements() const noexcept { return elements_; }
    const std::vector<CircuitMask>& circuits() const noexcept { return circuits_; }

    /// Whether reorienting R leaves every circuit with more than k elements of each sign.
    bool is_k_neighborly(std::uint64_t reoriented, int k) const noexcept {
        const int hi = rank_ + 1 - k;
        for (const auto& c : circuits_) {
            const int p = std::popcount((c.positive ^ reoriented) & c.support);
            if (p <= k || p >= hi) return false;
        }
        return true;
    }

    /// Largest i with R i-neighborly, or -1 when the reorientation is not acyclic.
    int neighborliness(std::uint64_t reoriented) const noexcept {
        int m = rank_ + 1;
        for (const auto& c : circuits_) {
            const int p = std::popcount((c.positive ^ reoriented) & c.support);
            m = std::min({m, p, rank_ + 1 - p});
            if (m == 0) break;
        }
        return m - 1;
    }

    /// f by plain enumeration of subsets. With `halved`, only R not containing element 1
    /// are visited and the tally doubled; valid because circuit sets are closed under negation.
    std::uint64_t count_enumerated(int k, bool halved = true) const noexcept {
        if (rank_ < 2 * k + 1) return 0;
        const std::uint64_t total = std::uint64_t{1} << elements_;
        const std::uint64_t step = halved ? 2 : 1;
        std::uint64_t count = 0;
        for (std::uint64_t r = 0; r < total; r += step) {
            if (is_k_neighborly(r, k)) ++count;
        }
        return halved ? 2 * count : count;
    }

    /// f by depth-first assignment of elements 2..n with element 1 fixed; a circuit is
    /// checked as soon as its largest element is assigned.
    std::uint64_t count_pruned(int k) const noexcept {
        if (rank_ < 2 * k + 1) return 0;
        if (elements_ == 0) return 1;
        if (!bucket_ok(0, 0, k)) return 0;
        return 2 * descend(1, 0, k);
    }

    /// o[i] = number of reorientations that are exactly i-neighborly, i = 0..floor((r-1)/2).
    std::vector<std::uint64_t> o_vector() const {
        std::vector<std::uint64_t> o(static_cast<std::size_t>((rank_ - 1) / 2 + 1), 0);
        const std::uint64_t total = std::uint64_t{1} << elements_;
        for (std::uint64_t r = 0; r < total; r += 2) {
            const int level = neighborliness(r);
            if (level >= 0) o[static_cast<std::size_t>(level)] += 2;
        }
        return o;
    }

private:
    bool bucket_ok(int e, std::uint64_t reoriented, int k) const noexcept {
        const int hi = rank_ + 1 - k;
        for (const auto& c : by_max_[static_cast<std::size_t>(e)]) {
            const int p = std::popcount((c.positive ^ reoriented) & c.support);
            if (p <= k || p >= hi) return false;
        }
        return true;
    }

    std::uint64_t descend(int e, std::uint64_t reoriented, int k) const noexcept {
        if (e == elements_) return 1;
        std::uint64_t count = 0;
        for (std::uint64_t bit : {std::uint64_t{0}, std::uint64_t{1} << e}) {
            const std::uint64_t next = reoriented | bit;
            if (bucket_ok(e, next, k)) count += descend(e + 1, next, k);
        }
        return count;
    }

    std::vector<CircuitMask> circuits_;
    std::vector<std::vector<CircuitMask>> by_max_;
    int rank_;
    int elements_;
};

}  // namespace lomlab
