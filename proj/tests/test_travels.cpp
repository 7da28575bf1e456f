#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lomlab/lomlab.hpp"
#include "oracle.hpp"

using namespace lomlab;

namespace {

std::vector<SignMatrix> representatives(int r, int n) {
    std::vector<SignMatrix> out;
    for (std::uint64_t i = 0; i < class_count(r, n); ++i) out.push_back(representative_of_index(r, n, {i}));
    return out;
}

std::vector<Position> positions(std::initializer_list<std::pair<int, int>> ps) {
    std::vector<Position> out;
    for (auto [r, c] : ps) out.push_back({r, c});
    return out;
}

// k-neighborly plain travels of a, as drop sets
std::vector<PlainTravel> neighborly_travels(const SignMatrix& a, int k) {
    std::vector<PlainTravel> out;
    for (const auto& p : enumerate_plain_travels(a.rows(), a.cols())) {
        if (is_k_neighborly_matrix(realize_plain_travel(a, p).first, k)) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST(TopTravel, HandWorkedExamples) {
    const auto flat = top_travel(alternating_matrix(3, 5));
    EXPECT_EQ(flat.path, positions({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}));
    EXPECT_TRUE(flat.drop_columns.empty());
    EXPECT_FALSE(flat.positive);

    const SignMatrix a = parse_matrix("+-+\n+++\n");
    const auto t = top_travel(a);
    EXPECT_EQ(t.path, positions({{1, 1}, {1, 2}, {2, 2}, {2, 3}}));
    EXPECT_EQ(t.drop_columns, std::vector<int>{2});
    EXPECT_FALSE(t.positive);

    const auto p = top_travel(parse_matrix("+-+\n+-+\n"));
    EXPECT_EQ(p.path, positions({{1, 1}, {1, 2}, {2, 2}, {2, 3}}));
    EXPECT_TRUE(p.positive);
    EXPECT_EQ(format_travel(parse_matrix("+-+\n+-+\n"), p), "(1,1)=+\n(1,2)=-\n(2,2)=-\n(2,3)=+\npositive: yes\n");
}

TEST(BottomTravel, HandWorkedExamples) {
    const SignMatrix a = parse_matrix("+-+\n+-+\n");
    const auto t = bottom_travel(a);
    // starts at (2,3)=+, (2,2)=- flips so it rises; (1,2)=- then (1,1)=+ flips in row 1
    EXPECT_EQ(t.path, positions({{2, 3}, {2, 2}, {1, 2}, {1, 1}}));
    EXPECT_EQ(t.drop_columns, std::vector<int>{2});
    EXPECT_TRUE(t.positive);
    EXPECT_FALSE(bottom_travel(alternating_matrix(3, 5)).positive);
}

TEST(TopTravel, LastColumnFlipInLastRowIsPositive) {
    const auto t = top_travel(parse_matrix("++\n+-\n"));
    // (1,2) does not flip, so the travel ends in row 1 without reaching row 2
    EXPECT_FALSE(t.positive);
    const auto u = top_travel(parse_matrix("+-\n+-\n"));
    EXPECT_EQ(u.path, positions({{1, 1}, {1, 2}, {2, 2}}));
    EXPECT_FALSE(u.positive);
    const auto v = top_travel(parse_matrix("+-+\n--+\n"));
    EXPECT_EQ(v.path, positions({{1, 1}, {1, 2}, {2, 2}, {2, 3}}));
    EXPECT_TRUE(v.positive);
}

TEST(TopTravel, PathInvariantUnderComplementAndRowFlips) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 5);
        const int n = r + 1 + static_cast<int>(rng() % 6);
        const SignMatrix a = oracle::random_matrix(r, n, rng);
        const auto t = top_travel(a);
        const auto c = top_travel(reorient_columns(a, a.all_columns()));
        const auto w = top_travel(reorient_rows(a, LabelSet(rng() & LabelSet::first(r).mask())));
        EXPECT_EQ(t.path, c.path);
        EXPECT_EQ(t.path, w.path);
        EXPECT_EQ(t.positive, c.positive);
        EXPECT_EQ(t.positive, w.positive);
        EXPECT_EQ(t.positive, detail::top_travel_positive(a, 0));
    }
}

TEST(TopTravel, AcyclicIffNoPositiveCircuit) {
    for (int r = 2; r <= 4; ++r) {
        for (int n = r + 1; n <= 7; ++n) {
            for (const auto& a : representatives(r, n)) {
                const auto cs = oracle::circuits(oracle::grid_of(a));
                for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                    const bool acyclic = oracle::min_side(cs, s) >= 1;
                    ASSERT_EQ(is_acyclic_via_travel(reorient_columns(a, LabelSet(s))), acyclic);
                }
            }
        }
    }
}

TEST(PlainTravels, EnumerationOrderAndCount) {
    const auto ps = enumerate_plain_travels(3, 5);
    ASSERT_EQ(ps.size(), 11U);
    EXPECT_EQ(ps.front().drops, std::vector<int>{});
    EXPECT_EQ(ps[1].drops, std::vector<int>{2});
    EXPECT_EQ(ps[2].drops, (std::vector<int>{2, 3}));
    EXPECT_EQ(ps.back().drops, std::vector<int>{5});
    EXPECT_EQ(enumerate_plain_travels(2, 3).size(), 3U);
    for (int r = 2; r <= 7; ++r) {
        for (int n = r; n <= 12; ++n) {
            const auto all = enumerate_plain_travels(r, n);
            EXPECT_EQ(all.size(), oracle::plain_travel_count(r, n));
            EXPECT_EQ(all.size(), total_plain_travels(r, n));
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        }
    }
    EXPECT_THROW(enumerate_plain_travels(1, 3), dimension_error);
}

TEST(PlainTravels, RealizationFollowsDrops) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 4);
        const int n = r + 1 + static_cast<int>(rng() % 4);
        const SignMatrix a = oracle::random_matrix(r, n, rng);
        for (const auto& p : enumerate_plain_travels(r, n)) {
            const auto [m, s] = realize_plain_travel(a, p);
            EXPECT_FALSE(s.contains(1));
            EXPECT_EQ(m, reorient_columns(a, s));
            const auto t = top_travel(m);
            EXPECT_EQ(t.drop_columns, p.drops);
            EXPECT_FALSE(t.positive);
        }
    }
    EXPECT_THROW(realize_plain_travel(alternating_matrix(3, 4), PlainTravel{{3, 2}}), label_error);
    EXPECT_THROW(realize_plain_travel(alternating_matrix(2, 4), PlainTravel{{2, 3}}), dimension_error);
}

TEST(PlainTravels, BijectionWithAcyclicPairs) {
    for (int r = 2; r <= 4; ++r) {
        for (int n = r + 1; n <= 7; ++n) {
            for (const auto& a : representatives(r, n)) {
                const auto cs = oracle::circuits(oracle::grid_of(a));
                const std::uint64_t all = a.all_columns().mask();
                std::set<std::uint64_t> covered;
                for (const auto& p : enumerate_plain_travels(r, n)) {
                    const std::uint64_t s = realize_plain_travel(a, p).second.mask();
                    ASSERT_TRUE(covered.insert(s).second) << "travel realized twice";
                    ASSERT_TRUE(covered.insert(all ^ s).second);
                }
                std::set<std::uint64_t> acyclic;
                for (std::uint64_t s = 0; s <= all; ++s) {
                    if (oracle::min_side(cs, s) >= 1) acyclic.insert(s);
                }
                ASSERT_EQ(covered, acyclic);
                ASSERT_EQ(2 * enumerate_plain_travels(r, n).size(), count_k_neighborly_reorientations(a, 0));
            }
        }
    }
}

TEST(PlainTravels, MatrixNeighborlinessMatchesCircuits) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 3 + static_cast<int>(rng() % 3);
        const int n = r + 1 + static_cast<int>(rng() % 4);
        const SignMatrix a = oracle::random_matrix(r, n, rng);
        for (int k = 0; k <= 2; ++k) {
            EXPECT_EQ(is_k_neighborly_matrix(a, k), is_k_neighborly_circuits(a, Reorientation{}, k));
        }
    }
}

TEST(PlainTravels, EngineEquivalenceOnRandomMatrices) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 4);
        const int n = r + 1 + static_cast<int>(rng() % (10 - r));
        const SignMatrix a = oracle::random_matrix(r, n, rng);
        for (int k = 0; k <= 2; ++k) EXPECT_EQ(f_via_travels(a, k), count_k_neighborly_reorientations(a, k));
    }
}

// A plain travel dropping from row s to s+1 at a column j <= bound is never k-neighborly.
void check_staircase(int r, int n, int k, int s, int bound) {
    for (const auto& a : representatives(r, n)) {
        for (const auto& p : enumerate_plain_travels(r, n)) {
            if (static_cast<int>(p.drops.size()) < s) continue;
            if (p.drops[static_cast<std::size_t>(s - 1)] > bound) continue;
            ASSERT_FALSE(is_k_neighborly_matrix(realize_plain_travel(a, p).first, k))
                << "r=" << r << " n=" << n << " drops " << format_labels(LabelSet::from_labels(p.drops, n));
        }
    }
}

TEST(Staircase, EarlyDropFromRowRMinus2kFails) {
    for (auto [r, n, k] : {std::tuple{3, 5, 1}, {4, 6, 1}, {5, 7, 2}}) check_staircase(r, n, k, r - 2 * k, n - 3 * k);
}

TEST(Staircase, EarlyDropFromRowRMinus2kPlus1Fails) {
    for (auto [r, n, k] : {std::tuple{3, 5, 1}, {4, 6, 1}, {5, 7, 2}}) check_staircase(r, n, k, r - 2 * k + 1, n - 3 * k + 2);
}

// Largest number of k-neighborly plain travels sharing a first drop column j <= bound.
int worst_first_drop(const SignMatrix& a, int k, int bound) {
    std::map<int, int> per_column;
    for (const auto& p : neighborly_travels(a, k)) {
        if (!p.drops.empty() && p.drops.front() <= bound) ++per_column[p.drops.front()];
    }
    int worst = 0;
    for (auto [j, count] : per_column) worst = std::max(worst, count);
    return worst;
}

TEST(Staircase, AtMostOneNeighborlyTravelPerEarlyFirstDrop) {
    // Range covered by the argument for k = 1: the rows below row 1 and the columns after
    // j form a 3 x (n-j) matrix, which needs n-j >= 5.
    for (int n : {6, 7, 8}) {
        for (const auto& a : representatives(4, n)) EXPECT_LE(worst_first_drop(a, 1, n - 5), 1) << "n=" << n;
    }
    for (int n : {7, 8}) {
        for (const auto& a : representatives(4, n)) EXPECT_LE(worst_first_drop(a, 1, n - 4), 1) << "n=" << n;
    }
}

TEST(Staircase, BoundaryFirstDropAtFourBySix) {
    // At n = 3k+3 and j = n-(3k+1) = 2 every class has two 1-neighborly travels.
    for (const auto& a : representatives(4, 6)) EXPECT_EQ(worst_first_drop(a, 1, 2), 2);
    std::vector<PlainTravel> expected{{{2}}, {{2, 4, 6}}};
    std::vector<PlainTravel> found;
    for (const auto& p : neighborly_travels(alternating_matrix(4, 6), 1)) {
        if (!p.drops.empty() && p.drops.front() == 2) found.push_back(p);
    }
    EXPECT_EQ(found, expected);
    for (const auto& p : found) {
        const auto m = realize_plain_travel(alternating_matrix(4, 6), p).first;
        EXPECT_GE(oracle::min_side(oracle::circuits(oracle::grid_of(m)), 0), 2);
    }
}

TEST(Staircase, OddRankHasAtMostOneNeighborlyTravel) {
    for (auto [r, n, k] : {std::tuple{3, 5, 1}, {3, 6, 1}, {5, 8, 2}}) {
        for (const auto& a : representatives(r, n)) EXPECT_LE(count_k_neighborly_plain_travels(a, k), 1U);
    }
}

TEST(Positivizing, Examples) {
    // the top travel of this matrix is already positive
    EXPECT_EQ(positivizing_set(parse_matrix("+-+\n+-+\n"), 1, LabelSet::from_labels({2, 3}, 3)), Reorientation{});
    EXPECT_EQ(positivizing_set(alternating_matrix(2, 4), 1, LabelSet::from_labels({2, 3, 4}, 4)),
              LabelSet::from_labels({2}, 4));
    EXPECT_EQ(positivizing_set(alternating_matrix(2, 4), 0, LabelSet::from_labels({2, 3, 4}, 4)), std::nullopt);
    EXPECT_THROW(positivizing_set(alternating_matrix(2, 4), 1, LabelSet::from_labels({5}, 5)), label_error);
}

TEST(Positivizing, ExistsForEvenRankAndLargeN) {
    for (auto [k, n] : {std::pair{1, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}}) {
        const int r = 2 * k;
        for (const auto& a : representatives(r, n)) {
            LabelSet allowed = a.all_columns();
            allowed.erase(1);
            const auto s = positivizing_set(a, k, allowed);
            ASSERT_TRUE(s.has_value()) << "r=" << r << " n=" << n;
            EXPECT_LE(s->size(), k);
            EXPECT_TRUE(top_travel(reorient_columns(a, *s)).positive);
        }
    }
}
