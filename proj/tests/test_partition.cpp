#include <gtest/gtest.h>

#include "mixsym/partition.hpp"
#include "oracles.hpp"

using namespace mixsym;

namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<StrictPartition>& set) {
    std::vector<std::vector<int>> out;
    for (const auto& p : set) out.push_back(p.parts());
    return out;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
    EXPECT_EQ(Partition::parse("11,9,6,2,1").parts(), (std::vector<int>{11, 9, 6, 2, 1}));
    EXPECT_TRUE(Partition::parse("").empty());
    EXPECT_TRUE(StrictPartition::parse("  ").empty());
    EXPECT_EQ(Partition::parse("3, 3,1").to_string(), "3,3,1");
    EXPECT_EQ(Partition::parse("4,2,0,0").length(), 2u);
    EXPECT_EQ(Partition::parse("4,2,1").weight(), 7);
}

TEST(Partition, RejectsMalformedInput) {
    EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("3,-1"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("3,,1"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
    EXPECT_THROW(StrictPartition::parse("3,3"), std::invalid_argument);
    EXPECT_THROW(StrictPartition::parse("2,0,1"), std::invalid_argument);
}

TEST(Partition, StrictConvertsLosslessly) {
    const auto s = StrictPartition::parse("9,5,1");
    EXPECT_EQ(s.as_partition().parts(), s.parts());
    EXPECT_TRUE(s.contains_part(5));
    EXPECT_FALSE(s.contains_part(4));
}

TEST(Color, FollowsColumnResidue) {
    EXPECT_EQ(color(1), Color::zero);
    EXPECT_EQ(color(2), Color::one);
    EXPECT_EQ(color(3), Color::one);
    EXPECT_EQ(color(4), Color::zero);
    EXPECT_EQ(color(5), Color::zero);
    EXPECT_THROW(color(0), std::invalid_argument);
    EXPECT_THROW(color(-3), std::invalid_argument);
}

TEST(BarCore, Shapes) {
    EXPECT_EQ(bar_core(3).parts(), (std::vector<int>{9, 5, 1}));
    EXPECT_TRUE(bar_core(0).empty());
    EXPECT_EQ(bar_core(-2).parts(), (std::vector<int>{7, 3}));
    EXPECT_EQ(bar_core(1).parts(), (std::vector<int>{1}));
    EXPECT_EQ(bar_core(-1).parts(), (std::vector<int>{3}));
    for (int m = -6; m <= 6; ++m) EXPECT_EQ(bar_core(m).length(), static_cast<std::size_t>(std::abs(m)));
}

TEST(AddSet, ZeroNodesOverCoreMinusTwo) {
    const auto core = bar_core(-2);
    EXPECT_EQ(as_vectors(add_set(core, Color::zero, 1)),
              (std::vector<std::vector<int>>{{8, 3}, {7, 4}, {7, 3, 1}}));
    EXPECT_EQ(as_vectors(add_set(core, Color::zero, 2)),
              (std::vector<std::vector<int>>{{9, 3}, {8, 4}, {8, 3, 1}, {7, 5}, {7, 4, 1}}));
    EXPECT_EQ(as_vectors(add_set(core, Color::zero, 3)),
              (std::vector<std::vector<int>>{{9, 4}, {9, 3, 1}, {8, 5}, {8, 4, 1}, {7, 5, 1}}));
}

TEST(AddSet, TrivialAndEmptyCases) {
    const auto core = bar_core(1);
    EXPECT_EQ(add_set(core, Color::one, 0), std::vector<StrictPartition>{core});
    EXPECT_TRUE(add_set(core, Color::one, 3).empty());
    EXPECT_TRUE(add_set(core, Color::one, -1).empty());
    // f_1 never opens a new row: column 1 has color 0.
    EXPECT_TRUE(add_set(StrictPartition(), Color::one, 1).empty());
    EXPECT_EQ(as_vectors(add_set(StrictPartition(), Color::zero, 1)), (std::vector<std::vector<int>>{{1}}));
}

TEST(AddSet, EmptinessBounds) {
    for (int m = 1; m <= 5; ++m) {
        EXPECT_FALSE(add_set(bar_core(m), Color::one, 2 * m).empty()) << m;
        EXPECT_TRUE(add_set(bar_core(m), Color::one, 2 * m + 1).empty()) << m;
        EXPECT_FALSE(add_set(bar_core(-m), Color::zero, 2 * m + 1).empty()) << m;
        EXPECT_TRUE(add_set(bar_core(-m), Color::zero, 2 * m + 2).empty()) << m;
    }
}

TEST(AddSet, FullFillingOfPositiveCoreGivesNegativeCore) {
    for (int m = 1; m <= 5; ++m) {
        EXPECT_EQ(add_set(bar_core(m), Color::one, 2 * m), std::vector<StrictPartition>{bar_core(-m)}) << m;
        EXPECT_EQ(add_set(bar_core(-m), Color::zero, 2 * m + 1), std::vector<StrictPartition>{bar_core(m + 1)})
            << m;
    }
}

TEST(AddSet, MembersSatisfyDefinition) {
    for (int m = -4; m <= 4; ++m) {
        const auto core = bar_core(m);
        for (Color c : {Color::zero, Color::one}) {
            for (int ell = 0; ell <= 2 * std::abs(m) + 2; ++ell) {
                const auto set = add_set(core, c, ell);
                EXPECT_TRUE(std::is_sorted(set.begin(), set.end(), std::greater<>()));
                EXPECT_EQ(std::adjacent_find(set.begin(), set.end()), set.end());
                for (const auto& mu : set) {
                    ASSERT_GE(mu.length(), core.length());
                    EXPECT_EQ(mu.weight(), core.weight() + ell);
                    for (std::size_t r = 0; r < mu.length(); ++r) {
                        ASSERT_GE(mu.at(r), core.at(r));
                        for (int col = core.at(r) + 1; col <= mu.at(r); ++col) EXPECT_EQ(color(col), c);
                    }
                }
            }
        }
    }
}

TEST(AddSet, MatchesSuccessiveAdditionOracle) {
    for (int m = -4; m <= 4; ++m) {
        for (Color c : {Color::zero, Color::one}) {
            for (int ell = 0; ell <= 2 * std::abs(m) + 1; ++ell) {
                const auto expected = oracle::successive_additions(bar_core(m).parts(), c, ell);
                const auto got = as_vectors(add_set(bar_core(m), c, ell));
                EXPECT_EQ(std::set<std::vector<int>>(got.begin(), got.end()), expected)
                    << "m=" << m << " color=" << static_cast<int>(c) << " ell=" << ell;
            }
        }
    }
}
