#include <numeric>
#include <vector>

#include "doctest.h"

#include "flagpath/flag.hpp"
#include "flagpath/matroid.hpp"

using namespace flagpath;

namespace {

MoveSchedule schedule_of(std::vector<std::vector<std::vector<int>>> turns) {
    MoveSchedule s;
    s.turns = std::move(turns);
    return s;
}

FlagBasisFamily family_of(int ground, std::vector<int> ranks,
                          std::vector<OrderedPartition> flags) {
    FlagBasisFamily f;
    f.ground_size = ground;
    f.flag_rank = std::move(ranks);
    for (auto& p : flags) f.flags.push_back(normalized_partition(std::move(p)));
    std::sort(f.flags.begin(), f.flags.end());
    return f;
}

}  // namespace

TEST_CASE("simulate") {
    const BinSpec one(std::vector<int>{1, 1, 1}, 1);
    CHECK(simulate(one, schedule_of({{{2, 3}, {3}}})) ==
          OrderedPartition{{1}, {2}, {3}});

    const BinSpec pair(std::vector<int>{1, 1}, 1);
    CHECK(simulate(pair, schedule_of({{{1}}})) == OrderedPartition{{2}, {1}});

    const BinSpec two(std::vector<int>{1, 1, 1}, 2);
    CHECK(simulate(two, schedule_of({{{1, 2}, {1}}, {{3, 4}, {2}}})) ==
          OrderedPartition{{5, 6}, {3, 4}, {1, 2}});

    // Ball 3 is still in bin 1 when the second move claims it from bin 2.
    CHECK_THROWS_AS(simulate(one, schedule_of({{{1, 2}, {3}}})), IllegalMove);
    CHECK_THROWS_AS(simulate(one, schedule_of({{{2, 3}, {2, 3}}})), WrongCardinality);
    CHECK_THROWS_AS(simulate(one, schedule_of({{{3}, {3}}})), WrongCardinality);
}

TEST_CASE("reachable_configurations") {
    CHECK(reachable_configurations(BinSpec({1, 1, 1}, 1)).flags.size() == 6);
    CHECK(reachable_configurations(BinSpec({1, 1}, 2)).flags.size() == 5);
    CHECK(reachable_configurations(BinSpec({1, 1, 1}, 2)).flags.size() == 63);
    CHECK_THROWS_AS(reachable_configurations(BinSpec({1, 1, 1}, 5)), GroundTooLarge);
}

TEST_CASE("reachable_configurations_with_counts") {
    const auto one = reachable_configurations_with_counts(BinSpec({1, 1, 1}, 1));
    REQUIRE(one.schedule_counts.size() == 6);
    for (const BigCount& c : one.schedule_counts) CHECK(c == 1);

    const auto two = reachable_configurations_with_counts(BinSpec({1, 1, 1}, 2));
    REQUIRE(two.schedule_counts.size() == 63);
    const BigCount total = std::accumulate(two.schedule_counts.begin(),
                                           two.schedule_counts.end(), BigCount(0));
    CHECK(total == 108);
}

TEST_CASE("tbp_flag") {
    const FlagMatroid uniform = tbp_flag(BinSpec({1, 1, 1}, 1));
    CHECK(uniform.family.flags.size() == 6);
    CHECK(uniform.flag_count == 6);
    CHECK(uniform.family.flag_rank == std::vector<int>{1, 1, 1});

    const FlagMatroid pair = tbp_flag(BinSpec({1, 1}, 2));
    CHECK(pair.family.flags.size() == 5);
    CHECK(pair.family.flag_rank == std::vector<int>{2, 2});
    CHECK(pair.constituents[0] == tbp_matroid(1, 1, 2));

    const FlagMatroid two = tbp_flag(BinSpec({1, 1, 1}, 2));
    CHECK(two.flag_count == 63);
    REQUIRE(two.constituents.size() == 3);
    CHECK(two.constituents[0] == tbp_matroid(1, 2, 2));
    CHECK(two.constituents[1] == tbp_matroid(2, 1, 2));
    CHECK(two.constituents[2] == tbp_matroid(3, 0, 2));
    CHECK(two.contains({{5, 6}, {3, 4}, {1, 2}}));
    CHECK_FALSE(two.contains({{1, 2}, {3, 4}, {5, 6}}));
}

TEST_CASE("is_flag_matroid") {
    const FlagMatroid two = tbp_flag(BinSpec({1, 1, 1}, 2));
    const FlagVerdict ok = is_flag_matroid(two.family);
    CHECK(ok.ok);
    REQUIRE(ok.constituents.size() == 3);
    CHECK(ok.constituents[0].rank() == 2);
    CHECK(ok.constituents[2].rank() == 6);

    // The prefix unions {1,2} and {2,3} do form a matroid, but its flats are
    // not nested with the second constituent's, so the quotient axiom fails.
    const FlagVerdict bad = is_flag_matroid(
        family_of(3, {1, 1, 1}, {{{1}, {2}, {3}}, {{2}, {3}, {1}}}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.axiom == 2);

    // All six partitions: the uniform flag matroid.
    const FlagVerdict uniform = is_flag_matroid(
        family_of(3, {1, 1, 1},
                  {{{1}, {2}, {3}}, {{1}, {3}, {2}}, {{2}, {1}, {3}},
                   {{2}, {3}, {1}}, {{3}, {1}, {2}}, {{3}, {2}, {1}}}));
    CHECK(uniform.ok);

    CHECK_THROWS_AS(is_flag_matroid(family_of(3, {1, 1, 1}, {})), EmptyFamily);
}

TEST_CASE("realize") {
    const BinSpec one(std::vector<int>{1, 1, 1}, 1);
    const MoveSchedule forced = realize(one, {{3}, {2}, {1}});
    REQUIRE(forced.turns.size() == 1);
    CHECK(forced.turns[0] ==
          std::vector<std::vector<int>>{{1, 2}, {1}});

    const BinSpec two(std::vector<int>{1, 1, 1}, 2);
    const MoveSchedule greedy = realize(two, {{5, 6}, {3, 4}, {1, 2}});
    REQUIRE(greedy.turns.size() == 2);
    CHECK(greedy.turns[0] == std::vector<std::vector<int>>{{1, 2}, {1}});
    CHECK(greedy.turns[1] == std::vector<std::vector<int>>{{3, 4}, {2}});
    CHECK(simulate(two, greedy) == OrderedPartition{{5, 6}, {3, 4}, {1, 2}});

    CHECK_THROWS_AS(realize(two, {{1, 2}, {3, 4}, {5, 6}}), NotAFlagBasis);
}

TEST_CASE("realize round-trips every flag basis at desk scale") {
    for (const BinSpec& spec :
         {BinSpec({1, 1, 1}, 2), BinSpec({2, 1}, 3), BinSpec({1, 2, 1}, 2)}) {
        const FlagMatroid fm = tbp_flag(spec);
        REQUIRE(fm.family_explicit);
        for (const OrderedPartition& target : fm.family.flags)
            CHECK(simulate(spec, realize(spec, target)) == target);
    }
}
