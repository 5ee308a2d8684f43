#include <algorithm>
#include <vector>

#include "doctest.h"

#include "flagpath/lattice.hpp"

using namespace flagpath;

namespace {

StepSequence seq(int k, std::vector<int> steps) { return StepSequence(k, std::move(steps)); }

}  // namespace

TEST_CASE("is_configuration_path checkpoint predicate") {
    const BinSpec one(std::vector<int>{1, 1, 1}, 1);
    const BinSpec two(std::vector<int>{1, 1, 1}, 2);

    CHECK(is_configuration_path(seq(3, {3, 2, 1}), one));
    // Two type-1 steps among the first three violate the t=1 bound.
    CHECK_FALSE(is_configuration_path(seq(3, {1, 2, 1, 3, 2, 3}), two));
    CHECK(is_configuration_path(seq(3, {3, 2, 1, 3, 2, 1}), two));
}

TEST_CASE("is_configuration_path rejects bad inputs as errors") {
    const BinSpec two(std::vector<int>{1, 1, 1}, 2);
    CHECK_THROWS_AS(is_configuration_path(seq(3, {1, 1, 1, 2, 2, 3}), two),
                    WrongStepMultiset);
    CHECK_THROWS_AS(is_configuration_path(seq(2, {1, 2}), two), DimensionMismatch);
}

TEST_CASE("switch_steps") {
    CHECK(switch_steps(seq(2, {1, 2}), 1, 2) == seq(2, {2, 1}));

    const BinSpec two(std::vector<int>{1, 1, 1}, 2);
    const StepSequence base = seq(3, {3, 2, 1, 3, 2, 1});
    const StepSequence switched = switch_steps(base, 2, 4);
    CHECK(switched == seq(3, {3, 3, 1, 2, 2, 1}));
    CHECK(is_configuration_path(switched, two));

    CHECK_THROWS_AS(switch_steps(seq(2, {2, 1}), 1, 2), IllegalSwitch);
    CHECK_THROWS_AS(switch_steps(seq(2, {1, 2}), 2, 2), IllegalSwitch);
}

TEST_CASE("complete_to_configuration") {
    CHECK(complete_to_configuration(seq(3, {3}), {1, 1, 1}, 0) == seq(3, {3, 2, 1}));
    CHECK(path_to_text(complete_to_configuration(StepSequence(2, {}), {2, 1}, 1)) ==
          "ENN");
    CHECK(complete_to_configuration(seq(3, {3, 2, 1, 3}), {1, 1, 1}, 0) ==
          seq(3, {3, 2, 1, 3, 2, 1}));
    // Completions always pass the predicate.
    const StepSequence done = complete_to_configuration(seq(3, {3, 3, 2}), {1, 1, 1}, 1);
    CHECK(is_configuration_path(done, BinSpec({1, 1, 1}, 3)));
    CHECK_THROWS_AS(complete_to_configuration(seq(3, {1, 1, 2}), {1, 1, 1}, 0),
                    InfeasiblePrefix);
}

TEST_CASE("path and partition text forms") {
    CHECK(path_from_text("NE", 2) == seq(2, {1, 2}));
    CHECK(path_from_text("12", 2) == seq(2, {1, 2}));
    CHECK(path_to_text(seq(2, {1, 2, 2})) == "NEE");
    CHECK(path_to_text(seq(3, {3, 2, 1})) == "321");
    CHECK(path_from_text(path_to_text(seq(3, {1, 2, 3, 3, 2, 1}))) ==
          seq(3, {1, 2, 3, 3, 2, 1}));
}

TEST_CASE("path_from_partition and its inverse") {
    const BinSpec one(std::vector<int>{1, 1, 1}, 1);
    CHECK(path_from_partition({{1}, {2}, {3}}, one) == seq(3, {1, 2, 3}));

    // The rank-6 nested matroid basis {2,5,8,11,12,15} as a k=2 path.
    const BinSpec spec23(std::vector<int>{2, 3}, 3);
    const std::vector<std::vector<int>> blocks{
        {2, 5, 8, 11, 12, 15}, {1, 3, 4, 6, 7, 9, 10, 13, 14}};
    const StepSequence p = path_from_partition(blocks, spec23);
    CHECK(path_to_text(p) == "ENEENEENEENNEEN");
    CHECK(is_configuration_path(p, spec23));
    CHECK(partition_from_path(p) == blocks);

    CHECK_THROWS_AS(path_from_partition({{1, 2}, {2, 3}}, one), NotAPartition);
    CHECK_THROWS_AS(path_from_partition({{1}, {2}, {4}}, one), NotAPartition);
}

TEST_CASE("prefix_counts") {
    const auto rows = prefix_counts(seq(3, {3, 2, 1}));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<int>{0, 0, 0});
    CHECK(rows[1] == std::vector<int>{0, 0, 1});
    CHECK(rows[3] == std::vector<int>{1, 1, 1});
}

TEST_CASE("switch_steps preserves the predicate on random configuration paths") {
    // Deterministic sweep in place of randomness: all paths for small specs.
    for (const BinSpec& spec : {BinSpec({1, 1, 1}, 2), BinSpec({2, 1}, 3)}) {
        std::vector<int> word;
        for (int j = 1; j <= spec.k(); ++j)
            word.insert(word.end(),
                        static_cast<size_t>(spec.n * spec.l[static_cast<size_t>(j - 1)]),
                        j);
        std::sort(word.begin(), word.end());
        do {
            const StepSequence p(spec.k(), word);
            if (!is_configuration_path(p, spec)) continue;
            for (int i = 1; i <= p.length(); ++i)
                for (int j = i + 1; j <= p.length(); ++j) {
                    if (p.axis(i) > p.axis(j)) continue;
                    CHECK(is_configuration_path(switch_steps(p, i, j), spec));
                }
        } while (std::next_permutation(word.begin(), word.end()));
    }
}
