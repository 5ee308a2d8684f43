#pragma once

#include <string>
#include <vector>

#include "flagpath/counting_types.hpp"
#include "flagpath/lattice.hpp"
#include "flagpath/matroid.hpp"

namespace flagpath {

// Default ceiling for the process-reachability oracle and explicit flag
// enumeration (states are ordered partitions of [nL]).
inline constexpr int kDefaultProcessLimit = 12;

// A k-tuple of disjoint blocks covering the ground set; blocks sorted.
using OrderedPartition = std::vector<std::vector<int>>;

OrderedPartition normalized_partition(OrderedPartition p);

struct FlagBasisFamily {
    int ground_size = 0;
    std::vector<int> flag_rank;
    std::vector<OrderedPartition> flags;  // canonically sorted
};

// Per turn t and bin boundary i, the balls moved from bin i to bin i+1.
struct MoveSchedule {
    // turns[t][i] is the move set across boundary i+1 during turn t+1.
    std::vector<std::vector<std::vector<int>>> turns;
};

// Replays the ball process: each turn inserts the next L balls into bin 1,
// then applies the boundary moves in order. Returns the final bin contents.
OrderedPartition simulate(const BinSpec& spec, const MoveSchedule& schedule);

// Ground-truth oracle: breadth-first closure over every legal move choice.
// Independent of the lattice-path predicates.
FlagBasisFamily reachable_configurations(const BinSpec& spec,
                                         int limit = kDefaultProcessLimit);

// Same closure, additionally reporting for each configuration the number of
// distinct movement sequences that produce it (no closed form is claimed).
struct ReachableWithCounts {
    FlagBasisFamily family;
    std::vector<BigCount> schedule_counts;  // parallel to family.flags
};
ReachableWithCounts reachable_configurations_with_counts(
    const BinSpec& spec, int limit = kDefaultProcessLimit);

// The tennis-ball flag matroid: flags are the n-configurations; constituent
// i is the n-th (l_1+...+l_i, l_{i+1}+...+l_k)-tbp matroid. The family is
// enumerated explicitly only at desk scale; the flag count and membership
// predicate are available regardless.
struct FlagMatroid {
    BinSpec spec;
    std::vector<NestedMatroid> constituents;
    FlagBasisFamily family;    // flags empty when !family_explicit
    bool family_explicit = false;
    BigCount flag_count = 0;

    bool contains(const OrderedPartition& partition) const;
};

FlagMatroid tbp_flag(const BinSpec& spec, int limit = kDefaultProcessLimit);

// Verdict of the flag-matroid axiom check. When ok, constituents holds the
// matroids M_1..M_k recovered from the prefix unions.
struct FlagVerdict {
    bool ok = false;
    int axiom = 0;        // 1, 2 or 3 when violated
    int index = 0;        // the constituent index i involved
    std::string detail;   // human-readable witness
    std::vector<ExplicitMatroid> constituents;

    explicit operator bool() const { return ok; }
};

FlagVerdict is_flag_matroid(const FlagBasisFamily& family,
                            int limit = kDefaultBruteForceLimit);

// Greedy realization from the constituent-basis chain: produces a schedule
// with simulate(spec, schedule) == target. Within each preference class the
// lowest labels are taken first, so schedules are deterministic.
MoveSchedule realize(const BinSpec& spec, const OrderedPartition& target);

}  // namespace flagpath
