#include "flagpath/flag.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>

#include "flagpath/counting.hpp"

namespace flagpath {

namespace {

using BinState = std::vector<std::uint64_t>;  // one mask per bin

std::string set_to_string(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string partition_to_string(const OrderedPartition& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += set_to_string(p[i]);
    }
    return out + ")";
}

// All size-r subsets of the set bits of `mask`, passed to `fn`.
template <typename Fn>
void for_each_subset_of_size(std::uint64_t mask, int r, Fn&& fn) {
    std::vector<int> bits;
    while (mask) {
        bits.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    const int n = static_cast<int>(bits.size());
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    if (r > n) return;
    while (true) {
        std::uint64_t chosen = 0;
        for (int i : idx) chosen |= std::uint64_t{1} << bits[static_cast<size_t>(i)];
        fn(chosen);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

OrderedPartition partition_from_state(const BinState& state) {
    OrderedPartition blocks(state.size());
    for (size_t j = 0; j < state.size(); ++j) blocks[j] = set_from_mask(state[j]);
    return blocks;
}

}  // namespace

OrderedPartition normalized_partition(OrderedPartition p) {
    for (auto& block : p) std::sort(block.begin(), block.end());
    return p;
}

OrderedPartition simulate(const BinSpec& spec, const MoveSchedule& schedule) {
    const int k = spec.k();
    const int L = spec.L();
    if (static_cast<int>(schedule.turns.size()) != spec.n)
        throw WrongCardinality("schedule must have exactly n turns");
    std::vector<std::set<int>> bins(static_cast<size_t>(k));
    for (int t = 1; t <= spec.n; ++t) {
        for (int ball = (t - 1) * L + 1; ball <= t * L; ++ball)
            bins[0].insert(ball);
        const auto& moves = schedule.turns[static_cast<size_t>(t - 1)];
        if (static_cast<int>(moves.size()) != k - 1)
            throw WrongCardinality("turn " + std::to_string(t) + " must have " +
                                   std::to_string(k - 1) + " boundary moves");
        for (int i = 1; i <= k - 1; ++i) {
            const auto& move = moves[static_cast<size_t>(i - 1)];
            const int expected = L - spec.prefix_l(i);
            if (static_cast<int>(move.size()) != expected)
                throw WrongCardinality("turn " + std::to_string(t) + " boundary " +
                                       std::to_string(i) + " must move " +
                                       std::to_string(expected) + " balls");
            for (int ball : move) {
                if (!bins[static_cast<size_t>(i - 1)].erase(ball))
                    throw IllegalMove("ball " + std::to_string(ball) +
                                      " is not in bin " + std::to_string(i) +
                                      " at turn " + std::to_string(t));
                bins[static_cast<size_t>(i)].insert(ball);
            }
        }
    }
    OrderedPartition out(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
        out[static_cast<size_t>(j)].assign(bins[static_cast<size_t>(j)].begin(),
                                           bins[static_cast<size_t>(j)].end());
    return out;
}

ReachableWithCounts reachable_configurations_with_counts(const BinSpec& spec,
                                                         int limit) {
    const int k = spec.k();
    const int L = spec.L();
    if (spec.ground_size() > limit)
        throw GroundTooLarge("nL = " + std::to_string(spec.ground_size()) +
                             " exceeds the process limit " + std::to_string(limit));

    std::map<BinState, BigCount> frontier;
    frontier.emplace(BinState(static_cast<size_t>(k), 0), BigCount(1));
    for (int t = 1; t <= spec.n; ++t) {
        // Insert the next L balls into bin 1.
        std::map<BinState, BigCount> layer;
        std::uint64_t fresh = 0;
        for (int ball = (t - 1) * L + 1; ball <= t * L; ++ball)
            fresh |= std::uint64_t{1} << (ball - 1);
        for (const auto& [state, cnt] : frontier) {
            BinState next = state;
            next[0] |= fresh;
            layer[std::move(next)] += cnt;
        }
        // Cascade the boundary moves.
        for (int i = 1; i <= k - 1; ++i) {
            const int move_count = L - spec.prefix_l(i);
            std::map<BinState, BigCount> moved;
            for (const auto& [state, cnt] : layer) {
                for_each_subset_of_size(
                    state[static_cast<size_t>(i - 1)], move_count,
                    [&](std::uint64_t chosen) {
                        BinState next = state;
                        next[static_cast<size_t>(i - 1)] &= ~chosen;
                        next[static_cast<size_t>(i)] |= chosen;
                        moved[std::move(next)] += cnt;
                    });
            }
            layer = std::move(moved);
        }
        frontier = std::move(layer);
    }

    ReachableWithCounts out;
    out.family.ground_size = spec.ground_size();
    out.family.flag_rank.reserve(static_cast<size_t>(k));
    for (int li : spec.l) out.family.flag_rank.push_back(spec.n * li);
    for (const auto& [state, cnt] : frontier) {
        out.family.flags.push_back(partition_from_state(state));
        out.schedule_counts.push_back(cnt);
    }
    // std::map over bin-mask states already yields a deterministic order;
    // re-sort by the partition representation to pin the canonical order.
    std::vector<size_t> order(out.family.flags.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return out.family.flags[a] < out.family.flags[b];
    });
    FlagBasisFamily sorted_family = out.family;
    std::vector<BigCount> sorted_counts(out.schedule_counts.size());
    for (size_t i = 0; i < order.size(); ++i) {
        sorted_family.flags[i] = out.family.flags[order[i]];
        sorted_counts[i] = out.schedule_counts[order[i]];
    }
    out.family = std::move(sorted_family);
    out.schedule_counts = std::move(sorted_counts);
    return out;
}

FlagBasisFamily reachable_configurations(const BinSpec& spec, int limit) {
    const int k = spec.k();
    const int L = spec.L();
    if (spec.ground_size() > limit)
        throw GroundTooLarge("nL = " + std::to_string(spec.ground_size()) +
                             " exceeds the process limit " + std::to_string(limit));

    // Same closure as the counting variant, without the multiplicities.
    std::set<BinState> frontier{BinState(static_cast<size_t>(k), 0)};
    for (int t = 1; t <= spec.n; ++t) {
        std::set<BinState> layer;
        std::uint64_t fresh = 0;
        for (int ball = (t - 1) * L + 1; ball <= t * L; ++ball)
            fresh |= std::uint64_t{1} << (ball - 1);
        for (const auto& state : frontier) {
            BinState next = state;
            next[0] |= fresh;
            layer.insert(std::move(next));
        }
        for (int i = 1; i <= k - 1; ++i) {
            const int move_count = L - spec.prefix_l(i);
            std::set<BinState> moved;
            for (const auto& state : layer) {
                for_each_subset_of_size(
                    state[static_cast<size_t>(i - 1)], move_count,
                    [&](std::uint64_t chosen) {
                        BinState next = state;
                        next[static_cast<size_t>(i - 1)] &= ~chosen;
                        next[static_cast<size_t>(i)] |= chosen;
                        moved.insert(std::move(next));
                    });
            }
            layer = std::move(moved);
        }
        frontier = std::move(layer);
    }

    FlagBasisFamily out;
    out.ground_size = spec.ground_size();
    out.flag_rank.reserve(static_cast<size_t>(k));
    for (int li : spec.l) out.flag_rank.push_back(spec.n * li);
    for (const auto& state : frontier)
        out.flags.push_back(partition_from_state(state));
    std::sort(out.flags.begin(), out.flags.end());
    return out;
}

bool FlagMatroid::contains(const OrderedPartition& partition) const {
    if (static_cast<int>(partition.size()) != spec.k()) return false;
    for (int j = 0; j < spec.k(); ++j)
        if (static_cast<int>(partition[static_cast<size_t>(j)].size()) !=
            spec.n * spec.l[static_cast<size_t>(j)])
            return false;
    return is_configuration_path(path_from_partition(partition, spec), spec);
}

FlagMatroid tbp_flag(const BinSpec& spec, int limit) {
    FlagMatroid out;
    out.spec = spec;
    const int k = spec.k();
    const int L = spec.L();
    for (int i = 1; i <= k; ++i)
        out.constituents.push_back(
            tbp_matroid(spec.prefix_l(i), L - spec.prefix_l(i), spec.n));
    out.flag_count = count_configurations(spec);
    out.family.ground_size = spec.ground_size();
    for (int li : spec.l) out.family.flag_rank.push_back(spec.n * li);

    if (spec.ground_size() <= limit) {
        out.family_explicit = true;
        // Enumerate configuration paths directly, pruning at block boundaries.
        std::vector<int> word;
        std::vector<int> tally(static_cast<size_t>(k), 0);
        const int total = spec.ground_size();
        auto dfs = [&](auto&& self, int pos) -> void {
            if (pos == total) {
                out.family.flags.push_back(partition_from_path(
                    StepSequence(k, word)));
                return;
            }
            for (int j = 1; j <= k; ++j) {
                if (tally[static_cast<size_t>(j - 1)] ==
                    spec.n * spec.l[static_cast<size_t>(j - 1)])
                    continue;
                ++tally[static_cast<size_t>(j - 1)];
                word.push_back(j);
                bool feasible = true;
                if ((pos + 1) % L == 0) {
                    const int t = (pos + 1) / L;
                    int acc = 0;
                    for (int i = 1; i < k && feasible; ++i) {
                        acc += tally[static_cast<size_t>(i - 1)];
                        if (acc > t * spec.prefix_l(i)) feasible = false;
                    }
                }
                if (feasible) self(self, pos + 1);
                word.pop_back();
                --tally[static_cast<size_t>(j - 1)];
            }
        };
        dfs(dfs, 0);
        std::sort(out.family.flags.begin(), out.family.flags.end());
    }
    return out;
}

FlagVerdict is_flag_matroid(const FlagBasisFamily& family, int limit) {
    if (family.flags.empty()) throw EmptyFamily("the flag family is empty");
    const int m = family.ground_size;
    if (m > limit)
        throw GroundTooLarge("ground size " + std::to_string(m) +
                             " exceeds the brute-force limit " +
                             std::to_string(limit));
    const int k = static_cast<int>(family.flags.front().size());
    for (const auto& flag : family.flags) {
        if (static_cast<int>(flag.size()) != k)
            throw NotAPartition("flags disagree on the number of blocks");
        std::uint64_t seen = 0;
        int count = 0;
        for (const auto& block : flag) {
            const std::uint64_t bm = mask_from_set(block, m);
            if (seen & bm) throw NotAPartition("flag blocks overlap");
            seen |= bm;
            count += static_cast<int>(block.size());
        }
        if (count != m) throw NotAPartition("flag blocks do not cover [m]");
    }

    FlagVerdict verdict;
    // (F1) every prefix-union family must be the bases of a matroid.
    std::vector<ExplicitMatroid> constituents;
    for (int i = 1; i <= k; ++i) {
        std::set<std::uint64_t> prefix_masks;
        for (const auto& flag : family.flags) {
            std::uint64_t u = 0;
            for (int j = 0; j < i; ++j)
                u |= mask_from_set(flag[static_cast<size_t>(j)], m);
            prefix_masks.insert(u);
        }
        std::vector<std::vector<int>> bases;
        for (std::uint64_t u : prefix_masks) bases.push_back(set_from_mask(u));
        const auto exchange = verify_matroid_axioms(bases, m, limit);
        if (!exchange) {
            verdict.axiom = 1;
            verdict.index = i;
            verdict.detail = "B_" + std::to_string(i) + " fails basis exchange: B1=" +
                             set_to_string(exchange.b1) + " B2=" +
                             set_to_string(exchange.b2) + " x=" +
                             std::to_string(exchange.x);
            return verdict;
        }
        constituents.emplace_back(m, bases);
    }
    // (F2) consecutive constituents must form a quotient chain.
    for (int i = 1; i <= k - 1; ++i) {
        if (!is_quotient_brute_force(constituents[static_cast<size_t>(i - 1)],
                                     constituents[static_cast<size_t>(i)], limit)) {
            verdict.axiom = 2;
            verdict.index = i;
            verdict.detail = "M_" + std::to_string(i) + " is not a quotient of M_" +
                             std::to_string(i + 1);
            return verdict;
        }
    }
    // (F3) every basis chain must come from a flag in the family. Chains are
    // built by extending bases of M_1 blockwise instead of scanning all
    // multinomial partitions.
    std::set<OrderedPartition> members(family.flags.begin(), family.flags.end());
    std::vector<std::uint64_t> chain(static_cast<size_t>(k));
    std::optional<OrderedPartition> missing;
    auto extend = [&](auto&& self, int i, std::uint64_t below) -> bool {
        if (i == k) {
            OrderedPartition candidate;
            std::uint64_t prev = 0;
            for (int j = 0; j < k; ++j) {
                candidate.push_back(set_from_mask(chain[static_cast<size_t>(j)] & ~prev));
                prev = chain[static_cast<size_t>(j)];
            }
            if (!members.count(candidate)) {
                missing = std::move(candidate);
                return true;
            }
            return false;
        }
        for (std::uint64_t b : constituents[static_cast<size_t>(i)].basis_masks()) {
            if ((below & ~b) != 0) continue;  // chain must be increasing
            chain[static_cast<size_t>(i)] = b;
            if (self(self, i + 1, b)) return true;
        }
        return false;
    };
    if (extend(extend, 0, 0)) {
        verdict.axiom = 3;
        verdict.index = 0;
        verdict.detail = "basis chain yields the missing partition " +
                         partition_to_string(*missing);
        return verdict;
    }
    verdict.ok = true;
    verdict.constituents = std::move(constituents);
    return verdict;
}

MoveSchedule realize(const BinSpec& spec, const OrderedPartition& target) {
    const int k = spec.k();
    const int L = spec.L();
    const int m = spec.ground_size();
    const OrderedPartition partition = normalized_partition(target);
    // path_from_partition validates the partition shape.
    (void)path_from_partition(partition, spec);

    std::vector<int> block_of(static_cast<size_t>(m) + 1, 0);
    for (int j = 0; j < k; ++j)
        for (int e : partition[static_cast<size_t>(j)])
            block_of[static_cast<size_t>(e)] = j + 1;

    // Each prefix union C_i must be a basis of the i-th tbp constituent.
    for (int i = 1; i <= k - 1; ++i) {
        std::vector<int> prefix_union;
        for (int j = 0; j < i; ++j)
            for (int e : partition[static_cast<size_t>(j)])
                prefix_union.push_back(e);
        const NestedMatroid mi =
            tbp_matroid(spec.prefix_l(i), L - spec.prefix_l(i), spec.n);
        if (static_cast<int>(prefix_union.size()) != mi.rank() ||
            mi.rank_of(prefix_union) != mi.rank())
            throw NotAFlagBasis("C_" + std::to_string(i) +
                                " is not a basis of the " + std::to_string(i) +
                                "-th constituent");
    }

    MoveSchedule schedule;
    std::vector<std::set<int>> bins(static_cast<size_t>(k));
    for (int t = 1; t <= spec.n; ++t) {
        std::vector<std::vector<std::vector<int>>>& turns = schedule.turns;
        turns.emplace_back();
        for (int ball = (t - 1) * L + 1; ball <= t * L; ++ball) bins[0].insert(ball);
        for (int i = 1; i <= k - 1; ++i) {
            const int move_count = L - spec.prefix_l(i);
            // Prefer balls destined for the deepest bins; within one
            // preference class take the lowest labels first.
            std::vector<int> candidates(bins[static_cast<size_t>(i - 1)].begin(),
                                        bins[static_cast<size_t>(i - 1)].end());
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](int a, int b) {
                                 const int ba = block_of[static_cast<size_t>(a)];
                                 const int bb = block_of[static_cast<size_t>(b)];
                                 return ba != bb ? ba > bb : a < b;
                             });
            std::vector<int> move(candidates.begin(),
                                  candidates.begin() + move_count);
            for (int ball : move) {
                if (block_of[static_cast<size_t>(ball)] <= i)
                    throw NotAFlagBasis(
                        "greedy realization ran out of movable balls at turn " +
                        std::to_string(t) + " boundary " + std::to_string(i));
                bins[static_cast<size_t>(i - 1)].erase(ball);
                bins[static_cast<size_t>(i)].insert(ball);
            }
            std::sort(move.begin(), move.end());
            turns.back().push_back(std::move(move));
        }
    }
    return schedule;
}

}  // namespace flagpath
