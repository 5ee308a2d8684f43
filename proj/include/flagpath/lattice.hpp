#pragma once

#include <string>
#include <vector>

#include "flagpath/errors.hpp"

namespace flagpath {

// A word over the alphabet {e_1, ..., e_k}. Steps are 1-indexed throughout
// the library so that step i corresponds to ball i of the process.
struct StepSequence {
    int k = 0;                  // dimension count
    std::vector<int> steps;     // axis indices, each in [1, k]

    StepSequence() = default;
    StepSequence(int k_, std::vector<int> steps_);

    int length() const { return static_cast<int>(steps.size()); }
    // 1-based access to the axis of step i.
    int axis(int i) const { return steps.at(static_cast<size_t>(i) - 1); }

    bool operator==(const StepSequence&) const = default;
};

// The (l_1, ..., l_k) bin sizes together with the number of turns n.
struct BinSpec {
    std::vector<int> l;
    int n = 1;

    BinSpec() = default;
    BinSpec(std::vector<int> l_, int n_);

    int k() const { return static_cast<int>(l.size()); }
    int L() const;                      // l_1 + ... + l_k
    int ground_size() const { return n * L(); }
    // l_1 + ... + l_i (prefix sum, i in [0, k]).
    int prefix_l(int i) const;
};

// Per-prefix step-type tallies: row t holds the k-vector of counts among
// the first t steps; row 0 is all zeros.
std::vector<std::vector<int>> prefix_counts(const StepSequence& path);

// Text form: axis digits "1".."9", or the letters N (axis 1) / E (axis 2)
// when k = 2. parse accepts either alphabet.
StepSequence path_from_text(const std::string& text, int k = 0);
std::string path_to_text(const StepSequence& path);

// Checkpoint predicate: the path is an n-configuration path iff among the
// first tL steps at most t(l_1+...+l_i) have type in {e_1,...,e_i}, for all
// t in [1, n] and i in [1, k-1]. A wrong per-axis step multiset is an error,
// so `false` always means "valid multiset, unreachable configuration".
bool is_configuration_path(const StepSequence& path, const BinSpec& spec);

// Exchanges steps at 1-based positions i < j; requires axis(s_i) <= axis(s_j),
// which preserves the configuration-path property.
StepSequence switch_steps(const StepSequence& path, int i, int j);

// Completes a feasible prefix to an (n'+n_extra)-configuration path by
// appending the missing steps in axis order e_k, e_{k-1}, ..., e_1, where n'
// is the least number of turns covering the prefix tallies.
StepSequence complete_to_configuration(const StepSequence& prefix,
                                       const std::vector<int>& l,
                                       int n_extra);

// Ordered partition <-> path correspondence: step i has axis j iff element i
// lies in block j. Blocks are kept sorted.
StepSequence path_from_partition(const std::vector<std::vector<int>>& partition,
                                 const BinSpec& spec);
std::vector<std::vector<int>> partition_from_path(const StepSequence& path);

}  // namespace flagpath
