#include "flagpath/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace flagpath {

StepSequence::StepSequence(int k_, std::vector<int> steps_)
    : k(k_), steps(std::move(steps_)) {
    if (k < 1) throw DimensionMismatch("dimension count must be positive");
    for (int a : steps)
        if (a < 1 || a > k)
            throw DimensionMismatch("axis index " + std::to_string(a) +
                                    " outside [1, " + std::to_string(k) + "]");
}

BinSpec::BinSpec(std::vector<int> l_, int n_) : l(std::move(l_)), n(n_) {
    if (l.empty()) throw EmptyPath("bin sizes must be non-empty");
    for (int li : l)
        if (li < 1) throw OutOfRange("bin sizes must be positive");
    if (n < 1) throw OutOfRange("turn count must be positive");
}

int BinSpec::L() const { return std::accumulate(l.begin(), l.end(), 0); }

int BinSpec::prefix_l(int i) const {
    return std::accumulate(l.begin(), l.begin() + i, 0);
}

std::vector<std::vector<int>> prefix_counts(const StepSequence& path) {
    std::vector<std::vector<int>> rows;
    rows.reserve(path.steps.size() + 1);
    std::vector<int> tally(static_cast<size_t>(path.k), 0);
    rows.push_back(tally);
    for (int a : path.steps) {
        ++tally[static_cast<size_t>(a - 1)];
        rows.push_back(tally);
    }
    return rows;
}

StepSequence path_from_text(const std::string& text, int k) {
    std::vector<int> steps;
    steps.reserve(text.size());
    bool letters = false;
    for (char c : text) {
        if (c == 'N' || c == 'n') {
            steps.push_back(1);
            letters = true;
        } else if (c == 'E' || c == 'e') {
            steps.push_back(2);
            letters = true;
        } else if (c >= '1' && c <= '9') {
            steps.push_back(c - '0');
        } else {
            throw DimensionMismatch("unrecognized step character '" +
                                    std::string(1, c) + "'");
        }
    }
    if (k == 0) {
        k = letters ? 2 : 1;
        for (int a : steps) k = std::max(k, a);
    }
    return StepSequence(k, std::move(steps));
}

std::string path_to_text(const StepSequence& path) {
    std::string out;
    out.reserve(path.steps.size());
    for (int a : path.steps) {
        if (path.k == 2)
            out += (a == 1) ? 'N' : 'E';
        else
            out += static_cast<char>('0' + a);
    }
    return out;
}

bool is_configuration_path(const StepSequence& path, const BinSpec& spec) {
    if (path.k != spec.k())
        throw DimensionMismatch("path has k=" + std::to_string(path.k) +
                                ", spec has k=" + std::to_string(spec.k()));
    const int k = spec.k();
    const int L = spec.L();
    std::vector<int> total(static_cast<size_t>(k), 0);
    for (int a : path.steps) ++total[static_cast<size_t>(a - 1)];
    for (int j = 0; j < k; ++j)
        if (total[static_cast<size_t>(j)] != spec.n * spec.l[static_cast<size_t>(j)])
            throw WrongStepMultiset("expected " +
                                    std::to_string(spec.n * spec.l[static_cast<size_t>(j)]) +
                                    " steps of type e_" + std::to_string(j + 1));

    // Constraints are checked only at prefix lengths tL (checkpoint form).
    std::vector<int> tally(static_cast<size_t>(k), 0);
    int pos = 0;
    for (int a : path.steps) {
        ++tally[static_cast<size_t>(a - 1)];
        ++pos;
        if (pos % L == 0) {
            const int t = pos / L;
            int acc = 0;
            for (int i = 1; i < k; ++i) {
                acc += tally[static_cast<size_t>(i - 1)];
                if (acc > t * spec.prefix_l(i)) return false;
            }
        }
    }
    return true;
}

StepSequence switch_steps(const StepSequence& path, int i, int j) {
    if (i < 1 || j > path.length() || i >= j)
        throw IllegalSwitch("positions must satisfy 1 <= i < j <= length");
    if (path.axis(i) > path.axis(j))
        throw IllegalSwitch("axis(s_i) must not exceed axis(s_j)");
    StepSequence out = path;
    std::swap(out.steps[static_cast<size_t>(i - 1)],
              out.steps[static_cast<size_t>(j - 1)]);
    return out;
}

StepSequence complete_to_configuration(const StepSequence& prefix,
                                       const std::vector<int>& l,
                                       int n_extra) {
    const int k = static_cast<int>(l.size());
    if (prefix.k != k)
        throw DimensionMismatch("prefix dimension differs from |l|");
    if (n_extra < 0) throw OutOfRange("n_extra must be non-negative");
    const int L = std::accumulate(l.begin(), l.end(), 0);

    std::vector<int> tally(static_cast<size_t>(k), 0);
    int pos = 0;
    for (int a : prefix.steps) {
        ++tally[static_cast<size_t>(a - 1)];
        ++pos;
        if (pos % L == 0) {
            const int t = pos / L;
            int acc = 0, cap = 0;
            for (int i = 1; i < k; ++i) {
                acc += tally[static_cast<size_t>(i - 1)];
                cap += l[static_cast<size_t>(i - 1)];
                if (acc > t * cap)
                    throw InfeasiblePrefix("block boundary t=" + std::to_string(t) +
                                           " violates the prefix bound");
            }
        }
    }

    // n' = least turn count covering the prefix tallies.
    int n_min = 0;
    for (int j = 0; j < k; ++j) {
        const int lj = l[static_cast<size_t>(j)];
        n_min = std::max(n_min, (tally[static_cast<size_t>(j)] + lj - 1) / lj);
    }
    const int n_total = n_min + n_extra;

    StepSequence out = prefix;
    for (int j = k; j >= 1; --j) {
        const int missing = n_total * l[static_cast<size_t>(j - 1)] -
                            tally[static_cast<size_t>(j - 1)];
        out.steps.insert(out.steps.end(), static_cast<size_t>(missing), j);
    }
    return out;
}

StepSequence path_from_partition(const std::vector<std::vector<int>>& partition,
                                 const BinSpec& spec) {
    const int m = spec.ground_size();
    std::vector<int> steps(static_cast<size_t>(m), 0);
    int seen = 0;
    for (size_t j = 0; j < partition.size(); ++j) {
        for (int e : partition[j]) {
            if (e < 1 || e > m)
                throw NotAPartition("element " + std::to_string(e) +
                                    " outside [1, " + std::to_string(m) + "]");
            if (steps[static_cast<size_t>(e - 1)] != 0)
                throw NotAPartition("element " + std::to_string(e) +
                                    " appears in two blocks");
            steps[static_cast<size_t>(e - 1)] = static_cast<int>(j) + 1;
            ++seen;
        }
    }
    if (seen != m) throw NotAPartition("blocks do not cover the ground set");
    if (static_cast<int>(partition.size()) != spec.k())
        throw NotAPartition("block count differs from k");
    return StepSequence(spec.k(), std::move(steps));
}

std::vector<std::vector<int>> partition_from_path(const StepSequence& path) {
    std::vector<std::vector<int>> blocks(static_cast<size_t>(path.k));
    for (int i = 1; i <= path.length(); ++i)
        blocks[static_cast<size_t>(path.axis(i) - 1)].push_back(i);
    return blocks;
}

}  // namespace flagpath
