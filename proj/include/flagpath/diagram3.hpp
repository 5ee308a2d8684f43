#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flagpath/lattice.hpp"

namespace flagpath {

// Entry value marking (x, y) columns that meet no configuration path.
inline constexpr int kStar = -1;

// The (nl_1+1) x (nl_2+1) table of minimum heights: entry at row x+1,
// column y+1 is m_n(x, y), the least z with (x, y, z) on some
// n-configuration path, or kStar if there is none.
struct DiagramMatrix {
    std::array<int, 3> l{};
    int n = 0;
    std::vector<std::vector<int>> entries;

    int rows() const { return n * l[0] + 1; }
    int cols() const { return n * l[1] + 1; }

    bool operator==(const DiagramMatrix&) const = default;
};

struct Point3 {
    int x = 0, y = 0, z = 0;
};

// Closed-form block recursion for the n-diagram matrix.
DiagramMatrix diagram_matrix(const std::array<int, 3>& l, int n);

// m_n(x, y) with range validation.
int min_height(const DiagramMatrix& d, int x, int y);

// True iff (x, y, z) lies in the n-diagram.
bool contains_point(const DiagramMatrix& d, const Point3& p);

// Ground truth: minimum heights from a reachability DP over prefix states
// (forward feasibility and backward completability at the block boundaries).
DiagramMatrix brute_force_matrix(const BinSpec& spec, int limit = 21);

// Exhaustively compares "path contained in the diagram" with the
// configuration-path predicate over every monotone path in the bounding box.
struct DiagramVerdict {
    bool ok = true;
    std::optional<StepSequence> counterexample;

    explicit operator bool() const { return ok; }
};

DiagramVerdict paths_in_diagram_are_configurations(const DiagramMatrix& d,
                                                   const BinSpec& spec,
                                                   int limit = 15);

// CSV: header row of y values, first column of x values, "*" for stars.
std::string diagram_to_csv(const DiagramMatrix& d);
// JSON: {"l": [...], "n": ..., "entries": [[...]]} with null for stars.
std::string diagram_to_json(const DiagramMatrix& d);

}  // namespace flagpath
