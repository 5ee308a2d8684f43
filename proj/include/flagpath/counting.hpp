#pragma once

#include <optional>
#include <vector>

#include "flagpath/counting_types.hpp"
#include "flagpath/lattice.hpp"

namespace flagpath {

// Exact number of n-configurations of the (l_1,...,l_k) tennis ball problem.
// Dynamic program over per-axis tallies; the prefix bounds are enforced only
// at step indices that are multiples of L, so the state space stays
// polynomial in n for fixed k.
BigCount count_configurations(const BinSpec& spec);

// Brute-force companion: enumerate every (nl_1,...,nl_k)-partition of [nL]
// and keep those whose path satisfies the prefix bounds.
BigCount count_by_filter(const BinSpec& spec, int limit = 12);

// t(a,b,n): lattice paths to (bn, an) not going above (N^a E^b)^n. An
// independent 2-D route that must agree with count_configurations for k=2.
BigCount tbp_count(int a, int b, int n);

// Number of N/E paths with the same endpoint as P that do not go above P.
BigCount count_paths_below(const StepSequence& p);

// Exact multinomial coefficient (nL)! / ((nl_1)! ... (nl_k)!).
BigCount multinomial_partitions(const BinSpec& spec);

// Number of standard Young tableaux of the given shape (weakly decreasing
// positive row lengths), by the hook-length formula.
BigCount hook_length_syt(const std::vector<int>& shape);

struct BoundsReport {
    BigCount upper_multinomial;
    std::optional<BigCount> lower_hook;  // needs l_k >= ... >= l_1
    BigCount lower_product;
    std::optional<BigCount> exact;
};

BoundsReport bounds(const BinSpec& spec, bool with_exact);

// Least-squares exponent fits for the (1,1,1) problem: each series f(n) is
// modelled as c * 27^n * n^alpha over n in [n_max/2, n_max]. The counts stay
// exact; only the final fit is floating point.
struct ExponentReport {
    double exact_alpha;
    double hook_alpha;
    double multinomial_alpha;
};

ExponentReport exponent_estimate(int n_max);

// Natural log of a positive big integer (fit plumbing).
double log_bigcount(const BigCount& v);

// Slope of log(f(n)/base^n) against log n over the given points.
double fit_exponent(const std::vector<std::pair<int, BigCount>>& series,
                    double log_base);

}  // namespace flagpath
