#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "flagpath/errors.hpp"
#include "flagpath/lattice.hpp"

namespace flagpath {

// Default ceiling for brute-force enumerations over subsets of the ground
// set (2^16 subsets is the practical desk-scale limit).
inline constexpr int kDefaultBruteForceLimit = 16;

class Matroid {
public:
    virtual ~Matroid() = default;
    virtual int ground_size() const = 0;
    virtual int rank() const = 0;
    // Rank of a subset given as a bitmask over {1, ..., ground_size}
    // (bit e-1 set iff element e is in the subset).
    virtual int rank_mask(std::uint64_t subset) const = 0;

    // Rank of a subset given as element labels; validates range.
    virtual int rank_of(const std::vector<int>& subset) const;
    bool is_independent(const std::vector<int>& subset) const;
};

// Nested matroid M[P] stored as its prefix-cap vector: caps[t] is the number
// of N steps among the first t steps of the bounding path P. A set A is
// independent iff |A cap [t]| <= caps[t] for all t.
class NestedMatroid : public Matroid {
public:
    NestedMatroid(int ground_size, std::vector<int> caps);

    int ground_size() const override { return ground_; }
    int rank() const override { return caps_.back(); }
    int rank_mask(std::uint64_t subset) const override;
    // Greedy prefix-cap rank; works for arbitrarily large ground sets.
    int rank_of(const std::vector<int>& subset) const override;

    const std::vector<int>& caps() const { return caps_; }
    // True iff step t (1-based) of the bounding path is N.
    bool step_is_n(int t) const {
        return caps_[static_cast<size_t>(t)] > caps_[static_cast<size_t>(t) - 1];
    }

    // The bounding path as a k=2 step sequence (axis 1 = N, axis 2 = E).
    StepSequence bounding_path() const;

    // Enumerates all bases in lexicographic mask order (gated).
    std::vector<std::uint64_t> basis_masks(int limit = kDefaultBruteForceLimit) const;

    // Proper non-trivial cyclic flats: the initial segments [t] where step t
    // of P is E and step t+1 is N; a chain under inclusion.
    std::vector<std::vector<int>> cyclic_flats() const;

    // Recovers (a, b, n) if the bounding path equals (N^a E^b)^n with n
    // maximal; nullopt when the path is not of that periodic form.
    struct TbpForm {
        int a, b, n;
    };
    std::optional<TbpForm> tbp_form() const;

    bool operator==(const NestedMatroid& other) const {
        return ground_ == other.ground_ && caps_ == other.caps_;
    }

private:
    int ground_;
    std::vector<int> caps_;  // caps_[0] = 0, indices 0..ground_
};

// Brute-force companion: a matroid given by an explicit basis list.
class ExplicitMatroid : public Matroid {
public:
    ExplicitMatroid(int ground_size, const std::vector<std::vector<int>>& bases);
    ExplicitMatroid(int ground_size, std::vector<std::uint64_t> basis_masks);

    int ground_size() const override { return ground_; }
    int rank() const override { return rank_; }
    int rank_mask(std::uint64_t subset) const override;

    const std::vector<std::uint64_t>& basis_masks() const { return bases_; }
    std::vector<std::vector<int>> bases() const;

private:
    int ground_;
    int rank_;
    std::vector<std::uint64_t> bases_;  // sorted, deduplicated
};

// M[P] for a two-dimensional bounding path (axis 1 = N, axis 2 = E).
NestedMatroid nested_from_path(const StepSequence& p);

// The n-th (a,b)-tbp matroid M[(N^a E^b)^n].
NestedMatroid tbp_matroid(int a, int b, int n);

// Rank oracle with range validation.
int rank(const Matroid& m, const std::vector<int>& subset);

// All closed sets, canonically sorted by (size, lexicographic order).
std::vector<std::vector<int>> flats(const Matroid& m,
                                    int limit = kDefaultBruteForceLimit);
std::vector<std::uint64_t> flat_masks(const Matroid& m,
                                      int limit = kDefaultBruteForceLimit);

// True iff every flat of m is a flat of n. Uses a closed-form route when
// both operands are tbp-form nested matroids with equal-length bounding
// paths, brute-force flat containment otherwise.
bool is_quotient(const Matroid& m, const Matroid& n,
                 int limit = kDefaultBruteForceLimit);

// Brute-force definition, always available at desk scale.
bool is_quotient_brute_force(const Matroid& m, const Matroid& n,
                             int limit = kDefaultBruteForceLimit);

// Closed-form quotient test for the n-th (a,b)- versus (a2,b2)-tbp matroids
// with a+b == a2+b2 (the chain/isthmus argument of the flag construction).
bool tbp_quotient_fast(int a, int b, int a2, int b2, int n);

// Bases are all independent sets of m of size target_rank.
ExplicitMatroid truncate(const Matroid& m, int target_rank,
                         int limit = kDefaultBruteForceLimit);

// Basis-exchange verdict: ok, or a violating triple (B1, B2, x) such that
// no y in B2\B1 keeps B1 - x + y in the family. Witnesses are minimal in
// scan order so failures are reproducible.
struct ExchangeVerdict {
    bool ok = true;
    std::vector<int> b1, b2;
    int x = 0;

    explicit operator bool() const { return ok; }
};

ExchangeVerdict verify_matroid_axioms(const std::vector<std::vector<int>>& bases,
                                      int ground_size,
                                      int limit = kDefaultBruteForceLimit);

// Bitmask/label conversions shared by the brute-force routines.
std::uint64_t mask_from_set(const std::vector<int>& elements, int ground_size);
std::vector<int> set_from_mask(std::uint64_t mask);

}  // namespace flagpath
