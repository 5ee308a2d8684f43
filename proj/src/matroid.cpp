#include "flagpath/matroid.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace flagpath {

namespace {

void check_brute_force(int ground_size, int limit) {
    if (ground_size > limit)
        throw GroundTooLarge("ground size " + std::to_string(ground_size) +
                             " exceeds the brute-force limit " +
                             std::to_string(limit));
}

}  // namespace

std::uint64_t mask_from_set(const std::vector<int>& elements, int ground_size) {
    std::uint64_t mask = 0;
    for (int e : elements) {
        if (e < 1 || e > ground_size)
            throw OutOfRange("element " + std::to_string(e) + " outside [1, " +
                             std::to_string(ground_size) + "]");
        mask |= std::uint64_t{1} << (e - 1);
    }
    return mask;
}

std::vector<int> set_from_mask(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        const int e = std::countr_zero(mask) + 1;
        out.push_back(e);
        mask &= mask - 1;
    }
    return out;
}

int Matroid::rank_of(const std::vector<int>& subset) const {
    if (ground_size() > 64)
        throw GroundTooLarge("rank over element lists needs ground size <= 64");
    return rank_mask(mask_from_set(subset, ground_size()));
}

bool Matroid::is_independent(const std::vector<int>& subset) const {
    return rank_of(subset) == static_cast<int>(subset.size());
}

NestedMatroid::NestedMatroid(int ground_size, std::vector<int> caps)
    : ground_(ground_size), caps_(std::move(caps)) {
    if (ground_ < 1) throw EmptyPath("ground set must be non-empty");
    if (static_cast<int>(caps_.size()) == ground_)
        caps_.insert(caps_.begin(), 0);
    if (static_cast<int>(caps_.size()) != ground_ + 1 || caps_[0] != 0)
        throw OutOfRange("caps vector must have one entry per step");
    for (int t = 1; t <= ground_; ++t) {
        const int d = caps_[static_cast<size_t>(t)] - caps_[static_cast<size_t>(t) - 1];
        if (d != 0 && d != 1)
            throw OutOfRange("caps must increase by 0 or 1 per step");
    }
}

int NestedMatroid::rank_of(const std::vector<int>& subset) const {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    int cnt = 0;
    for (int e : sorted) {
        if (e < 1 || e > ground_)
            throw OutOfRange("element " + std::to_string(e) +
                             " outside the ground set");
        if (cnt < caps_[static_cast<size_t>(e)]) ++cnt;
    }
    return cnt;
}

int NestedMatroid::rank_mask(std::uint64_t subset) const {
    int cnt = 0;
    while (subset) {
        const int e = std::countr_zero(subset) + 1;
        subset &= subset - 1;
        if (e > ground_) throw OutOfRange("mask element outside the ground set");
        if (cnt < caps_[static_cast<size_t>(e)]) ++cnt;
    }
    return cnt;
}

StepSequence NestedMatroid::bounding_path() const {
    std::vector<int> steps;
    steps.reserve(static_cast<size_t>(ground_));
    for (int t = 1; t <= ground_; ++t) steps.push_back(step_is_n(t) ? 1 : 2);
    return StepSequence(2, std::move(steps));
}

std::vector<std::uint64_t> NestedMatroid::basis_masks(int limit) const {
    check_brute_force(ground_, limit);
    std::vector<std::uint64_t> out;
    const int r = rank();
    // Iterative DFS over (position, taken-so-far).
    struct Frame {
        int pos, cnt;
        std::uint64_t mask;
    };
    std::vector<Frame> frames{{0, 0, 0}};
    while (!frames.empty()) {
        auto [pos, cnt, mask] = frames.back();
        frames.pop_back();
        if (cnt == r) {
            out.push_back(mask);
            continue;
        }
        if (pos == ground_ || cnt + (ground_ - pos) < r) continue;
        const int e = pos + 1;
        // Skip element e first so masks come out in increasing order after sort.
        frames.push_back({e, cnt, mask});
        if (cnt < caps_[static_cast<size_t>(e)])
            frames.push_back({e, cnt + 1, mask | (std::uint64_t{1} << pos)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> NestedMatroid::cyclic_flats() const {
    std::vector<std::vector<int>> out;
    for (int t = 1; t < ground_; ++t) {
        if (!step_is_n(t) && step_is_n(t + 1)) {
            std::vector<int> segment(static_cast<size_t>(t));
            for (int e = 1; e <= t; ++e) segment[static_cast<size_t>(e - 1)] = e;
            out.push_back(std::move(segment));
        }
    }
    return out;
}

std::optional<NestedMatroid::TbpForm> NestedMatroid::tbp_form() const {
    for (int p = 1; p <= ground_; ++p) {
        if (ground_ % p != 0) continue;
        const int a = caps_[static_cast<size_t>(p)];
        const int n = ground_ / p;
        bool match = true;
        for (int t = 1; t <= ground_ && match; ++t) {
            const int q = (t - 1) / p, s = t - q * p;
            if (caps_[static_cast<size_t>(t)] != q * a + std::min(s, a)) match = false;
        }
        if (match) return TbpForm{a, p - a, n};
    }
    return std::nullopt;
}

ExplicitMatroid::ExplicitMatroid(int ground_size,
                                 const std::vector<std::vector<int>>& bases)
    : ground_(ground_size) {
    if (bases.empty()) throw EmptyFamily("a matroid needs at least one basis");
    if (ground_ > 64) throw GroundTooLarge("explicit matroids need ground size <= 64");
    for (const auto& b : bases) bases_.push_back(mask_from_set(b, ground_));
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = std::popcount(bases_.front());
    for (std::uint64_t b : bases_)
        if (std::popcount(b) != rank_)
            throw OutOfRange("bases must be equicardinal");
}

ExplicitMatroid::ExplicitMatroid(int ground_size, std::vector<std::uint64_t> masks)
    : ground_(ground_size), bases_(std::move(masks)) {
    if (bases_.empty()) throw EmptyFamily("a matroid needs at least one basis");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = std::popcount(bases_.front());
    for (std::uint64_t b : bases_)
        if (std::popcount(b) != rank_)
            throw OutOfRange("bases must be equicardinal");
}

int ExplicitMatroid::rank_mask(std::uint64_t subset) const {
    int best = 0;
    for (std::uint64_t b : bases_)
        best = std::max(best, std::popcount(subset & b));
    return best;
}

std::vector<std::vector<int>> ExplicitMatroid::bases() const {
    std::vector<std::vector<int>> out;
    out.reserve(bases_.size());
    for (std::uint64_t b : bases_) out.push_back(set_from_mask(b));
    return out;
}

NestedMatroid nested_from_path(const StepSequence& p) {
    if (p.k != 2)
        throw DimensionMismatch("a bounding path uses the axes N and E only");
    std::vector<int> caps{0};
    caps.reserve(p.steps.size() + 1);
    for (int a : p.steps) caps.push_back(caps.back() + (a == 1 ? 1 : 0));
    return NestedMatroid(p.length(), std::move(caps));
}

NestedMatroid tbp_matroid(int a, int b, int n) {
    if (a < 0 || b < 0) throw OutOfRange("a and b must be non-negative");
    if (a + b == 0) throw EmptyPath("a + b must be positive");
    if (n < 1) throw OutOfRange("n must be positive");
    std::vector<int> steps;
    steps.reserve(static_cast<size_t>(n * (a + b)));
    for (int t = 0; t < n; ++t) {
        steps.insert(steps.end(), static_cast<size_t>(a), 1);
        steps.insert(steps.end(), static_cast<size_t>(b), 2);
    }
    return nested_from_path(StepSequence(2, std::move(steps)));
}

int rank(const Matroid& m, const std::vector<int>& subset) {
    return m.rank_of(subset);
}

std::vector<std::uint64_t> flat_masks(const Matroid& m, int limit) {
    const int g = m.ground_size();
    check_brute_force(g, limit);
    std::vector<std::uint64_t> out;
    const std::uint64_t full = (g == 64) ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << g) - 1;
    for (std::uint64_t mask = 0;; ++mask) {
        const int r = m.rank_mask(mask);
        bool flat = true;
        for (int e = 0; e < g && flat; ++e) {
            if (mask & (std::uint64_t{1} << e)) continue;
            if (m.rank_mask(mask | (std::uint64_t{1} << e)) == r) flat = false;
        }
        if (flat) out.push_back(mask);
        if (mask == full) break;
    }
    return out;
}

std::vector<std::vector<int>> flats(const Matroid& m, int limit) {
    auto masks = flat_masks(m, limit);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint64_t a, std::uint64_t b) {
                         const int pa = std::popcount(a), pb = std::popcount(b);
                         return pa != pb ? pa < pb : a < b;
                     });
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (std::uint64_t f : masks) out.push_back(set_from_mask(f));
    return out;
}

bool is_quotient_brute_force(const Matroid& m, const Matroid& n, int limit) {
    if (m.ground_size() != n.ground_size())
        throw GroundMismatch("quotient requires a common ground set");
    auto fm = flat_masks(m, limit);
    auto fn = flat_masks(n, limit);
    std::unordered_set<std::uint64_t> nset(fn.begin(), fn.end());
    for (std::uint64_t f : fm)
        if (!nset.count(f)) return false;
    return true;
}

bool tbp_quotient_fast(int a, int b, int a2, int b2, int n) {
    if (a + b != a2 + b2)
        throw GroundMismatch("tbp quotient test needs equal bounding-path periods");
    if (n < 1) throw OutOfRange("n must be positive");
    // Flats of the (a,b)-matroid are I-augmented initial segments [t(a+b)];
    // the segment chain and the isthmus inequalities |I cap [t(a+b)]| < a
    // both transfer to the (a2,b2)-matroid exactly when a <= a2.
    return a <= a2;
}

bool is_quotient(const Matroid& m, const Matroid& n, int limit) {
    if (m.ground_size() != n.ground_size())
        throw GroundMismatch("quotient requires a common ground set");
    const auto* nm = dynamic_cast<const NestedMatroid*>(&m);
    const auto* nn = dynamic_cast<const NestedMatroid*>(&n);
    if (nm && nn) {
        const auto fm = nm->tbp_form();
        const auto fn = nn->tbp_form();
        if (fm && fn && fm->a + fm->b == fn->a + fn->b && fm->n == fn->n)
            return tbp_quotient_fast(fm->a, fm->b, fn->a, fn->b, fm->n);
    }
    return is_quotient_brute_force(m, n, limit);
}

ExplicitMatroid truncate(const Matroid& m, int target_rank, int limit) {
    if (target_rank < 1 || target_rank > m.rank())
        throw BadRank("target rank " + std::to_string(target_rank) +
                      " outside [1, " + std::to_string(m.rank()) + "]");
    const int g = m.ground_size();
    check_brute_force(g, limit);
    std::vector<std::uint64_t> bases;
    // Enumerate independent sets of the target size.
    struct Frame {
        int pos, cnt;
        std::uint64_t mask;
    };
    std::vector<Frame> frames{{0, 0, 0}};
    while (!frames.empty()) {
        auto [pos, cnt, mask] = frames.back();
        frames.pop_back();
        if (cnt == target_rank) {
            bases.push_back(mask);
            continue;
        }
        if (pos == g || cnt + (g - pos) < target_rank) continue;
        frames.push_back({pos + 1, cnt, mask});
        const std::uint64_t next = mask | (std::uint64_t{1} << pos);
        if (m.rank_mask(next) == cnt + 1) frames.push_back({pos + 1, cnt + 1, next});
    }
    return ExplicitMatroid(g, std::move(bases));
}

ExchangeVerdict verify_matroid_axioms(const std::vector<std::vector<int>>& bases,
                                      int ground_size, int limit) {
    if (bases.empty()) throw EmptyFamily("the basis family must be non-empty");
    check_brute_force(ground_size, limit);
    std::vector<std::uint64_t> masks;
    masks.reserve(bases.size());
    for (const auto& b : bases) masks.push_back(mask_from_set(b, ground_size));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    const int r = std::popcount(masks.front());
    for (std::uint64_t b : masks) {
        if (std::popcount(b) != r)
            return {false, set_from_mask(masks.front()), set_from_mask(b), 0};
    }
    std::unordered_set<std::uint64_t> family(masks.begin(), masks.end());
    for (std::uint64_t b1 : masks) {
        for (std::uint64_t b2 : masks) {
            std::uint64_t only1 = b1 & ~b2;
            while (only1) {
                const int x = std::countr_zero(only1);
                only1 &= only1 - 1;
                bool exchanged = false;
                std::uint64_t only2 = b2 & ~b1;
                while (only2 && !exchanged) {
                    const int y = std::countr_zero(only2);
                    only2 &= only2 - 1;
                    const std::uint64_t cand =
                        (b1 & ~(std::uint64_t{1} << x)) | (std::uint64_t{1} << y);
                    if (family.count(cand)) exchanged = true;
                }
                if (!exchanged)
                    return {false, set_from_mask(b1), set_from_mask(b2), x + 1};
            }
        }
    }
    return {};
}

}  // namespace flagpath
