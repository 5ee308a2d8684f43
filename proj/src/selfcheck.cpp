#include "flagpath/selfcheck.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "flagpath/counting.hpp"
#include "flagpath/diagram3.hpp"
#include "flagpath/flag.hpp"
#include "flagpath/lattice.hpp"
#include "flagpath/matroid.hpp"

namespace flagpath {

namespace {

class Check {
public:
    explicit Check(std::string name) : name_(std::move(name)) {}

    void require(bool ok, const std::string& witness) {
        if (ok) return;
        if (ok_) witness_ = witness;
        ok_ = false;
    }

    bool report(std::ostream& out) const {
        if (ok_)
            out << "ok   " << name_ << "\n";
        else
            out << "FAIL " << name_ << " [" << witness_ << "]\n";
        return ok_;
    }

private:
    std::string name_;
    bool ok_ = true;
    std::string witness_;
};

std::vector<std::vector<int>> compositions(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(parts);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            parts.push_back(p);
            self(self, rest - p);
            parts.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

std::string describe(const BinSpec& spec) {
    std::string out = "l=(";
    for (size_t i = 0; i < spec.l.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spec.l[i]);
    }
    return out + "), n=" + std::to_string(spec.n);
}

std::vector<int> sorted_word(const BinSpec& spec) {
    std::vector<int> word;
    for (int j = 1; j <= spec.k(); ++j)
        word.insert(word.end(),
                    static_cast<size_t>(spec.n * spec.l[static_cast<size_t>(j - 1)]),
                    j);
    return word;
}

// The partitions whose path passes the checkpoint predicate, canonically
// sorted: the filter route of the three-way agreement.
std::vector<OrderedPartition> filter_family(const BinSpec& spec) {
    std::vector<int> word = sorted_word(spec);
    std::vector<OrderedPartition> out;
    do {
        const StepSequence path(spec.k(), word);
        if (is_configuration_path(path, spec))
            out.push_back(partition_from_path(path));
    } while (std::next_permutation(word.begin(), word.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> sample_configuration_words(const BinSpec& spec,
                                                         std::mt19937& rng,
                                                         int want) {
    std::vector<int> word = sorted_word(spec);
    std::set<std::vector<int>> picked;
    for (int attempt = 0; attempt < 6 * want; ++attempt) {
        std::shuffle(word.begin(), word.end(), rng);
        if (is_configuration_path(StepSequence(spec.k(), word), spec))
            picked.insert(word);
        if (static_cast<int>(picked.size()) >= want) break;
    }
    return {picked.begin(), picked.end()};
}

}  // namespace

int run_selfcheck(std::ostream& out) {
    Check pred_vs_bfs("lattice: checkpoint predicate matches the process oracle (L<=4, n<=3)");
    Check switch_ok("lattice: switch_steps preserves configuration paths (L<=5, n<=3, sampled)");
    Check complete_ok("lattice: complete_to_configuration output is a configuration path");
    Check roundtrip_ok("lattice: partition <-> path round-trip");
    Check bases_ok("matroid: nested bases match direct path enumeration (|P|<=12)");
    Check indep_ok("matroid: caps independence agrees with the basis-subset oracle (|P|<=12)");
    Check exchange_ok("matroid: nested basis families pass the exchange axiom (|P|<=8)");
    Check cyclic_ok("matroid: cyclic flats form a chain and match brute force (|P|<=10)");
    Check quotient_rank("matroid: quotient implies rank order, equal ranks iff equal ((a+b)n<=10)");
    Check quotient_fast("matroid: fast quotient route agrees with flat containment ((a+b)n<=10)");
    Check threeway("flag: predicate, process oracle and flag family agree (nL<=9)");
    Check realize_ok("flag: simulate(realize(target)) == target (nL<=9)");
    Check axioms_ok("flag: tbp families pass (F1)-(F3) with the stated constituents (nL<=9)");
    Check ranks_ok("flag: constituent ranks are n(l_1+...+l_i) and M_k is free (nL<=9)");
    Check k2_family("flag: k=2 family size equals the nested basis count (nL<=9)");
    Check dp_filter("count: DP equals the brute-force filter (nL<=10)");
    Check sandwich("count: bounds sandwich the exact count (nL<=10)");
    Check k2_count("count: k=2 DP equals tbp_count (a+b<=4, n<=4)");
    Check tbp_bases("count: tbp_count equals the explicit basis count ((a+b)n<=12)");
    Check hook_closed("count: hook lengths match the equal-bin closed form (l=1, k<=4, n<=4)");
    Check diag_equiv("diagram: block recursion equals the reachability DP (l_i<=3 and printed shapes, n<=3)");
    Check diag_mono("diagram: point-set monotonicity in x");
    Check diag_corner("diagram: corner entries and A-block recursion");
    Check diag_proof("diagram: explicit construction paths are configuration paths");

    // ---- per-spec sweep: all specs with nL <= 10 plus L <= 4, n <= 3 ----
    for (int L = 2; L <= 10; ++L) {
        for (const auto& comp : compositions(L)) {
            if (comp.size() < 2) continue;
            for (int n = 1; n * L <= 12; ++n) {
                if (n * L > 10 && !(L <= 4 && n <= 3)) continue;
                const BinSpec spec(comp, n);
                const int m = spec.ground_size();
                const std::string where = describe(spec);

                const BigCount dp = count_configurations(spec);
                if (n * L <= 10)
                    dp_filter.require(dp == count_by_filter(spec, 12), where);

                const bool want_family = m <= 9 || (L <= 4 && n <= 3);
                if (!want_family) continue;
                const auto filtered = filter_family(spec);
                {
                    const auto bfs = reachable_configurations(spec, 12);
                    const bool same = bfs.flags == filtered;
                    if (L <= 4 && n <= 3) pred_vs_bfs.require(same, where);
                    if (m <= 9) threeway.require(same, where);
                }

                if (m <= 9) {
                    const FlagMatroid tf = tbp_flag(spec, 12);
                    threeway.require(tf.family.flags == filtered &&
                                         tf.flag_count == dp,
                                     where);
                    for (const auto& target : tf.family.flags)
                        realize_ok.require(
                            simulate(spec, realize(spec, target)) == target, where);
                    const FlagVerdict verdict = is_flag_matroid(tf.family, 16);
                    axioms_ok.require(verdict.ok, where + ": " + verdict.detail);
                    if (verdict.ok)
                        for (int i = 0; i < spec.k(); ++i) {
                            auto got = verdict.constituents[static_cast<size_t>(i)]
                                           .basis_masks();
                            auto want = tf.constituents[static_cast<size_t>(i)]
                                            .basis_masks(16);
                            std::sort(got.begin(), got.end());
                            std::sort(want.begin(), want.end());
                            axioms_ok.require(got == want,
                                              where + ": constituent " +
                                                  std::to_string(i + 1));
                        }
                    for (int i = 1; i <= spec.k(); ++i)
                        ranks_ok.require(
                            tf.constituents[static_cast<size_t>(i - 1)].rank() ==
                                n * spec.prefix_l(i),
                            where);
                    ranks_ok.require(tf.constituents.back().rank() ==
                                         tf.constituents.back().ground_size(),
                                     where);
                    if (spec.k() == 2)
                        k2_family.require(
                            BigCount(tf.family.flags.size()) ==
                                tbp_count(spec.l[0], spec.l[1], n),
                            where);
                }

                if (m <= 10) {
                    const BoundsReport br = bounds(spec, true);
                    bool ok = br.exact == dp && br.lower_product <= *br.exact &&
                              *br.exact <= br.upper_multinomial;
                    if (br.lower_hook) ok = ok && *br.lower_hook <= *br.exact;
                    sandwich.require(ok, where);
                }
            }
        }
    }

    // ---- sampled lattice transformations ----
    std::mt19937 rng(20260823u);
    for (int L = 2; L <= 5; ++L)
        for (const auto& comp : compositions(L)) {
            if (comp.size() < 2) continue;
            for (int n = 1; n <= 3; ++n) {
                const BinSpec spec(comp, n);
                const std::string where = describe(spec);
                for (const auto& word : sample_configuration_words(spec, rng, 40)) {
                    const StepSequence path(spec.k(), word);
                    for (int i = 1; i <= path.length(); ++i)
                        for (int j = i + 1; j <= path.length(); ++j) {
                            if (path.axis(i) > path.axis(j)) continue;
                            switch_ok.require(
                                is_configuration_path(switch_steps(path, i, j), spec),
                                where + " switch (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
                        }
                    if (L <= 4 && n <= 2)
                        for (int cut = 0; cut <= path.length(); ++cut)
                            for (int extra = 0; extra <= 1; ++extra) {
                                const StepSequence prefix(
                                    spec.k(),
                                    std::vector<int>(word.begin(), word.begin() + cut));
                                const StepSequence full = complete_to_configuration(
                                    prefix, spec.l, extra);
                                if (full.length() == 0) continue;  // empty in, empty out
                                const BinSpec target(spec.l,
                                                     full.length() / spec.L());
                                complete_ok.require(
                                    is_configuration_path(full, target), where);
                            }
                }
            }
        }
    for (const BinSpec& spec : {BinSpec({1, 1, 1}, 2), BinSpec({2, 1}, 2)}) {
        std::vector<int> word = sorted_word(spec);
        do {
            const StepSequence path(spec.k(), word);
            const auto partition = partition_from_path(path);
            roundtrip_ok.require(path_from_partition(partition, spec) == path,
                                 describe(spec));
        } while (std::next_permutation(word.begin(), word.end()));
    }

    // ---- every bounding path up to the desk-scale ceilings ----
    for (int len = 1; len <= 12; ++len)
        for (std::uint64_t pmask = 0; pmask < (std::uint64_t{1} << len); ++pmask) {
            std::vector<int> caps{0};
            for (int t = 1; t <= len; ++t)
                caps.push_back(caps.back() +
                               static_cast<int>((pmask >> (t - 1)) & 1));
            const NestedMatroid nm(len, caps);
            const std::string where =
                "P=" + path_to_text(nm.bounding_path());

            // Direct enumeration of {Q_N : Q not above P}.
            std::vector<int> word;
            word.insert(word.end(), static_cast<size_t>(nm.rank()), 1);
            word.insert(word.end(), static_cast<size_t>(len - nm.rank()), 2);
            std::vector<std::uint64_t> direct;
            do {
                std::uint64_t qn = 0;
                int ncount = 0;
                bool below = true;
                for (int t = 1; t <= len && below; ++t) {
                    if (word[static_cast<size_t>(t - 1)] == 1) {
                        ++ncount;
                        qn |= std::uint64_t{1} << (t - 1);
                    }
                    if (ncount > caps[static_cast<size_t>(t)]) below = false;
                }
                if (below) direct.push_back(qn);
            } while (std::next_permutation(word.begin(), word.end()));
            std::sort(direct.begin(), direct.end());

            auto enumerated = nm.basis_masks(16);
            std::sort(enumerated.begin(), enumerated.end());
            bases_ok.require(enumerated == direct, where);

            // Independence criterion vs downward closure of the bases.
            std::vector<char> indep(std::uint64_t{1} << len, 0);
            for (std::uint64_t b : direct) indep[b] = 1;
            for (std::uint64_t s = (std::uint64_t{1} << len); s-- > 0;) {
                if (!indep[s]) continue;
                for (std::uint64_t rest = s; rest;) {
                    const std::uint64_t bit = rest & (~rest + 1);
                    indep[s & ~bit] = 1;
                    rest &= rest - 1;
                }
            }
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << len); ++s) {
                bool caps_ok = true;
                int cnt = 0;
                for (int t = 1; t <= len && caps_ok; ++t) {
                    cnt += static_cast<int>((s >> (t - 1)) & 1);
                    if (cnt > caps[static_cast<size_t>(t)]) caps_ok = false;
                }
                indep_ok.require(caps_ok == (indep[s] != 0),
                                 where + " A-mask=" + std::to_string(s));
                if (caps_ok != (indep[s] != 0)) break;
            }

            if (len <= 8) {
                std::vector<std::vector<int>> bsets;
                for (std::uint64_t b : direct) bsets.push_back(set_from_mask(b));
                exchange_ok.require(
                    static_cast<bool>(verify_matroid_axioms(bsets, len, 16)), where);
            }

            if (len <= 10) {
                const auto listed = nm.cyclic_flats();
                for (size_t i = 0; i + 1 < listed.size(); ++i)
                    cyclic_ok.require(
                        std::includes(listed[i + 1].begin(), listed[i + 1].end(),
                                      listed[i].begin(), listed[i].end()),
                        where + " (chain)");
                std::set<std::vector<int>> brute;
                const std::uint64_t full = (std::uint64_t{1} << len) - 1;
                for (std::uint64_t f : flat_masks(nm, 16)) {
                    if (f == 0 || f == full) continue;
                    bool cyclic = true;
                    const int rf = nm.rank_mask(f);
                    for (std::uint64_t rest = f; rest && cyclic;) {
                        const std::uint64_t bit = rest & (~rest + 1);
                        if (nm.rank_mask(f & ~bit) != rf) cyclic = false;
                        rest &= rest - 1;
                    }
                    if (cyclic) brute.insert(set_from_mask(f));
                }
                cyclic_ok.require(
                    std::set<std::vector<int>>(listed.begin(), listed.end()) ==
                        brute,
                    where);
            }
        }

    // ---- quotient behaviour on tbp pairs ----
    for (int s = 1; s <= 10; ++s)
        for (int n = 1; s * n <= 10; ++n)
            for (int a = 0; a <= s; ++a)
                for (int a2 = 0; a2 <= s; ++a2) {
                    const NestedMatroid M = tbp_matroid(a, s - a, n);
                    const NestedMatroid N = tbp_matroid(a2, s - a2, n);
                    const std::string where =
                        "a=" + std::to_string(a) + " a2=" + std::to_string(a2) +
                        " b=" + std::to_string(s - a) + " n=" + std::to_string(n);
                    const bool brute = is_quotient_brute_force(M, N, 16);
                    quotient_fast.require(is_quotient(M, N, 16) == brute, where);
                    if (brute) {
                        quotient_rank.require(M.rank() <= N.rank(), where);
                        if (M.rank() == N.rank()) {
                            auto bm = M.basis_masks(16);
                            auto bn = N.basis_masks(16);
                            std::sort(bm.begin(), bm.end());
                            std::sort(bn.begin(), bn.end());
                            quotient_rank.require(bm == bn, where);
                        }
                    }
                    if (a == a2) quotient_rank.require(brute, where + " (reflexive)");
                }

    // ---- enumeration extras ----
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 4; ++b)
            for (int n = 1; n <= 4; ++n)
                k2_count.require(count_configurations(BinSpec({a, b}, n)) ==
                                     tbp_count(a, b, n),
                                 "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                     " n=" + std::to_string(n));
    for (int s = 1; s <= 12; ++s)
        for (int n = 1; s * n <= 12; ++n)
            for (int a = 0; a <= s; ++a)
                tbp_bases.require(
                    BigCount(tbp_matroid(a, s - a, n).basis_masks(16).size()) ==
                        tbp_count(a, s - a, n),
                    "a=" + std::to_string(a) + " b=" + std::to_string(s - a) +
                        " n=" + std::to_string(n));
    for (int k = 2; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            BigRational closed = 1;
            for (int i = 2; i <= n * k; ++i) closed *= i;
            BigRational nfact = 1;
            for (int i = 2; i <= n; ++i) nfact *= i;
            for (int i = 0; i < k; ++i) closed /= nfact;
            for (int i = 1; i <= k - 1; ++i)
                for (int e = 0; e < k - i; ++e)
                    closed /= BigRational(n + i, i);
            hook_closed.require(
                BigRational(hook_length_syt(std::vector<int>(
                    static_cast<size_t>(k), n))) == closed,
                "k=" + std::to_string(k) + " n=" + std::to_string(n));
        }

    // ---- diagram invariants ----
    std::vector<std::array<int, 3>> shapes;
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2)
            for (int l3 = 1; l3 <= 3; ++l3) shapes.push_back({l1, l2, l3});
    shapes.push_back({2, 4, 3});
    shapes.push_back({3, 2, 2});
    for (const auto& l : shapes)
        for (int n = 1; n <= 3; ++n) {
            const BinSpec spec({l[0], l[1], l[2]}, n);
            const std::string where = describe(spec);
            const DiagramMatrix d = diagram_matrix(l, n);
            diag_equiv.require(d == brute_force_matrix(spec, 30), where);

            for (int y = 0; y < d.cols(); ++y)
                for (int x = 1; x < d.rows(); ++x) {
                    const int here = d.entries[static_cast<size_t>(x)]
                                              [static_cast<size_t>(y)];
                    if (here == kStar) continue;
                    const int left = d.entries[static_cast<size_t>(x - 1)]
                                              [static_cast<size_t>(y)];
                    diag_mono.require(left != kStar && left <= here,
                                      where + " x=" + std::to_string(x) +
                                          " y=" + std::to_string(y));
                }

            diag_corner.require(d.entries[0][0] == 0, where);
            if (n >= 2) {
                diag_corner.require(min_height(d, n * l[0], n * l[1]) ==
                                        (n - 1) * l[2],
                                    where);
                const DiagramMatrix prev = diagram_matrix(l, n - 1);
                bool same = true;
                for (int x = 0; x < prev.rows() && same; ++x)
                    for (int y = 0; y < prev.cols() && same; ++y)
                        same = d.entries[static_cast<size_t>(x)]
                                        [static_cast<size_t>(y)] ==
                               prev.entries[static_cast<size_t>(x)]
                                           [static_cast<size_t>(y)];
                diag_corner.require(same, where + " (A block)");

                const int l1 = l[0], l2 = l[1], l3 = l[2];
                auto check_sigma = [&](int e3a, int y, int x, int e3b) {
                    std::vector<int> word;
                    word.insert(word.end(), static_cast<size_t>(e3a), 3);
                    word.insert(word.end(), static_cast<size_t>(y), 2);
                    word.insert(word.end(), static_cast<size_t>(x), 1);
                    word.insert(word.end(), static_cast<size_t>(e3b), 3);
                    word.insert(word.end(), static_cast<size_t>(n * l2 - y), 2);
                    word.insert(word.end(), static_cast<size_t>(n * l1 - x), 1);
                    diag_proof.require(
                        is_configuration_path(StepSequence(3, word), spec),
                        where + " x=" + std::to_string(x) + " y=" + std::to_string(y));
                };
                for (int x = (n - 1) * l1 + 1; x <= n * l1; ++x)
                    for (int y = 0; y < (n - 1) * l2; ++y) {
                        const int z = (n - 1) * (l2 + l3) - y;
                        if (z > n * l3) continue;  // starred column
                        check_sigma(z, y, x, n * l3 - z);
                    }
                for (int x = 0; x < (n - 1) * l1; ++x)
                    for (int y = (n - 1) * l2 + 1; y <= n * l2; ++y) {
                        const int s = n + 1 - (x + y + l1 + l2 - 1) / (l1 + l2);
                        if (s < 1 || s > n) continue;
                        check_sigma((n - s) * l3, y, x, s * l3);
                    }
            }
        }

    int failures = 0;
    for (const Check* c :
         {&pred_vs_bfs, &switch_ok, &complete_ok, &roundtrip_ok, &bases_ok,
          &indep_ok, &exchange_ok, &cyclic_ok, &quotient_rank, &quotient_fast,
          &threeway, &realize_ok, &axioms_ok, &ranks_ok, &k2_family, &dp_filter,
          &sandwich, &k2_count, &tbp_bases, &hook_closed, &diag_equiv, &diag_mono,
          &diag_corner, &diag_proof})
        if (!c->report(out)) ++failures;
    out << (failures == 0 ? "selfcheck: all invariants hold\n"
                          : "selfcheck: " + std::to_string(failures) +
                                " invariant(s) failed\n");
    return failures;
}

}  // namespace flagpath
