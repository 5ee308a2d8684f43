#include "flagpath/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace flagpath {

namespace {

// Shared DP: exact configuration counts for every turn total up to n_max.
// State = tallies of axes 1..k-1 (the k-th tally is implicit); the prefix
// bounds are applied at multiples of L only.
std::vector<BigCount> count_series(const std::vector<int>& l, int n_max) {
    const int k = static_cast<int>(l.size());
    const int L = std::accumulate(l.begin(), l.end(), 0);
    std::vector<int> bound(static_cast<size_t>(k - 1));
    std::vector<long long> stride(static_cast<size_t>(k - 1));
    long long states = 1;
    for (int j = 0; j < k - 1; ++j) {
        bound[static_cast<size_t>(j)] = n_max * l[static_cast<size_t>(j)];
        stride[static_cast<size_t>(j)] = states;
        states *= bound[static_cast<size_t>(j)] + 1;
    }
    std::vector<int> prefix_l(static_cast<size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i)
        prefix_l[static_cast<size_t>(i)] =
            prefix_l[static_cast<size_t>(i - 1)] + l[static_cast<size_t>(i - 1)];

    std::vector<BigCount> dp(static_cast<size_t>(states));
    dp[0] = 1;
    std::vector<BigCount> results(static_cast<size_t>(n_max) + 1);
    results[0] = 1;
    std::vector<int> c(static_cast<size_t>(k - 1));
    for (int p = 1; p <= n_max * L; ++p) {
        std::vector<BigCount> next(static_cast<size_t>(states));
        for (long long s = 0; s < states; ++s) {
            if (dp[static_cast<size_t>(s)] == 0) continue;
            long long rem = s;
            int sum = 0;
            for (int j = 0; j < k - 1; ++j) {
                c[static_cast<size_t>(j)] =
                    static_cast<int>(rem % (bound[static_cast<size_t>(j)] + 1));
                rem /= bound[static_cast<size_t>(j)] + 1;
                sum += c[static_cast<size_t>(j)];
            }
            const int ck = (p - 1) - sum;
            for (int j = 0; j < k - 1; ++j)
                if (c[static_cast<size_t>(j)] < bound[static_cast<size_t>(j)])
                    next[static_cast<size_t>(s + stride[static_cast<size_t>(j)])] +=
                        dp[static_cast<size_t>(s)];
            if (ck < n_max * l[static_cast<size_t>(k - 1)])
                next[static_cast<size_t>(s)] += dp[static_cast<size_t>(s)];
        }
        if (p % L == 0) {
            const int t = p / L;
            for (long long s = 0; s < states; ++s) {
                if (next[static_cast<size_t>(s)] == 0) continue;
                long long rem = s;
                int acc = 0;
                bool keep = true;
                for (int j = 0; j < k - 1 && keep; ++j) {
                    acc += static_cast<int>(rem % (bound[static_cast<size_t>(j)] + 1));
                    rem /= bound[static_cast<size_t>(j)] + 1;
                    if (acc > t * prefix_l[static_cast<size_t>(j) + 1]) keep = false;
                }
                if (!keep) next[static_cast<size_t>(s)] = 0;
            }
            // Read off the finished count for t turns: c_j = t*l_j.
            long long s_t = 0;
            for (int j = 0; j < k - 1; ++j)
                s_t += stride[static_cast<size_t>(j)] *
                       static_cast<long long>(t * l[static_cast<size_t>(j)]);
            results[static_cast<size_t>(t)] = next[static_cast<size_t>(s_t)];
        }
        dp = std::move(next);
    }
    return results;
}

}  // namespace

BigCount count_configurations(const BinSpec& spec) {
    return count_series(spec.l, spec.n).back();
}

BigCount count_by_filter(const BinSpec& spec, int limit) {
    const int m = spec.ground_size();
    if (m > limit)
        throw GroundTooLarge("nL = " + std::to_string(m) +
                             " exceeds the filter limit " + std::to_string(limit));
    std::vector<int> word;
    for (int j = 1; j <= spec.k(); ++j)
        word.insert(word.end(),
                    static_cast<size_t>(spec.n * spec.l[static_cast<size_t>(j - 1)]),
                    j);
    const int k = spec.k();
    const int L = spec.L();
    std::vector<int> prefix_l(static_cast<size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i) prefix_l[static_cast<size_t>(i)] = spec.prefix_l(i);
    std::vector<int> tally(static_cast<size_t>(k));
    BigCount count = 0;
    do {
        // Inline checkpoint test: same predicate as is_configuration_path,
        // without per-word allocations (this loop runs multinomially often).
        std::fill(tally.begin(), tally.end(), 0);
        bool good = true;
        for (int p = 1; p <= m && good; ++p) {
            ++tally[static_cast<size_t>(word[static_cast<size_t>(p - 1)] - 1)];
            if (p % L != 0) continue;
            const int t = p / L;
            int acc = 0;
            for (int i = 1; i < k && good; ++i) {
                acc += tally[static_cast<size_t>(i - 1)];
                if (acc > t * prefix_l[static_cast<size_t>(i)]) good = false;
            }
        }
        if (good) ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return count;
}

BigCount count_paths_below(const StepSequence& p) {
    if (p.k != 2) throw DimensionMismatch("bounding paths use N/E steps only");
    const int g = p.length();
    std::vector<int> caps{0};
    for (int a : p.steps) caps.push_back(caps.back() + (a == 1 ? 1 : 0));
    const int r = caps.back();
    const int e_total = g - r;
    std::vector<BigCount> dp(static_cast<size_t>(r) + 1);
    dp[0] = 1;
    for (int t = 1; t <= g; ++t) {
        std::vector<BigCount> next(static_cast<size_t>(r) + 1);
        for (int cn = 0; cn <= std::min(r, t); ++cn) {
            if (cn > caps[static_cast<size_t>(t)]) continue;
            BigCount v = 0;
            if (cn >= 1 && dp[static_cast<size_t>(cn - 1)] != 0)
                v += dp[static_cast<size_t>(cn - 1)];          // step N
            if (t - 1 - cn >= 0 && t - cn <= e_total)
                v += dp[static_cast<size_t>(cn)];              // step E
            next[static_cast<size_t>(cn)] = std::move(v);
        }
        dp = std::move(next);
    }
    return dp[static_cast<size_t>(r)];
}

BigCount tbp_count(int a, int b, int n) {
    if (a < 0 || b < 0) throw OutOfRange("a and b must be non-negative");
    if (a + b == 0) throw EmptyPath("a + b must be positive");
    if (n < 1) throw OutOfRange("n must be positive");
    std::vector<int> steps;
    for (int t = 0; t < n; ++t) {
        steps.insert(steps.end(), static_cast<size_t>(a), 1);
        steps.insert(steps.end(), static_cast<size_t>(b), 2);
    }
    return count_paths_below(StepSequence(2, std::move(steps)));
}

namespace {

BigCount factorial(int n) {
    BigCount out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

}  // namespace

BigCount multinomial_partitions(const BinSpec& spec) {
    BigCount out = factorial(spec.ground_size());
    for (int li : spec.l) out /= factorial(spec.n * li);
    return out;
}

BigCount hook_length_syt(const std::vector<int>& shape) {
    if (shape.empty()) throw OutOfRange("shape must be non-empty");
    for (size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 1) throw OutOfRange("row lengths must be positive");
        if (i + 1 < shape.size() && shape[i] < shape[i + 1])
            throw OutOfRange("shape rows must be weakly decreasing");
    }
    const int rows = static_cast<int>(shape.size());
    int cells = 0;
    for (int len : shape) cells += len;
    // Conjugate shape for the leg lengths.
    std::vector<int> conj(static_cast<size_t>(shape[0]), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape[static_cast<size_t>(i)]; ++j)
            ++conj[static_cast<size_t>(j)];
    BigCount hooks = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape[static_cast<size_t>(i)]; ++j) {
            const int arm = shape[static_cast<size_t>(i)] - j - 1;
            const int leg = conj[static_cast<size_t>(j)] - i - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(cells) / hooks;
}

BoundsReport bounds(const BinSpec& spec, bool with_exact) {
    BoundsReport report;
    report.upper_multinomial = multinomial_partitions(spec);
    const int k = spec.k();
    if (std::is_sorted(spec.l.begin(), spec.l.end())) {
        std::vector<int> shape(spec.l.rbegin(), spec.l.rend());
        for (int& len : shape) len *= spec.n;
        report.lower_hook = hook_length_syt(shape);
    }
    BigCount product = 1;
    for (int i = 1; i <= k - 1; ++i) {
        int rest = 0;
        for (int j = i + 1; j <= k; ++j) rest += spec.l[static_cast<size_t>(j - 1)];
        product *= tbp_count(spec.l[static_cast<size_t>(i - 1)], rest, spec.n);
    }
    report.lower_product = product;
    if (with_exact) report.exact = count_configurations(spec);
    return report;
}

double log_bigcount(const BigCount& v) {
    if (v <= 0) throw OutOfRange("log of a non-positive count");
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 900) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 900;
    return std::log(BigCount(v >> shift).convert_to<double>()) +
           static_cast<double>(shift) * std::log(2.0);
}

double fit_exponent(const std::vector<std::pair<int, BigCount>>& series,
                    double log_base) {
    if (series.size() < 2) throw OutOfRange("fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(series.size());
    for (const auto& [n, value] : series) {
        const double x = std::log(static_cast<double>(n));
        const double y = log_bigcount(value) - static_cast<double>(n) * log_base;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ExponentReport exponent_estimate(int n_max) {
    if (n_max < 8) throw OutOfRange("exponent fits need n_max >= 8");
    const std::vector<int> l{1, 1, 1};
    const auto exact_series = count_series(l, n_max);
    std::vector<std::pair<int, BigCount>> exact_pts, hook_pts, multi_pts;
    for (int n = n_max / 2; n <= n_max; ++n) {
        exact_pts.emplace_back(n, exact_series[static_cast<size_t>(n)]);
        hook_pts.emplace_back(n, hook_length_syt({n, n, n}));
        multi_pts.emplace_back(n, multinomial_partitions(BinSpec(l, n)));
    }
    const double log27 = std::log(27.0);
    return {fit_exponent(exact_pts, log27), fit_exponent(hook_pts, log27),
            fit_exponent(multi_pts, log27)};
}

}  // namespace flagpath
