#include "wsidiag/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wsidiag/distributions.hpp"
#include "wsidiag/error.hpp"
#include "wsidiag/rng.hpp"

namespace wsidiag {

namespace {

void require_test_sizes(const Sample& x1, const Sample& x2) {
    if (x1.size() < 2 || x2.size() < 2) {
        throw ParamError("two-sample test: both samples need at least 2 values");
    }
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ParamError("two-sample test: alpha must lie in (0, 1)");
}

double mean(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Unbiased sample variance (N-1 denominator), two-pass.
double sample_variance(std::span<const double> v, double m) {
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size() - 1);
}

/// Midranks of the pooled concatenation of x1 and x2; tied runs share the
/// average of their positions.
std::vector<double> pooled_midranks(std::span<const double> x1, std::span<const double> x2,
                                    bool* had_ties = nullptr) {
    const std::size_t n = x1.size() + x2.size();
    std::vector<double> pooled;
    pooled.reserve(n);
    pooled.insert(pooled.end(), x1.begin(), x1.end());
    pooled.insert(pooled.end(), x2.begin(), x2.end());

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });

    std::vector<double> ranks(n, 0.0);
    if (had_ties) *had_ties = false;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        const double midrank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        if (j > i && had_ties) *had_ties = true;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = midrank;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!std::isfinite(v)) throw ParamError("Sample: values must be finite");
    }
}

std::string_view to_code(TestKind kind) {
    switch (kind) {
        case TestKind::kWelch: return "welch";
        case TestKind::kWmw: return "wmw";
        case TestKind::kPermutation: return "perm";
    }
    throw ParamError("invalid TestKind value");
}

std::optional<TestKind> test_kind_from_code(std::string_view code) {
    if (code == "welch") return TestKind::kWelch;
    if (code == "wmw") return TestKind::kWmw;
    if (code == "perm") return TestKind::kPermutation;
    return std::nullopt;
}

TestOutcome welch_test(const Sample& x1, const Sample& x2, double alpha) {
    require_test_sizes(x1, x2);
    require_alpha(alpha);

    const double n1 = static_cast<double>(x1.size());
    const double n2 = static_cast<double>(x2.size());
    const double m1 = mean(x1.values());
    const double m2 = mean(x2.values());
    const double v1 = sample_variance(x1.values(), m1);
    const double v2 = sample_variance(x2.values(), m2);

    TestOutcome out;
    out.kind = TestKind::kWelch;
    out.alpha = alpha;

    if (v1 == 0.0 && v2 == 0.0) {
        // Constant samples: the statistic is 0/0. Fall back to comparing
        // the means directly and flag the outcome.
        out.degenerate = true;
        if (m1 == m2) {
            out.statistic = 0.0;
            out.p_value = 1.0;
            out.reject = false;
        } else {
            out.statistic = std::numeric_limits<double>::infinity() * (m1 > m2 ? 1.0 : -1.0);
            out.reject = true;
        }
        return out;
    }

    const double g1 = v1 / n1;
    const double g2 = v2 / n2;
    out.statistic = (m1 - m2) / std::sqrt(g1 + g2);
    out.df = (g1 + g2) * (g1 + g2) /
             (g1 * g1 / (n1 - 1.0) + g2 * g2 / (n2 - 1.0));
    out.p_value = 2.0 * (1.0 - t_cdf(std::fabs(out.statistic), *out.df));
    out.reject = std::fabs(out.statistic) > t_quantile(1.0 - alpha / 2.0, *out.df);
    return out;
}

WmwU wmw_u_statistics(const Sample& x1, const Sample& x2) {
    require_test_sizes(x1, x2);
    const double n1 = static_cast<double>(x1.size());
    const double n2 = static_cast<double>(x2.size());
    const std::vector<double> ranks = pooled_midranks(x1.values(), x2.values());
    double rank_sum1 = 0.0;
    for (std::size_t i = 0; i < x1.size(); ++i) rank_sum1 += ranks[i];
    WmwU u;
    u.u1 = n1 * n2 + n1 * (n1 + 1.0) / 2.0 - rank_sum1;
    u.u2 = n1 * n2 - u.u1;
    return u;
}

TestOutcome wmw_test(const Sample& x1, const Sample& x2, double alpha) {
    require_alpha(alpha);
    const WmwU u = wmw_u_statistics(x1, x2);
    const double n1 = static_cast<double>(x1.size());
    const double n2 = static_cast<double>(x2.size());

    TestOutcome out;
    out.kind = TestKind::kWmw;
    out.alpha = alpha;
    out.u = std::min(u.u1, u.u2);
    const double expected = n1 * n2 / 2.0;
    const double variance = n1 * n2 * (n1 + n2 + 1.0) / 12.0;
    out.statistic = (*out.u - expected) / std::sqrt(variance);
    out.p_value = 2.0 * (1.0 - normal_cdf(std::fabs(out.statistic)));
    out.reject = std::fabs(out.statistic) > normal_quantile(1.0 - alpha / 2.0);
    return out;
}

double wmw_exact_p(const Sample& x1, const Sample& x2) {
    bool had_ties = false;
    pooled_midranks(x1.values(), x2.values(), &had_ties);
    if (had_ties) throw ParamError("wmw_exact_p: pooled values contain ties");

    const std::size_t n1 = x1.size();
    const std::size_t n2 = x2.size();
    const std::size_t u_max = n1 * n2;
    const WmwU u = wmw_u_statistics(x1, x2);
    const double u_obs = std::min(u.u1, u.u2);

    // count[j][u]: subsets of size j of the ranks seen so far whose
    // Mann-Whitney count statistic equals u.
    std::vector<std::vector<double>> count(n1 + 1, std::vector<double>(u_max + 1, 0.0));
    count[0][0] = 1.0;
    const std::size_t n = n1 + n2;
    for (std::size_t rank = 1; rank <= n; ++rank) {
        for (std::size_t j = std::min(rank, n1); j >= 1; --j) {
            // Adding rank `rank` as the j-th smallest sample-1 rank
            // contributes rank - j pairs won against sample 2.
            const std::size_t add = rank - j;
            if (add > u_max) continue;
            for (std::size_t v = u_max - add + 1; v-- > 0;) {
                if (count[j - 1][v] != 0.0) count[j][v + add] += count[j - 1][v];
            }
        }
    }

    double total = 0.0;
    double extreme = 0.0;
    for (std::size_t v = 0; v <= u_max; ++v) {
        const double ways = count[n1][v];
        total += ways;
        const double u_min = std::min(static_cast<double>(v), static_cast<double>(u_max - v));
        if (u_min <= u_obs) extreme += ways;
    }
    return extreme / total;
}

TestOutcome permutation_test(const Sample& x1, const Sample& x2, double alpha,
                             int num_permutations, std::uint64_t seed) {
    require_test_sizes(x1, x2);
    require_alpha(alpha);
    if (num_permutations < 99) {
        throw ParamError("permutation_test: need at least 99 permutations");
    }

    const std::size_t n1 = x1.size();
    const double s0 = std::fabs(mean(x1.values()) - mean(x2.values()));

    std::vector<double> pooled;
    pooled.reserve(n1 + x2.size());
    pooled.insert(pooled.end(), x1.values().begin(), x1.values().end());
    pooled.insert(pooled.end(), x2.values().begin(), x2.values().end());
    const double total = std::accumulate(pooled.begin(), pooled.end(), 0.0);
    const double inv_n1 = 1.0 / static_cast<double>(n1);
    const double inv_n2 = 1.0 / static_cast<double>(pooled.size() - n1);

    Rng rng(seed);
    int at_least_as_extreme = 0;
    for (int i = 0; i < num_permutations; ++i) {
        rng.shuffle(std::span<double>(pooled));
        double sum1 = 0.0;
        for (std::size_t j = 0; j < n1; ++j) sum1 += pooled[j];
        const double s_i = std::fabs(sum1 * inv_n1 - (total - sum1) * inv_n2);
        if (s_i >= s0) ++at_least_as_extreme;
    }

    TestOutcome out;
    out.kind = TestKind::kPermutation;
    out.alpha = alpha;
    out.statistic = s0;
    out.p_value = (1.0 + static_cast<double>(at_least_as_extreme)) /
                  (static_cast<double>(num_permutations) + 1.0);
    out.reject = *out.p_value <= alpha;
    return out;
}

double empirical_quantile(std::span<const double> values, double q) {
    if (values.empty()) throw ParamError("empirical_quantile: empty value list");
    if (!(q >= 0.0 && q <= 1.0)) throw ParamError("empirical_quantile: q must lie in [0, 1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

Population truncate_above_quantile(const Population& pop, double q) {
    if (pop.values.empty()) throw ParamError("truncate_above_quantile: empty population");
    if (!(q >= 0.0 && q < 1.0)) throw ParamError("truncate_above_quantile: q must lie in [0, 1)");
    if (q == 0.0) return pop;

    const double cutoff = empirical_quantile(pop.values, q);
    Population out;
    out.label = pop.label;
    out.cutoff = cutoff;
    out.values.reserve(pop.values.size());
    for (double v : pop.values) {
        if (v > cutoff) out.values.push_back(v);
    }
    if (out.values.empty()) {
        throw ParamError("truncate_above_quantile: no values above the cutoff");
    }
    return out;
}

void StatParams::validate() const {
    if (!(cutoff_quantile > 0.0 && cutoff_quantile < 1.0)) {
        throw ParamError("StatParams: cutoff quantile q must lie in (0, 1)");
    }
    if (sample_size < 2) throw ParamError("StatParams: sample size s must be at least 2");
    if (num_draws < 1) throw ParamError("StatParams: draw count n must be at least 1");
    if (!(pass_overhead >= 0.0 && pass_overhead < 1.0)) {
        throw ParamError("StatParams: pass overhead r must lie in [0, 1)");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) throw ParamError("StatParams: alpha must lie in (0, 1)");
    if (num_permutations < 99) throw ParamError("StatParams: permutation count M must be >= 99");
}

bool pass_overhead_met(int passes, int num_draws, double pass_overhead) {
    const int failures = num_draws - passes;
    return static_cast<double>(passes - failures) >=
           pass_overhead * static_cast<double>(num_draws);
}

namespace {

TestOutcome run_test(TestKind kind, const Sample& x1, const Sample& x2, const StatParams& params,
                     std::uint64_t perm_seed) {
    switch (kind) {
        case TestKind::kWelch: return welch_test(x1, x2, params.alpha);
        case TestKind::kWmw: return wmw_test(x1, x2, params.alpha);
        case TestKind::kPermutation:
            return permutation_test(x1, x2, params.alpha, params.num_permutations, perm_seed);
    }
    throw ParamError("invalid TestKind value");
}

}  // namespace

Diagnosis stat_classify(const Sample& x, const Population& pop_c, const Population& pop_nc,
                        const StatParams& params, TestKind kind) {
    params.validate();
    if (!pop_c.cutoff || !pop_nc.cutoff) {
        throw ParamError("stat_classify: populations must be quantile-truncated first");
    }
    const std::size_t s = static_cast<std::size_t>(params.sample_size);
    if (pop_c.values.size() < s || pop_nc.values.size() < s) {
        throw ParamError("stat_classify: population smaller than sample size");
    }

    // The test sample is truncated at its own q-quantile so that it is
    // compared against the populations on the same footing.
    Population x_pop;
    x_pop.values = x.values();
    const std::vector<double> x_trunc =
        truncate_above_quantile(x_pop, params.cutoff_quantile).values;
    if (x_trunc.size() < s) {
        throw ParamError("stat_classify: truncated sample smaller than sample size s");
    }

    int pass_c = 0;
    int pass_nc = 0;
    for (int i = 0; i < params.num_draws; ++i) {
        Rng rng = Rng::for_stream(params.seed, static_cast<std::uint64_t>(i));
        const Sample xs_c(rng.sample_without_replacement(pop_c.values, s));
        const Sample xs_nc(rng.sample_without_replacement(pop_nc.values, s));
        const Sample xs(rng.sample_without_replacement(x_trunc, s));
        if (!run_test(kind, xs_c, xs, params, rng.next_u64()).reject) ++pass_c;
        if (!run_test(kind, xs_nc, xs, params, rng.next_u64()).reject) ++pass_nc;
    }

    const bool d_c = pass_overhead_met(pass_c, params.num_draws, params.pass_overhead);
    const bool d_nc = pass_overhead_met(pass_nc, params.num_draws, params.pass_overhead);
    if (d_c == d_nc) return Diagnosis::IHC;
    return d_c ? Diagnosis::C : Diagnosis::NC;
}

VerificationSummary post_hoc_verify(std::span<const std::pair<Sample, Diagnosis>> test_scans,
                                    const Population& pop_c, const Population& pop_nc,
                                    const StatParams& params, TestKind kind, int repetitions) {
    params.validate();
    if (repetitions < 1) throw ParamError("post_hoc_verify: repetitions must be at least 1");
    if (test_scans.empty()) throw ParamError("post_hoc_verify: no test scans");

    VerificationSummary summary;
    summary.repetitions = repetitions;
    for (const auto& [sample, truth] : test_scans) {
        (void)sample;
        if (truth == Diagnosis::C) {
            ++summary.c.scan_count;
        } else if (truth == Diagnosis::NC) {
            ++summary.nc.scan_count;
        } else {
            throw ParamError("post_hoc_verify: scan truth must be C or NC");
        }
    }

    long long c1 = 0, c2 = 0, nc1 = 0, nc2 = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
        const std::uint64_t rep_seed = derive_seed(params.seed, static_cast<std::uint64_t>(rep));
        for (std::size_t k = 0; k < test_scans.size(); ++k) {
            StatParams scan_params = params;
            scan_params.seed = derive_seed(rep_seed, k);
            const Diagnosis got =
                stat_classify(test_scans[k].first, pop_c, pop_nc, scan_params, kind);
            const Diagnosis truth = test_scans[k].second;
            if (got == truth) continue;
            if (truth == Diagnosis::C) {
                got == Diagnosis::IHC ? ++c1 : ++c2;
            } else {
                got == Diagnosis::IHC ? ++nc1 : ++nc2;
            }
        }
    }

    const double reps = static_cast<double>(repetitions);
    summary.c.type1_mean = static_cast<double>(c1) / reps;
    summary.c.type2_mean = static_cast<double>(c2) / reps;
    summary.nc.type1_mean = static_cast<double>(nc1) / reps;
    summary.nc.type2_mean = static_cast<double>(nc2) / reps;
    return summary;
}

}  // namespace wsidiag
