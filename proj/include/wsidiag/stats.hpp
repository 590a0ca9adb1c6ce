#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wsidiag/tissue.hpp"

namespace wsidiag {

/// A set of patch probabilities (or any finite observations) from one scan.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
};

/// Pooled patch probabilities of all scans of one diagnosis class. `cutoff`
/// is set once the population has been truncated above a quantile; every
/// retained value then lies strictly above it.
struct Population {
    Diagnosis label = Diagnosis::NC;  // C or NC
    std::vector<double> values;
    std::optional<double> cutoff;
};

enum class TestKind { kWelch, kWmw, kPermutation };

std::string_view to_code(TestKind kind);
std::optional<TestKind> test_kind_from_code(std::string_view code);

/// Result of one two-sample test. `reject` means the null hypothesis (equal
/// populations / equal means) was rejected at level alpha. `degenerate`
/// flags the zero-variance Welch corner cases, where the statistic is not
/// computable and the decision falls back to comparing the means.
struct TestOutcome {
    TestKind kind;
    double statistic = 0.0;           // T_BF, Z, or the observed |mean difference|
    std::optional<double> df;         // Welch only
    std::optional<double> u;          // WMW only: min(U1, U2)
    std::optional<double> p_value;
    double alpha = 0.0;
    bool reject = false;
    bool degenerate = false;
};

/// Welch two-sample t-test (two-tailed). The statistic divides the mean
/// difference by sqrt(s1^2/N1 + s2^2/N2) with unbiased (N-1) variances; the
/// degrees of freedom follow the Welch-Satterthwaite equation. Rejects when
/// |T| exceeds the t-quantile at 1 - alpha/2.
TestOutcome welch_test(const Sample& x1, const Sample& x2, double alpha);

/// Both U statistics of the Wilcoxon-Mann-Whitney test, computed from
/// pooled midranks: U1 = N1*N2 + N1(N1+1)/2 - sum of sample-1 ranks,
/// U2 = N1*N2 - U1.
struct WmwU {
    double u1 = 0.0;
    double u2 = 0.0;
};

WmwU wmw_u_statistics(const Sample& x1, const Sample& x2);

/// Wilcoxon-Mann-Whitney rank-sum test (two-tailed) using the normal
/// approximation: Z = (U - N1N2/2) / sqrt(N1N2(N1+N2+1)/12) with
/// U = min(U1, U2). Ties get midranks; the variance term is the untied
/// formula. Rejects when |Z| exceeds the normal quantile at 1 - alpha/2.
TestOutcome wmw_test(const Sample& x1, const Sample& x2, double alpha);

/// Exact two-sided WMW p-value for small untied samples: the probability,
/// over all C(N1+N2, N1) equally likely rank splits, that min(U1, U2) is
/// no larger than observed. Computed from the rank-sum count recurrence.
/// Throws ParamError when the pooled values contain ties.
double wmw_exact_p(const Sample& x1, const Sample& x2);

/// Monte Carlo permutation test on the absolute mean difference
/// s0 = |mean(X1) - mean(X2)|. Pools the samples, re-splits them
/// `num_permutations` times (>= 99) at the original sizes, and reports
/// p = (1 + #{s_i >= s0}) / (M + 1); rejects when p <= alpha. The >= in
/// the indicator keeps identical samples at p = 1 instead of spuriously
/// rejecting them.
TestOutcome permutation_test(const Sample& x1, const Sample& x2, double alpha,
                             int num_permutations, std::uint64_t seed);

/// Empirical quantile with linear interpolation between order statistics:
/// for n sorted values the q-quantile sits at position (n-1)*q.
double empirical_quantile(std::span<const double> values, double q);

/// Removes the values at or below the empirical q-quantile, keeping only
/// those strictly above it, and records the cutoff. q = 0 is the identity.
/// Throws when nothing would remain.
Population truncate_above_quantile(const Population& pop, double q);

/// Parameters of the resampling classification algorithm.
struct StatParams {
    double cutoff_quantile = 0.5;  // q: population/sample truncation quantile
    int sample_size = 20;          // s: size of each drawn sample
    int num_draws = 1000;          // n: test repetitions per population
    double pass_overhead = 0.05;   // r: required pass-vs-fail margin
    double alpha = 0.05;           // significance level of each test
    int num_permutations = 999;    // M: resamples of the permutation test
    std::uint64_t seed = 0;

    void validate() const;
};

/// Margin predicate of the classification algorithm: a population matches
/// when passes - failures >= r * n over the n resampled tests. Kept as a
/// single function so alternative readings of the pass-overhead rule stay
/// one-line swaps.
bool pass_overhead_met(int passes, int num_draws, double pass_overhead);

/// Classifies sample X against the truncated C and NC populations. Each of
/// the n iterations draws (without replacement, per iteration) size-s
/// samples from the C population, the NC population settings and from X
/// truncated at its own q-quantile, and runs the chosen test of X-sample
/// vs population-sample; a test "passes" when the null is not rejected.
/// Population flags D_C / D_NC follow pass_overhead_met; the verdict is C
/// or NC when exactly one flag is set and IHC otherwise. Iteration i uses
/// the derived seed stream (params.seed, i), so results are independent of
/// evaluation order. Both populations must already be truncated.
Diagnosis stat_classify(const Sample& x, const Population& pop_c, const Population& pop_nc,
                        const StatParams& params, TestKind kind);

/// Mean per-class error tallies of repeated post-hoc verification runs.
/// Type I: the classification fell back to IHC (insufficient statistical
/// support). Type II: the opposite class was assigned.
struct ClassErrorTally {
    double type1_mean = 0.0;
    double type2_mean = 0.0;
    int scan_count = 0;
};

struct VerificationSummary {
    ClassErrorTally c;
    ClassErrorTally nc;
    int repetitions = 0;
};

/// Runs stat_classify over labeled held-out scans `repetitions` times with
/// distinct derived seeds and reports mean type-I/type-II counts per truth
/// class. Scan k of repetition r uses seed stream (params.seed, r) -> k.
VerificationSummary post_hoc_verify(std::span<const std::pair<Sample, Diagnosis>> test_scans,
                                    const Population& pop_c, const Population& pop_nc,
                                    const StatParams& params, TestKind kind,
                                    int repetitions = 10);

}  // namespace wsidiag
