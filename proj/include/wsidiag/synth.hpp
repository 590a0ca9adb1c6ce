#pragma once

#include <cstdint>
#include <vector>

#include "wsidiag/diagnosis.hpp"
#include "wsidiag/prob_map.hpp"
#include "wsidiag/stats.hpp"

namespace wsidiag {

// Seeded synthetic data: desk-scale stand-ins for patch-probability
// populations, scan-level cancer percentages and probability maps, with the
// qualitative shape of the real data (left-tail-dominated probability
// populations, a C-only right tail, clustered cancerous regions).

/// Kumaraswamy-shaped component on [lo, hi], sampled by the closed-form
/// inverse CDF x = lo + (hi-lo) * (1 - (1-u)^(1/b))^(1/a).
struct KumaShape {
    double a = 1.0;
    double b = 1.0;
    double lo = 0.0;
    double hi = 1.0;

    double sample(double u) const;
};

/// Two-component mixture describing one patch-probability population.
/// NC populations use only the left (low-probability) component; C
/// populations add a right component whose support is disjoint from the
/// left one, giving the C-only high-probability tail.
struct PopulationSpec {
    Diagnosis kind = Diagnosis::NC;  // C or NC
    std::size_t size = 0;
    double left_weight = 1.0;
    KumaShape left;
    double right_weight = 0.0;
    KumaShape right;
    std::uint64_t seed = 0;

    /// Frozen presets:
    ///   NC: left = Kuma(1.2, 9) on [0, 0.65], weight 1.
    ///   C:  0.75 * the same left component
    ///       + 0.25 * Kuma(2.2, 1.4) on [0.72, 1].
    static PopulationSpec preset(Diagnosis kind, std::size_t size, std::uint64_t seed);

    void validate() const;
};

/// Draws `spec.size` values; per value the generator consumes one uniform
/// for the component choice and one for the inverse CDF, so output is a
/// pure function of the spec.
Population gen_population(const PopulationSpec& spec);

/// Synthetic diagnosed scans. C scans draw p_c from a high-percentage
/// distribution (support >= 5%), NC scans from a near-zero one (support
/// <= 2.5%); with probability `noise_level` either kind instead lands
/// uniformly in the ambiguous (2, 5)% band. Per record the generator
/// consumes, in order: the truth uniform, the noise uniform, the value
/// uniform.
std::vector<ScanRecord> gen_scan_records(int count, double cancer_prevalence,
                                         double noise_level, std::uint64_t seed);

/// Synthetic two-class (non-cancerous/cancerous) probability map at 10x:
/// low-probability background, `blob_count` high-probability disks, and
/// isolated salt positives at rate `salt_rate`.
ProbabilityMap gen_probability_map(int height, int width, int blob_count, double salt_rate,
                                   std::uint64_t seed);

}  // namespace wsidiag
