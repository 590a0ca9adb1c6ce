#include "wsidiag/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "wsidiag/error.hpp"
#include "wsidiag/rng.hpp"

namespace wsidiag {

double KumaShape::sample(double u) const {
    const double x = std::pow(1.0 - std::pow(1.0 - u, 1.0 / b), 1.0 / a);
    return lo + (hi - lo) * x;
}

PopulationSpec PopulationSpec::preset(Diagnosis kind, std::size_t size, std::uint64_t seed) {
    PopulationSpec spec;
    spec.kind = kind;
    spec.size = size;
    spec.seed = seed;
    spec.left = KumaShape{1.2, 9.0, 0.0, 0.65};
    if (kind == Diagnosis::C) {
        spec.left_weight = 0.75;
        spec.right_weight = 0.25;
        spec.right = KumaShape{2.2, 1.4, 0.72, 1.0};
    } else if (kind == Diagnosis::NC) {
        spec.left_weight = 1.0;
        spec.right_weight = 0.0;
    } else {
        throw ParamError("PopulationSpec: kind must be C or NC");
    }
    return spec;
}

void PopulationSpec::validate() const {
    if (kind != Diagnosis::C && kind != Diagnosis::NC) {
        throw ParamError("PopulationSpec: kind must be C or NC");
    }
    if (size == 0) throw ParamError("PopulationSpec: size must be positive");
    if (std::fabs(left_weight + right_weight - 1.0) > 1e-12) {
        throw ParamError("PopulationSpec: component weights must sum to 1");
    }
    if (left_weight < 0.0 || right_weight < 0.0) {
        throw ParamError("PopulationSpec: component weights must be non-negative");
    }
    for (const KumaShape* shape : {&left, &right}) {
        if (!(shape->a > 0.0 && shape->b > 0.0)) {
            throw ParamError("PopulationSpec: shape parameters must be positive");
        }
        if (!(shape->lo >= 0.0 && shape->lo < shape->hi && shape->hi <= 1.0)) {
            throw ParamError("PopulationSpec: component support must satisfy 0 <= lo < hi <= 1");
        }
    }
}

Population gen_population(const PopulationSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    Population pop;
    pop.label = spec.kind;
    pop.values.reserve(spec.size);
    for (std::size_t i = 0; i < spec.size; ++i) {
        const bool right = rng.uniform01() < spec.right_weight;
        const double u = rng.uniform01();
        pop.values.push_back(right ? spec.right.sample(u) : spec.left.sample(u));
    }
    return pop;
}

std::vector<ScanRecord> gen_scan_records(int count, double cancer_prevalence,
                                         double noise_level, std::uint64_t seed) {
    if (count < 1) throw ParamError("gen_scan_records: count must be positive");
    if (!(cancer_prevalence >= 0.0 && cancer_prevalence <= 1.0)) {
        throw ParamError("gen_scan_records: prevalence must lie in [0, 1]");
    }
    if (!(noise_level >= 0.0 && noise_level <= 1.0)) {
        throw ParamError("gen_scan_records: noise level must lie in [0, 1]");
    }

    // p_c models: NC concentrated near zero, C spread over the high range,
    // and a shared ambiguous band between 2% and 5% fed by the noise level.
    const KumaShape nc_shape{1.0, 6.0, 0.0, 2.5};
    const KumaShape c_shape{1.4, 2.2, 5.0, 80.0};

    Rng rng(seed);
    std::vector<ScanRecord> records;
    records.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const bool cancer = rng.uniform01() < cancer_prevalence;
        const bool ambiguous = rng.uniform01() < noise_level;
        const double u = rng.uniform01();
        double pct;
        if (ambiguous) {
            pct = 2.0 + 3.0 * u;
        } else {
            pct = (cancer ? c_shape : nc_shape).sample(u);
        }
        char id[16];
        std::snprintf(id, sizeof(id), "scan-%04d", i + 1);
        records.push_back(ScanRecord{id, pct, cancer ? Diagnosis::C : Diagnosis::NC});
    }
    return records;
}

ProbabilityMap gen_probability_map(int height, int width, int blob_count, double salt_rate,
                                   std::uint64_t seed) {
    if (height <= 0 || width <= 0) throw ParamError("gen_probability_map: bad dimensions");
    if (blob_count < 0) throw ParamError("gen_probability_map: blob count must be >= 0");
    if (!(salt_rate >= 0.0 && salt_rate <= 1.0)) {
        throw ParamError("gen_probability_map: salt rate must lie in [0, 1]");
    }

    Rng rng(seed);
    const std::size_t cells = static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
    std::vector<double> cancer_p(cells);

    // Background: quiet cancer probabilities, strictly below the 0.5
    // binarization threshold.
    for (std::size_t i = 0; i < cells; ++i) {
        const double u = rng.uniform01();
        cancer_p[i] = 0.02 + 0.2 * u * u;
    }

    // Cancerous clusters: high-probability disks.
    const int max_radius = std::max(2, std::min(height, width) / 6);
    for (int b = 0; b < blob_count; ++b) {
        const int cr = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(height)));
        const int cc = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(width)));
        const int radius =
            2 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(max_radius - 1)));
        for (int r = std::max(0, cr - radius); r <= std::min(height - 1, cr + radius); ++r) {
            for (int c = std::max(0, cc - radius); c <= std::min(width - 1, cc + radius); ++c) {
                const int dr = r - cr;
                const int dc = c - cc;
                if (dr * dr + dc * dc > radius * radius) continue;
                const double u = rng.uniform01();
                cancer_p[static_cast<std::size_t>(r) * width + c] = 0.75 + 0.2 * u;
            }
        }
    }

    // Salt noise: isolated high positives.
    for (std::size_t i = 0; i < cells; ++i) {
        const bool salt = rng.uniform01() < salt_rate;
        const double u = rng.uniform01();
        if (salt) cancer_p[i] = 0.8 + 0.15 * u;
    }

    std::vector<double> values(cells * 2);
    for (std::size_t i = 0; i < cells; ++i) {
        values[2 * i] = 1.0 - cancer_p[i];
        values[2 * i + 1] = cancer_p[i];
    }
    return ProbabilityMap(height, width, 10, {"noncancerous", "cancerous"}, std::move(values));
}

}  // namespace wsidiag
