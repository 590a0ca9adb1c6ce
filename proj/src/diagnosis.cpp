#include "wsidiag/diagnosis.hpp"

#include <algorithm>
#include <cmath>

#include "wsidiag/error.hpp"

namespace wsidiag {

ThresholdRule::ThresholdRule(double lower_pct, double upper_pct)
    : lower(lower_pct), upper(upper_pct) {
    if (!(lower >= 0.0 && lower < upper && upper <= 100.0)) {
        throw ParamError("ThresholdRule: need 0 <= lower < upper <= 100");
    }
}

Diagnosis decide(double cancer_pct, const ThresholdRule& rule) {
    if (!std::isfinite(cancer_pct)) throw ParamError("decide: cancer percentage not finite");
    if (cancer_pct <= rule.lower) return Diagnosis::NC;
    if (cancer_pct >= rule.upper) return Diagnosis::C;
    return Diagnosis::IHC;
}

EvalResult evaluate(std::span<const ScanRecord> records, const ThresholdRule& rule) {
    if (records.empty()) throw ParamError("evaluate: no scan records");
    std::size_t decided = 0;
    std::size_t correct = 0;
    for (const auto& rec : records) {
        if (!rec.diagnosis || *rec.diagnosis == Diagnosis::IHC) {
            throw ParamError("evaluate: record '" + rec.id + "' has no C/NC ground truth");
        }
        const Diagnosis d = decide(rec.cancer_pct, rule);
        if (d == Diagnosis::IHC) continue;
        ++decided;
        if (d == *rec.diagnosis) ++correct;
    }
    EvalResult result;
    result.coverage_pct = 100.0 * static_cast<double>(decided) / static_cast<double>(records.size());
    if (decided > 0) {
        result.accuracy_pct = 100.0 * static_cast<double>(correct) / static_cast<double>(decided);
    }
    return result;
}

SweepResult::SweepResult(std::vector<double> lower_grid, std::vector<double> upper_grid)
    : lower_grid_(std::move(lower_grid)),
      upper_grid_(std::move(upper_grid)),
      accuracy_(lower_grid_.size() * upper_grid_.size()),
      coverage_(lower_grid_.size() * upper_grid_.size()) {}

namespace {

void check_grid(std::span<const double> grid, const char* name) {
    if (grid.empty()) throw ParamError(std::string("sweep: empty ") + name + " grid");
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw ParamError(std::string("sweep: ") + name + " grid not sorted ascending");
    }
    if (grid.front() < 0.0 || grid.back() > 100.0) {
        throw ParamError(std::string("sweep: ") + name + " grid outside [0, 100]");
    }
}

}  // namespace

SweepResult sweep(std::span<const ScanRecord> records, std::vector<double> lower_grid,
                  std::vector<double> upper_grid) {
    check_grid(lower_grid, "lower");
    check_grid(upper_grid, "upper");
    SweepResult result(std::move(lower_grid), std::move(upper_grid));
    for (std::size_t i = 0; i < result.lower_grid().size(); ++i) {
        for (std::size_t j = 0; j < result.upper_grid().size(); ++j) {
            const double tl = result.lower_grid()[i];
            const double tu = result.upper_grid()[j];
            if (!(tl < tu)) continue;  // inadmissible cell stays empty
            const EvalResult cell = evaluate(records, ThresholdRule(tl, tu));
            result.coverage(i, j) = cell.coverage_pct;
            result.accuracy(i, j) = cell.accuracy_pct;
        }
    }
    return result;
}

}  // namespace wsidiag
