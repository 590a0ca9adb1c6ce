#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsidiag/tissue.hpp"

namespace wsidiag {

/// One scan with its cancerous-tissue percentage p_c. `diagnosis` holds the
/// ground truth (C/NC) when known; the diagnose pipeline also uses the field
/// to carry assigned decisions, which may include IHC. Operations that need
/// ground truth (evaluate, sweep) reject records whose diagnosis is missing
/// or IHC.
struct ScanRecord {
    std::string id;
    double cancer_pct = 0.0;  // in [0, 100]
    std::optional<Diagnosis> diagnosis;
};

/// Abstention thresholds, 0 <= lower < upper <= 100 (percent).
struct ThresholdRule {
    ThresholdRule(double lower_pct, double upper_pct);

    double lower;
    double upper;
};

/// Abstaining decision rule: NC when p_c <= lower, C when p_c >= upper,
/// IHC in between.
Diagnosis decide(double cancer_pct, const ThresholdRule& rule);

/// Accuracy over decided scans and fraction of scans decided, both in
/// percent. Accuracy is absent (not NaN) when no scan is decided.
struct EvalResult {
    std::optional<double> accuracy_pct;
    double coverage_pct = 0.0;
};

EvalResult evaluate(std::span<const ScanRecord> records, const ThresholdRule& rule);

/// Accuracy/coverage matrices over a (lower, upper) threshold grid. Cells
/// with lower >= upper are inadmissible and left empty; admissible cells
/// always have a coverage and have an accuracy unless coverage is zero.
class SweepResult {
public:
    SweepResult(std::vector<double> lower_grid, std::vector<double> upper_grid);

    const std::vector<double>& lower_grid() const { return lower_grid_; }
    const std::vector<double>& upper_grid() const { return upper_grid_; }

    /// Indexed by (lower index, upper index).
    const std::optional<double>& accuracy(std::size_t i, std::size_t j) const {
        return accuracy_[i * upper_grid_.size() + j];
    }
    const std::optional<double>& coverage(std::size_t i, std::size_t j) const {
        return coverage_[i * upper_grid_.size() + j];
    }
    std::optional<double>& accuracy(std::size_t i, std::size_t j) {
        return accuracy_[i * upper_grid_.size() + j];
    }
    std::optional<double>& coverage(std::size_t i, std::size_t j) {
        return coverage_[i * upper_grid_.size() + j];
    }

private:
    std::vector<double> lower_grid_;
    std::vector<double> upper_grid_;
    std::vector<std::optional<double>> accuracy_;
    std::vector<std::optional<double>> coverage_;
};

/// Evaluates every admissible grid cell. Grids must be non-empty, sorted
/// ascending and within [0, 100].
SweepResult sweep(std::span<const ScanRecord> records, std::vector<double> lower_grid,
                  std::vector<double> upper_grid);

}  // namespace wsidiag
