#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsidiag/tissue.hpp"

namespace wsidiag {

/// Square count matrix with ground truth on rows, predictions on columns.
class ConfusionMatrix {
public:
    explicit ConfusionMatrix(int num_classes);

    int num_classes() const { return m_; }
    long long at(int truth, int pred) const;
    void add(int truth, int pred, long long count = 1);
    long long total() const;
    long long row_total(int truth) const;

private:
    int m_;
    std::vector<long long> counts_;
};

/// Builds the confusion matrix for 1-based labels in [1, num_classes].
ConfusionMatrix confusion(std::span<const int> preds, std::span<const int> truths,
                          int num_classes);

/// 100 * trace / total.
double accuracy_pct(const ConfusionMatrix& cm);

/// 100 * mean per-class true-positive rate over classes with at least one
/// true item; classes without support are excluded from the mean.
double av_acc_pct(const ConfusionMatrix& cm);

/// Midranks (average ranks of tied runs) of a value vector, 1-based.
std::vector<double> midranks(std::span<const double> values);

/// Tie-corrected Spearman correlation: the Pearson correlation of the two
/// midrank vectors. Undefined (nullopt) when either vector is constant.
/// Requires equal lengths of at least 3.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

/// Per-WSI categorical responses of several raters, plus the optional
/// machine-reported cancer-tissue percentage column.
struct RaterTable {
    std::vector<std::string> wsi_ids;
    std::vector<std::string> rater_names;
    std::vector<Diagnosis> responses;  // row-major, rows x raters
    std::vector<double> cancer_pct;    // empty when the table has no such column

    std::size_t num_rows() const { return wsi_ids.size(); }
    std::size_t num_raters() const { return rater_names.size(); }
    Diagnosis at(std::size_t row, std::size_t rater) const {
        return responses[row * rater_names.size() + rater];
    }
    /// Rater column on the ordinal scale NC=0, IHC=1, C=2.
    std::vector<double> encoded_column(std::size_t rater) const;
};

/// Symmetric matrix of pairwise rater correlations with a unit diagonal.
struct AgreementMatrix {
    std::vector<std::string> names;
    std::vector<std::optional<double>> rho;  // names.size() x names.size()

    const std::optional<double>& at(std::size_t i, std::size_t j) const {
        return rho[i * names.size() + j];
    }
};

AgreementMatrix agreement_matrix(const RaterTable& table);

}  // namespace wsidiag
