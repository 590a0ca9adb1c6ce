#include "wsidiag/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wsidiag/error.hpp"

namespace wsidiag {

ConfusionMatrix::ConfusionMatrix(int num_classes) : m_(num_classes) {
    if (m_ < 1) throw ParamError("ConfusionMatrix: need at least one class");
    counts_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0);
}

long long ConfusionMatrix::at(int truth, int pred) const {
    if (truth < 1 || truth > m_ || pred < 1 || pred > m_) {
        throw ParamError("ConfusionMatrix: label out of range");
    }
    return counts_[static_cast<std::size_t>(truth - 1) * m_ + static_cast<std::size_t>(pred - 1)];
}

void ConfusionMatrix::add(int truth, int pred, long long count) {
    if (truth < 1 || truth > m_ || pred < 1 || pred > m_) {
        throw ParamError("ConfusionMatrix: label out of range");
    }
    counts_[static_cast<std::size_t>(truth - 1) * m_ + static_cast<std::size_t>(pred - 1)] += count;
}

long long ConfusionMatrix::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0LL);
}

long long ConfusionMatrix::row_total(int truth) const {
    long long sum = 0;
    for (int p = 1; p <= m_; ++p) sum += at(truth, p);
    return sum;
}

ConfusionMatrix confusion(std::span<const int> preds, std::span<const int> truths,
                          int num_classes) {
    if (preds.size() != truths.size()) {
        throw ParamError("confusion: prediction and truth lists differ in length");
    }
    if (preds.empty()) throw ParamError("confusion: empty input");
    ConfusionMatrix cm(num_classes);
    for (std::size_t i = 0; i < preds.size(); ++i) cm.add(truths[i], preds[i]);
    return cm;
}

double accuracy_pct(const ConfusionMatrix& cm) {
    const long long total = cm.total();
    if (total == 0) throw ParamError("accuracy: confusion matrix is all zero");
    long long diag = 0;
    for (int i = 1; i <= cm.num_classes(); ++i) diag += cm.at(i, i);
    return 100.0 * static_cast<double>(diag) / static_cast<double>(total);
}

double av_acc_pct(const ConfusionMatrix& cm) {
    double tpr_sum = 0.0;
    int supported = 0;
    for (int i = 1; i <= cm.num_classes(); ++i) {
        const long long row = cm.row_total(i);
        if (row == 0) continue;  // classes without true items are excluded
        tpr_sum += static_cast<double>(cm.at(i, i)) / static_cast<double>(row);
        ++supported;
    }
    if (supported == 0) throw ParamError("av_acc: confusion matrix is all zero");
    return 100.0 * tpr_sum / static_cast<double>(supported);
}

std::vector<double> midranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double midrank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = midrank;
        i = j + 1;
    }
    return ranks;
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ParamError("spearman: input lengths differ");
    if (x.size() < 3) throw ParamError("spearman: need at least 3 observations");

    const std::vector<double> rx = midranks(x);
    const std::vector<double> ry = midranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;  // constant vector: undefined
    return sxy / std::sqrt(sxx * syy);
}

std::vector<double> RaterTable::encoded_column(std::size_t rater) const {
    std::vector<double> col(num_rows());
    for (std::size_t r = 0; r < num_rows(); ++r) {
        col[r] = static_cast<double>(static_cast<int>(at(r, rater)));
    }
    return col;
}

AgreementMatrix agreement_matrix(const RaterTable& table) {
    const std::size_t m = table.num_raters();
    if (m == 0) throw ParamError("agreement_matrix: table has no rater columns");
    AgreementMatrix out;
    out.names = table.rater_names;
    out.rho.assign(m * m, std::nullopt);

    std::vector<std::vector<double>> cols(m);
    for (std::size_t i = 0; i < m; ++i) cols[i] = table.encoded_column(i);

    for (std::size_t i = 0; i < m; ++i) {
        out.rho[i * m + i] = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::optional<double> rho = spearman(cols[i], cols[j]);
            out.rho[i * m + j] = rho;
            out.rho[j * m + i] = rho;
        }
    }
    return out;
}

}  // namespace wsidiag
