#include "wsidiag/prob_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wsidiag/error.hpp"

namespace wsidiag {

namespace {

constexpr double kSumTolerance = 1e-6;
constexpr double kRangeSlack = 1e-9;

bool is_allowed_magnification(int m) {
    return m == 40 || m == 20 || m == 10 || m == 5;
}

}  // namespace

BinaryMap BinaryMap::filled(int height, int width, bool value) {
    if (height <= 0 || width <= 0) throw ParamError("BinaryMap: dimensions must be positive");
    BinaryMap map;
    map.height = height;
    map.width = width;
    map.cells.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width),
                     value ? 1 : 0);
    return map;
}

std::size_t BinaryMap::count_set() const {
    return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), std::uint8_t{1}));
}

ProbabilityMap::ProbabilityMap(int height, int width, int magnification,
                               std::vector<std::string> class_names, std::vector<double> values,
                               std::vector<std::uint8_t> valid)
    : height_(height),
      width_(width),
      magnification_(magnification),
      class_names_(std::move(class_names)),
      values_(std::move(values)),
      valid_(std::move(valid)) {
    if (height_ <= 0 || width_ <= 0) throw SchemaError("ProbabilityMap: dimensions must be positive");
    if (!is_allowed_magnification(magnification_)) {
        throw SchemaError("ProbabilityMap: magnification must be one of 40, 20, 10, 5");
    }
    if (class_names_.empty()) throw SchemaError("ProbabilityMap: class list is empty");
    const std::size_t cells = static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_);
    if (values_.size() != cells * class_names_.size()) {
        throw SchemaError("ProbabilityMap: value count does not match height*width*K");
    }
    if (valid_.empty()) {
        valid_.assign(cells, 1);
    } else if (valid_.size() != cells) {
        throw SchemaError("ProbabilityMap: mask size does not match height*width");
    }

    const std::size_t k = class_names_.size();
    for (std::size_t c = 0; c < cells; ++c) {
        if (!valid_[c]) continue;
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            double& v = values_[c * k + j];
            if (!std::isfinite(v) || v < -kRangeSlack || v > 1.0 + kRangeSlack) {
                throw SchemaError("ProbabilityMap: probability outside [0, 1]");
            }
            v = std::clamp(v, 0.0, 1.0);
            sum += v;
        }
        if (std::fabs(sum - 1.0) > kSumTolerance) {
            throw SchemaError("ProbabilityMap: cell probabilities do not sum to 1");
        }
    }
}

bool ProbabilityMap::any_invalid() const {
    return std::find(valid_.begin(), valid_.end(), std::uint8_t{0}) != valid_.end();
}

ValidityMask ProbabilityMap::validity() const {
    ValidityMask mask;
    mask.height = height_;
    mask.width = width_;
    mask.cells = valid_;
    return mask;
}

ProbabilityMap merge_classes(const ProbabilityMap& map, const ClassScheme& scheme) {
    static const std::vector<std::string> canonical = canonical_class_names();
    if (map.class_names() != canonical) {
        throw SchemaError("merge_classes: input class list is not the canonical nine classes");
    }
    const int m = scheme.group_count();
    const std::size_t cells = map.num_cells();
    std::vector<double> merged(cells * static_cast<std::size_t>(m), 0.0);
    const auto& values = map.values();
    for (std::size_t c = 0; c < cells; ++c) {
        for (int j = 0; j < kNumTissueClasses; ++j) {
            const int g = scheme.group_of(static_cast<TissueClass>(j)) - 1;
            merged[c * static_cast<std::size_t>(m) + static_cast<std::size_t>(g)] +=
                values[c * kNumTissueClasses + static_cast<std::size_t>(j)];
        }
    }
    return ProbabilityMap(map.height(), map.width(), map.magnification(), scheme.group_names(),
                          std::move(merged), map.valid_mask());
}

BinaryMap binarize(const ProbabilityMap& map) {
    if (map.num_classes() != 2) {
        throw SchemaError("binarize: map must have exactly two class groups");
    }
    BinaryMap out = BinaryMap::filled(map.height(), map.width(), false);
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            if (!map.valid(r, c)) continue;
            out.set(r, c, map.cell(r, c)[1] >= 0.5);
        }
    }
    return out;
}

double cancer_fraction(const BinaryMap& bin, const ValidityMask& mask) {
    if (bin.height != mask.height || bin.width != mask.width) {
        throw SchemaError("cancer_fraction: map and mask dimensions differ");
    }
    std::size_t valid = 0;
    std::size_t cancerous = 0;
    for (std::size_t i = 0; i < bin.cells.size(); ++i) {
        if (!mask.cells[i]) continue;
        ++valid;
        if (bin.cells[i]) ++cancerous;
    }
    if (valid == 0) throw NoTissueError("cancer_fraction: no valid tissue cells");
    return 100.0 * static_cast<double>(cancerous) / static_cast<double>(valid);
}

}  // namespace wsidiag
