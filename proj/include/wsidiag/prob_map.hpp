#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wsidiag/tissue.hpp"

namespace wsidiag {

/// Rectangular boolean grid. Used both for binarized cancer maps
/// (true = cancerous) and for validity masks (true = valid tissue).
struct BinaryMap {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> cells;  // row-major, 1 = set

    static BinaryMap filled(int height, int width, bool value);

    bool at(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                     static_cast<std::size_t>(col)] != 0;
    }
    void set(int row, int col, bool value) {
        cells[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
              static_cast<std::size_t>(col)] = value ? 1 : 0;
    }
    std::size_t count_set() const;
};

using ValidityMask = BinaryMap;

/// Grid of per-patch class-probability vectors at a stated magnification.
/// Construction validates the shape, the magnification (40/20/10/5) and
/// that every valid cell's probability vector lies in [0,1] and sums to 1
/// within 1e-6. Values of masked-invalid cells carry no meaning and are
/// excluded from every aggregate; this library stores zeros there.
class ProbabilityMap {
public:
    /// `values` is height*width*K row-major; an empty `valid` means all
    /// cells valid.
    ProbabilityMap(int height, int width, int magnification,
                   std::vector<std::string> class_names, std::vector<double> values,
                   std::vector<std::uint8_t> valid = {});

    int height() const { return height_; }
    int width() const { return width_; }
    int magnification() const { return magnification_; }
    int num_classes() const { return static_cast<int>(class_names_.size()); }
    const std::vector<std::string>& class_names() const { return class_names_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::uint8_t>& valid_mask() const { return valid_; }

    std::span<const double> cell(int row, int col) const {
        const std::size_t k = class_names_.size();
        return {values_.data() + cell_index(row, col) * k, k};
    }
    bool valid(int row, int col) const { return valid_[cell_index(row, col)] != 0; }
    std::size_t num_cells() const { return values_.size() / class_names_.size(); }
    bool any_invalid() const;

    ValidityMask validity() const;

private:
    std::size_t cell_index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(col);
    }

    int height_;
    int width_;
    int magnification_;
    std::vector<std::string> class_names_;
    std::vector<double> values_;
    std::vector<std::uint8_t> valid_;
};

/// Sums member-class probabilities into group probabilities. The input
/// class list must be exactly the nine canonical classes in canonical
/// order; dimensions, magnification and mask carry over.
ProbabilityMap merge_classes(const ProbabilityMap& map, const ClassScheme& scheme);

/// Thresholds a two-group map (group 2 = cancerous) at probability 0.5;
/// the tie at exactly 0.5 counts as cancerous. Invalid cells map to false.
BinaryMap binarize(const ProbabilityMap& map);

/// Percentage of valid cells flagged cancerous: 100 * |true & valid| / |valid|.
/// Throws NoTissueError when the mask has no valid cell.
double cancer_fraction(const BinaryMap& bin, const ValidityMask& mask);

}  // namespace wsidiag
