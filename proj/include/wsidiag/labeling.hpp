#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wsidiag/tissue.hpp"

namespace wsidiag {

/// Minimum fraction of a patch an annotation must cover to label it.
inline constexpr double kOverlapThreshold = 0.75;

/// One annotation's coverage of a single patch.
struct AnnotationOverlap {
    TissueClass cls;
    double ratio;  // fraction of patch area covered, in [0, 1]
};

/// Grid of optional patch labels at one magnification.
struct PatchLabelGrid {
    int magnification = 40;
    int height = 0;
    int width = 0;
    std::vector<std::optional<TissueClass>> cells;  // row-major

    static PatchLabelGrid unlabeled(int magnification, int height, int width);

    const std::optional<TissueClass>& at(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                     static_cast<std::size_t>(col)];
    }
    std::optional<TissueClass>& at(int row, int col) {
        return cells[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                     static_cast<std::size_t>(col)];
    }
};

/// Base-level (40x) label assignment. Overlaps of the same class are summed
/// (clamped to 1) before the threshold test; the patch gets a label iff
/// exactly one class reaches the 0.75 overlap ratio. No qualifying class,
/// or two or more, yields no label.
std::optional<TissueClass> assign_label_base(std::span<const AnnotationOverlap> overlaps);

/// Coarse-level label: the most severe label among the constituent 40x
/// cells (4, 16 or 64 of them); unlabeled constituents are ignored, and a
/// fully unlabeled block stays unlabeled.
std::optional<TissueClass> assign_label_coarse(
    std::span<const std::optional<TissueClass>> constituents);

/// Label grids derived from a 40x base at the three lower magnifications.
struct LabelPyramid {
    PatchLabelGrid at20;
    PatchLabelGrid at10;
    PatchLabelGrid at5;
};

/// Propagates a 40x label grid down the magnification pyramid. Each coarse
/// cell covers a 2x2 / 4x4 / 8x8 block of base cells; base dimensions not
/// divisible by 8 are padded with unlabeled cells on the bottom/right.
LabelPyramid build_pyramid(const PatchLabelGrid& base);

}  // namespace wsidiag
