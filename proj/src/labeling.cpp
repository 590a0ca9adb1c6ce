#include "wsidiag/labeling.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "wsidiag/error.hpp"

namespace wsidiag {

PatchLabelGrid PatchLabelGrid::unlabeled(int magnification, int height, int width) {
    if (height <= 0 || width <= 0) throw ParamError("PatchLabelGrid: dimensions must be positive");
    PatchLabelGrid grid;
    grid.magnification = magnification;
    grid.height = height;
    grid.width = width;
    grid.cells.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width),
                      std::nullopt);
    return grid;
}

std::optional<TissueClass> assign_label_base(std::span<const AnnotationOverlap> overlaps) {
    std::array<double, kNumTissueClasses> coverage{};
    for (const auto& o : overlaps) {
        if (!(o.ratio >= 0.0 && o.ratio <= 1.0)) {
            throw ParamError("assign_label_base: overlap ratio outside [0, 1]");
        }
        double& c = coverage[static_cast<std::size_t>(o.cls)];
        c = std::min(1.0, c + o.ratio);
    }
    std::optional<TissueClass> label;
    for (int i = 0; i < kNumTissueClasses; ++i) {
        if (coverage[static_cast<std::size_t>(i)] < kOverlapThreshold) continue;
        if (label) return std::nullopt;  // contradictory: two qualifying classes
        label = static_cast<TissueClass>(i);
    }
    return label;
}

std::optional<TissueClass> assign_label_coarse(
    std::span<const std::optional<TissueClass>> constituents) {
    const std::size_t n = constituents.size();
    if (n != 4 && n != 16 && n != 64) {
        throw SchemaError("assign_label_coarse: constituent count must be 4, 16 or 64");
    }
    std::optional<TissueClass> label;
    for (const auto& c : constituents) {
        if (!c) continue;
        if (!label || more_severe(*c, *label)) label = *c;
    }
    return label;
}

namespace {

PatchLabelGrid coarsen(const PatchLabelGrid& base, int factor) {
    const int out_h = (base.height + factor - 1) / factor;
    const int out_w = (base.width + factor - 1) / factor;
    PatchLabelGrid out = PatchLabelGrid::unlabeled(base.magnification / factor, out_h, out_w);
    std::vector<std::optional<TissueClass>> block(
        static_cast<std::size_t>(factor) * static_cast<std::size_t>(factor));
    for (int r = 0; r < out_h; ++r) {
        for (int c = 0; c < out_w; ++c) {
            std::size_t i = 0;
            for (int dr = 0; dr < factor; ++dr) {
                for (int dc = 0; dc < factor; ++dc) {
                    const int br = r * factor + dr;
                    const int bc = c * factor + dc;
                    // Cells beyond the base grid are padding: unlabeled.
                    block[i++] = (br < base.height && bc < base.width) ? base.at(br, bc)
                                                                       : std::nullopt;
                }
            }
            out.at(r, c) = assign_label_coarse(block);
        }
    }
    return out;
}

}  // namespace

LabelPyramid build_pyramid(const PatchLabelGrid& base) {
    if (base.magnification != 40) {
        throw ParamError("build_pyramid: base grid must be at 40x magnification");
    }
    return LabelPyramid{coarsen(base, 2), coarsen(base, 4), coarsen(base, 8)};
}

}  // namespace wsidiag
