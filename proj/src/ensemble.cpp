#include "wsidiag/ensemble.hpp"

#include <algorithm>
#include <cmath>

#include "wsidiag/error.hpp"

namespace wsidiag {

ProbabilityMap downscale(const ProbabilityMap& map, int factor) {
    if (factor != 2 && factor != 4 && factor != 8) {
        throw ParamError("downscale: factor must be 2, 4 or 8");
    }
    if (map.magnification() % factor != 0) {
        throw ParamError("downscale: magnification not divisible by factor");
    }
    const int out_h = (map.height() + factor - 1) / factor;
    const int out_w = (map.width() + factor - 1) / factor;
    const std::size_t k = static_cast<std::size_t>(map.num_classes());

    std::vector<double> values(static_cast<std::size_t>(out_h) * out_w * k, 0.0);
    std::vector<std::uint8_t> valid(static_cast<std::size_t>(out_h) * out_w, 0);

    for (int r = 0; r < out_h; ++r) {
        for (int c = 0; c < out_w; ++c) {
            const std::size_t out_cell = static_cast<std::size_t>(r) * out_w + c;
            double* acc = values.data() + out_cell * k;
            int count = 0;
            for (int dr = 0; dr < factor; ++dr) {
                for (int dc = 0; dc < factor; ++dc) {
                    const int sr = r * factor + dr;
                    const int sc = c * factor + dc;
                    if (sr >= map.height() || sc >= map.width()) continue;  // padding
                    if (!map.valid(sr, sc)) continue;
                    const auto cell = map.cell(sr, sc);
                    for (std::size_t j = 0; j < k; ++j) acc[j] += cell[j];
                    ++count;
                }
            }
            if (count == 0) continue;  // all-invalid block: cell stays invalid, zeros
            double sum = 0.0;
            for (std::size_t j = 0; j < k; ++j) sum += acc[j];
            if (sum <= 0.0) continue;
            for (std::size_t j = 0; j < k; ++j) acc[j] /= sum;
            valid[out_cell] = 1;
        }
    }
    return ProbabilityMap(out_h, out_w, map.magnification() / factor, map.class_names(),
                          std::move(values), std::move(valid));
}

ProbabilityMap average_maps(std::span<const ProbabilityMap> maps) {
    if (maps.empty()) throw ParamError("average_maps: no input maps");
    const ProbabilityMap& first = maps.front();
    for (const auto& m : maps) {
        if (m.height() != first.height() || m.width() != first.width()) {
            throw SchemaError("average_maps: input maps have different dimensions");
        }
        if (m.magnification() != first.magnification()) {
            throw SchemaError("average_maps: input maps have different magnifications");
        }
        if (m.class_names() != first.class_names()) {
            throw SchemaError("average_maps: input maps have different class lists");
        }
    }

    const std::size_t cells = first.num_cells();
    const std::size_t k = static_cast<std::size_t>(first.num_classes());
    std::vector<double> values(cells * k, 0.0);
    std::vector<std::uint8_t> valid(cells, 0);
    std::vector<double> contrib;
    contrib.reserve(maps.size());

    for (std::size_t c = 0; c < cells; ++c) {
        const int row = static_cast<int>(c) / first.width();
        const int col = static_cast<int>(c) % first.width();
        bool any = false;
        for (std::size_t j = 0; j < k; ++j) {
            contrib.clear();
            for (const auto& m : maps) {
                if (m.valid(row, col)) contrib.push_back(m.cell(row, col)[j]);
            }
            if (contrib.empty()) break;
            any = true;
            std::sort(contrib.begin(), contrib.end());
            double sum = 0.0;
            for (double v : contrib) sum += v;
            values[c * k + j] = sum / static_cast<double>(contrib.size());
        }
        if (any) valid[c] = 1;
    }
    return ProbabilityMap(first.height(), first.width(), first.magnification(),
                          first.class_names(), std::move(values), std::move(valid));
}

ProbabilityMap ensemble_multiscale(std::span<const ProbabilityMap> maps) {
    if (maps.empty()) throw ParamError("ensemble_multiscale: no input maps");
    int coarsest = maps.front().magnification();
    for (const auto& m : maps) coarsest = std::min(coarsest, m.magnification());

    std::vector<ProbabilityMap> rescaled;
    rescaled.reserve(maps.size());
    for (const auto& m : maps) {
        const int factor = m.magnification() / coarsest;
        rescaled.push_back(factor == 1 ? m : downscale(m, factor));
    }
    return average_maps(rescaled);
}

BinaryMap median_filter(const BinaryMap& bin, int k, const ValidityMask* valid) {
    if (k < 1 || k % 2 == 0) throw ParamError("median_filter: kernel size must be odd");
    if (valid && (valid->height != bin.height || valid->width != bin.width)) {
        throw SchemaError("median_filter: mask dimensions differ from map");
    }
    const int radius = k / 2;
    BinaryMap out = BinaryMap::filled(bin.height, bin.width, false);
    for (int r = 0; r < bin.height; ++r) {
        for (int c = 0; c < bin.width; ++c) {
            if (valid && !valid->at(r, c)) continue;  // invalid cells stay false
            int set = 0;
            int total = 0;
            for (int dr = -radius; dr <= radius; ++dr) {
                for (int dc = -radius; dc <= radius; ++dc) {
                    const int nr = r + dr;
                    const int nc = c + dc;
                    if (nr < 0 || nr >= bin.height || nc < 0 || nc >= bin.width) continue;
                    if (valid && !valid->at(nr, nc)) continue;
                    ++total;
                    if (bin.at(nr, nc)) ++set;
                }
            }
            const int unset = total - set;
            bool result = bin.at(r, c);  // tie keeps the original value
            if (set > unset) result = true;
            if (set < unset) result = false;
            out.set(r, c, result);
        }
    }
    return out;
}

}  // namespace wsidiag
