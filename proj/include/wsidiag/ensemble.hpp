#pragma once

#include <span>
#include <vector>

#include "wsidiag/prob_map.hpp"

namespace wsidiag {

/// Block-mean pooling by `factor` in {2, 4, 8}: each output cell is the
/// mean of its valid constituent probability vectors, renormalized to sum 1.
/// Dimensions not divisible by the factor are padded with invalid cells;
/// an output cell is valid iff at least one constituent is. The output
/// magnification is the input's divided by `factor`.
ProbabilityMap downscale(const ProbabilityMap& map, int factor);

/// Per-cell arithmetic mean of maps sharing shape, magnification and class
/// list. A cell is valid iff valid in at least one input and averages only
/// over the inputs where it is valid. Per-cell contributions are summed in
/// sorted value order, so the result is bit-identical under any permutation
/// of the input list.
ProbabilityMap average_maps(std::span<const ProbabilityMap> maps);

/// Downscales every map to the coarsest magnification present, then
/// averages.
ProbabilityMap ensemble_multiscale(std::span<const ProbabilityMap> maps);

/// Majority filter over the k x k neighborhood (k odd) restricted to
/// in-bounds cells, and to valid cells when a mask is given. Ties keep the
/// original cell value; masked-invalid cells stay false.
BinaryMap median_filter(const BinaryMap& bin, int k = 3, const ValidityMask* valid = nullptr);

}  // namespace wsidiag
