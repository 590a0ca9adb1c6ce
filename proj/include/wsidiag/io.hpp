#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wsidiag/diagnosis.hpp"
#include "wsidiag/labeling.hpp"
#include "wsidiag/metrics.hpp"
#include "wsidiag/prob_map.hpp"
#include "wsidiag/stats.hpp"

namespace wsidiag::io {

// Plain-text file formats. All numbers use '.' as the decimal separator
// regardless of locale; doubles are written with the shortest digit string
// that parses back to the identical value, so write -> read round-trips are
// exact and byte-stable.

/// Shortest exact decimal representation.
std::string format_double(double value);

/// Fixed-notation exact representation padded to at least four fractional
/// digits; used for percentage columns.
std::string format_percent(double value);

/// JSON sidecar describing a probability-map file pair. The `values` file
/// holds height*width rows of K comma-separated probabilities (row-major
/// cells); the optional `mask` file holds height rows of width 0/1 flags.
/// Paths are relative to the manifest's directory.
struct MapManifest {
    int magnification = 0;
    int height = 0;
    int width = 0;
    std::vector<std::string> classes;
    std::string values_path;
    std::string mask_path;  // empty = no mask, all cells valid
};

/// Writes `<stem>.json` plus `<stem>_values.csv` (and `<stem>_mask.csv`
/// when the map has invalid cells) next to `manifest_path`.
void write_probability_map(const std::filesystem::path& manifest_path,
                           const ProbabilityMap& map);
ProbabilityMap read_probability_map(const std::filesystem::path& manifest_path);

/// CSV with header `scan_id,cancer_pct,diagnosis`; the diagnosis column is
/// blank for unknown, otherwise C, NC or IHC.
void write_scan_records(const std::filesystem::path& path,
                        std::span<const ScanRecord> records);
std::vector<ScanRecord> read_scan_records(const std::filesystem::path& path);

/// CSV with header `wsi_no,<rater>,...`; a column named `cancer_pct` (at
/// any position) is read as the numeric percentage column, every other
/// column is a rater with responses in {C, NC, IHC}.
void write_rater_table(const std::filesystem::path& path, const RaterTable& table);
RaterTable read_rater_table(const std::filesystem::path& path);

/// One probability per line.
void write_population(const std::filesystem::path& path, const Population& pop);
Population read_population(const std::filesystem::path& path, Diagnosis label);

/// First line `magnification,height,width`, then height rows of width
/// class codes; an empty field is an unlabeled cell.
void write_label_grid(const std::filesystem::path& path, const PatchLabelGrid& grid);
PatchLabelGrid read_label_grid(const std::filesystem::path& path);

/// Generic labeled matrix CSV: header `corner,<col>,...`, one labeled row
/// per line. Missing entries are written as NA.
struct LabeledMatrix {
    std::string corner;
    std::vector<std::string> col_labels;
    std::vector<std::string> row_labels;
    std::vector<std::optional<double>> cells;  // rows x cols

    const std::optional<double>& at(std::size_t r, std::size_t c) const {
        return cells[r * col_labels.size() + c];
    }
};

void write_matrix_csv(const std::filesystem::path& path, const LabeledMatrix& matrix);
LabeledMatrix read_matrix_csv(const std::filesystem::path& path);

}  // namespace wsidiag::io
