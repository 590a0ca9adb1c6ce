#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wsidiag {

/// The nine tissue classes, in canonical order. The enumerator order doubles
/// as the severity order used for label propagation: BG < T < N < A < R1 <
/// R2 < R3 < R4 < R5, i.e. every Gleason grade outranks every non-cancerous
/// class and higher grades outrank lower ones.
enum class TissueClass : int {
    BG = 0,  // scan background
    T,       // tissue background
    N,       // normal tissue
    A,       // acquisition artifact
    R1,      // Gleason grade 1
    R2,
    R3,
    R4,
    R5,
};

inline constexpr int kNumTissueClasses = 9;

std::string_view to_code(TissueClass c);
std::optional<TissueClass> tissue_class_from_code(std::string_view code);

/// All nine classes in canonical order (BG, T, N, A, R1..R5). Probability
/// vectors and files index channels in this order.
const std::array<TissueClass, kNumTissueClasses>& all_tissue_classes();
std::vector<std::string> canonical_class_names();

inline bool more_severe(TissueClass a, TissueClass b) {
    return static_cast<int>(a) > static_cast<int>(b);
}

/// Scan-level outcome. NC < IHC < C is the ordinal scale used both by the
/// decision monotonicity properties and by the rater-agreement encoding
/// (NC=0, IHC=1, C=2).
enum class Diagnosis : int {
    NC = 0,   // non-cancerous
    IHC = 1,  // abstained; further examination required
    C = 2,    // cancerous
};

std::string_view to_code(Diagnosis d);
std::optional<Diagnosis> diagnosis_from_code(std::string_view code);

/// One of the five class-combination settings. Each maps the nine classes
/// onto 1-based contiguous group indices:
///
///        BG T N A R1 R2 R3 R4 R5
///   S1    1 1 1 1  2  2  2  2  2
///   S2    1 1 1 1  1  1  2  2  2
///   S3    1 1 1 1  1  1  2  3  4
///   S4    1 1 1 1  2  3  4  5  6
///   S5    1 2 3 4  5  6  7  8  9
///
/// Under the binary settings S1 and S2 group 2 collects the cancerous
/// grades, which is what binarize() relies on.
enum class ClassSetting { S1, S2, S3, S4, S5 };

std::string_view to_code(ClassSetting s);
std::optional<ClassSetting> class_setting_from_code(std::string_view code);

class ClassScheme {
public:
    static ClassScheme setting(ClassSetting id);

    ClassSetting id() const { return id_; }
    int group_count() const { return group_count_; }
    int group_of(TissueClass c) const { return group_of_[static_cast<int>(c)]; }

    /// Names for the merged channels, composed from member codes in
    /// canonical order, e.g. S1 -> {"BG+T+N+A", "R1+R2+R3+R4+R5"}.
    std::vector<std::string> group_names() const;

private:
    ClassScheme(ClassSetting id, std::array<int, kNumTissueClasses> groups);

    ClassSetting id_;
    std::array<int, kNumTissueClasses> group_of_;
    int group_count_;
};

}  // namespace wsidiag
