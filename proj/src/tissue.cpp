#include "wsidiag/tissue.hpp"

#include "wsidiag/error.hpp"

namespace wsidiag {

namespace {

constexpr std::array<std::string_view, kNumTissueClasses> kClassCodes = {
    "BG", "T", "N", "A", "R1", "R2", "R3", "R4", "R5"};

}  // namespace

std::string_view to_code(TissueClass c) {
    return kClassCodes[static_cast<int>(c)];
}

std::optional<TissueClass> tissue_class_from_code(std::string_view code) {
    for (int i = 0; i < kNumTissueClasses; ++i) {
        if (kClassCodes[i] == code) return static_cast<TissueClass>(i);
    }
    return std::nullopt;
}

const std::array<TissueClass, kNumTissueClasses>& all_tissue_classes() {
    static const std::array<TissueClass, kNumTissueClasses> classes = [] {
        std::array<TissueClass, kNumTissueClasses> a{};
        for (int i = 0; i < kNumTissueClasses; ++i) a[i] = static_cast<TissueClass>(i);
        return a;
    }();
    return classes;
}

std::vector<std::string> canonical_class_names() {
    std::vector<std::string> names;
    names.reserve(kNumTissueClasses);
    for (auto code : kClassCodes) names.emplace_back(code);
    return names;
}

std::string_view to_code(Diagnosis d) {
    switch (d) {
        case Diagnosis::NC: return "NC";
        case Diagnosis::IHC: return "IHC";
        case Diagnosis::C: return "C";
    }
    throw ParamError("invalid Diagnosis value");
}

std::optional<Diagnosis> diagnosis_from_code(std::string_view code) {
    if (code == "NC") return Diagnosis::NC;
    if (code == "IHC") return Diagnosis::IHC;
    if (code == "C") return Diagnosis::C;
    return std::nullopt;
}

std::string_view to_code(ClassSetting s) {
    switch (s) {
        case ClassSetting::S1: return "S1";
        case ClassSetting::S2: return "S2";
        case ClassSetting::S3: return "S3";
        case ClassSetting::S4: return "S4";
        case ClassSetting::S5: return "S5";
    }
    throw ParamError("invalid ClassSetting value");
}

std::optional<ClassSetting> class_setting_from_code(std::string_view code) {
    if (code == "S1") return ClassSetting::S1;
    if (code == "S2") return ClassSetting::S2;
    if (code == "S3") return ClassSetting::S3;
    if (code == "S4") return ClassSetting::S4;
    if (code == "S5") return ClassSetting::S5;
    return std::nullopt;
}

ClassScheme::ClassScheme(ClassSetting id, std::array<int, kNumTissueClasses> groups)
    : id_(id), group_of_(groups), group_count_(0) {
    for (int g : group_of_) {
        if (g > group_count_) group_count_ = g;
    }
    // Group indices must be contiguous starting at 1.
    std::array<bool, kNumTissueClasses + 1> seen{};
    for (int g : group_of_) {
        if (g < 1 || g > group_count_) throw ParamError("class-scheme group index out of range");
        seen[g] = true;
    }
    for (int g = 1; g <= group_count_; ++g) {
        if (!seen[g]) throw ParamError("class-scheme group indices not contiguous");
    }
}

ClassScheme ClassScheme::setting(ClassSetting id) {
    switch (id) {
        case ClassSetting::S1: return ClassScheme(id, {1, 1, 1, 1, 2, 2, 2, 2, 2});
        case ClassSetting::S2: return ClassScheme(id, {1, 1, 1, 1, 1, 1, 2, 2, 2});
        case ClassSetting::S3: return ClassScheme(id, {1, 1, 1, 1, 1, 1, 2, 3, 4});
        case ClassSetting::S4: return ClassScheme(id, {1, 1, 1, 1, 2, 3, 4, 5, 6});
        case ClassSetting::S5: return ClassScheme(id, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    }
    throw ParamError("invalid ClassSetting value");
}

std::vector<std::string> ClassScheme::group_names() const {
    std::vector<std::string> names(static_cast<std::size_t>(group_count_));
    for (int i = 0; i < kNumTissueClasses; ++i) {
        std::string& name = names[static_cast<std::size_t>(group_of_[i] - 1)];
        if (!name.empty()) name += '+';
        name += kClassCodes[i];
    }
    return names;
}

}  // namespace wsidiag
