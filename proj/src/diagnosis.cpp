#include "fedecg/diagnosis.hpp"

namespace fedecg {

const std::array<std::string_view, kNumDiagnoses>& diagnosis_abbreviations() {
    static const std::array<std::string_view, kNumDiagnoses> names = {
        "IAVB", "abQRS", "AF",    "LAE",  "LAD",   "LBBB", "LVH",
        "LQRSV", "MI",   "MIs",   "NSSTTA", "OldMI", "PR",  "PAC",
        "LQT",  "QAb",   "RBBB",  "SA",   "SB",    "NSR",  "STach",
        "STD",  "STE",   "STIAb", "TAb",  "TInv",  "VEB",
    };
    return names;
}

std::string_view to_abbrev(Diagnosis d) {
    return diagnosis_abbreviations()[static_cast<std::size_t>(d)];
}

std::optional<Diagnosis> diagnosis_from_abbrev(std::string_view abbrev) {
    const auto& names = diagnosis_abbreviations();
    for (int i = 0; i < kNumDiagnoses; ++i) {
        if (names[static_cast<std::size_t>(i)] == abbrev) return static_cast<Diagnosis>(i);
    }
    return std::nullopt;
}

std::optional<Diagnosis> diagnosis_from_index(int index) {
    if (index < 0 || index >= kNumDiagnoses) return std::nullopt;
    return static_cast<Diagnosis>(index);
}

}  // namespace fedecg
