#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fedecg/diagnosis.hpp"

namespace fedecg {

inline constexpr std::size_t kNumLeads = 12;

/// Lead order used throughout: I, II, III, aVR, aVL, aVF, V1-V6.
inline constexpr std::size_t kReferenceLead = 1;  // lead II

enum class Sex { Male, Female, Unknown };

std::string_view sex_code(Sex s);                    // "M" / "F" / "U"
std::optional<Sex> sex_from_code(std::string_view);

/// Encoding used when sex enters a feature vector: male 1, female 0, unknown 0.5.
double sex_feature_value(Sex s);

/// One 12-lead ECG recording with a single diagnosis label.
struct EcgRecording {
    std::string id;
    std::array<std::vector<double>, kNumLeads> channels;  // millivolts
    double fs = 0.0;                                      // Hz
    std::optional<double> age;                            // years, may be missing
    Sex sex = Sex::Unknown;
    Diagnosis label = Diagnosis::NSR;

    std::size_t length() const { return channels[0].size(); }

    /// Throws SchemaError unless: 12 equal-length channels with d >= 1,
    /// fs > 0, and all samples finite.
    void validate() const;
};

struct Dataset {
    std::vector<EcgRecording> recordings;
    std::string provenance;

    std::size_t size() const { return recordings.size(); }

    /// Throws SchemaError on duplicate ids or any invalid recording.
    void validate() const;

    /// Per-class counts indexed by diagnosis index.
    std::array<std::size_t, kNumDiagnoses> label_histogram() const;
};

}  // namespace fedecg
