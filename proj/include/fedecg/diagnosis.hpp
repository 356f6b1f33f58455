#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace fedecg {

inline constexpr int kNumDiagnoses = 27;

/// The 27 arrhythmia diagnosis codes. Enumerator order defines the class
/// index (0-26) used everywhere: labels, confusion matrices, model outputs.
enum class Diagnosis : int {
    IAVB = 0,  // 1st degree AV block
    abQRS,     // Abnormal QRS
    AF,        // Atrial fibrillation
    LAE,       // Left atrial enlargement
    LAD,       // Left axis deviation
    LBBB,      // Left bundle branch block
    LVH,       // Left ventricular hypertrophy
    LQRSV,     // Low QRS voltages
    MI,        // Myocardial infarction
    MIs,       // Myocardial ischemia
    NSSTTA,    // Nonspecific ST-T abnormality
    OldMI,     // Old myocardial infarction
    PR,        // Pacing rhythm
    PAC,       // Premature atrial contraction
    LQT,       // Prolonged QT interval
    QAb,       // Q wave abnormal
    RBBB,      // Right bundle branch block
    SA,        // Sinus arrhythmia
    SB,        // Sinus bradycardia
    NSR,       // Sinus rhythm
    STach,     // Sinus tachycardia
    STD,       // ST depression
    STE,       // ST elevation
    STIAb,     // ST interval abnormal
    TAb,       // T wave abnormal
    TInv,      // T wave inversion
    VEB,       // Ventricular ectopics
};

const std::array<std::string_view, kNumDiagnoses>& diagnosis_abbreviations();

std::string_view to_abbrev(Diagnosis d);
std::optional<Diagnosis> diagnosis_from_abbrev(std::string_view abbrev);

inline int diagnosis_index(Diagnosis d) { return static_cast<int>(d); }
std::optional<Diagnosis> diagnosis_from_index(int index);

}  // namespace fedecg
