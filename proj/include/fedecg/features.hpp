#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "fedecg/feature_registry.hpp"
#include "fedecg/matrix.hpp"
#include "fedecg/recording.hpp"
#include "fedecg/rpeaks.hpp"

namespace fedecg {

struct FeatureVector {
    std::string record_id;
    Diagnosis label = Diagnosis::NSR;
    std::vector<double> values;
    bool clean = true;  // false if any sub-computation fell back to the 0 sentinel
};

/// Feature rows for many recordings, aligned with one registry.
struct FeatureTable {
    std::shared_ptr<const FeatureRegistry> registry;
    Matrix values;                  // n x registry->size()
    std::vector<int> labels;        // diagnosis indices
    std::vector<std::string> ids;

    std::size_t size() const { return labels.size(); }
    void append(const FeatureVector& v);
    FeatureTable gather(std::span<const std::size_t> rows) const;
    std::array<std::size_t, kNumDiagnoses> label_histogram() const;
};

/// The 14 baseline features:
/// [age, sex, hr_mean, rr_mean, rr_median, rr_std, rr_min, rr_max,
///  ramp_mean, ramp_median, ramp_std, ramp_min, ramp_max, n_beats].
/// RR statistics are over consecutive peak gaps (seconds); amplitudes are
/// channel values at the peak indices (millivolts). With fewer than two
/// peaks, positions 2-12 are the 0.0 sentinel. Missing age is encoded as
/// kMissingAgeSentinel.
std::array<double, kNumBaselineFeatures> morphological_features(const EcgRecording& rec,
                                                                const RPeakTrain& peaks);

/// Full extraction: R peaks on lead II, the baseline block, then per lead and
/// per DWT coefficient array the 11-statistic battery, ordered exactly like
/// the registry. Non-finite sub-results become 0.0 and clear `clean`.
FeatureVector extract_features(const EcgRecording& rec, const FeatureRegistry& registry);

/// CSV with registry names as the header row plus id/label columns.
void write_feature_csv(const FeatureTable& table, const std::filesystem::path& path);

}  // namespace fedecg
