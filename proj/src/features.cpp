#include "fedecg/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "fedecg/dwt.hpp"
#include "fedecg/errors.hpp"
#include "fedecg/stats.hpp"

namespace fedecg {
namespace {

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return percentile_sorted(v, 0.5);
}

double std_of(std::span<const double> v, double mean) {
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(v.size()));
}

}  // namespace

std::array<double, kNumBaselineFeatures> morphological_features(const EcgRecording& rec,
                                                                const RPeakTrain& peaks) {
    std::array<double, kNumBaselineFeatures> f{};
    f[0] = rec.age ? *rec.age : kMissingAgeSentinel;
    f[1] = sex_feature_value(rec.sex);
    f[13] = static_cast<double>(peaks.indices.size());

    if (peaks.indices.size() < 2) return f;  // RR/amplitude sentinels stay 0

    std::vector<double> rr;
    for (std::size_t i = 0; i + 1 < peaks.indices.size(); ++i) {
        rr.push_back(static_cast<double>(peaks.indices[i + 1] - peaks.indices[i]) / peaks.fs);
    }
    std::vector<double> amp;
    const auto& ch = rec.channels[kReferenceLead];
    for (std::size_t idx : peaks.indices) amp.push_back(ch[idx]);

    const double rr_mean = mean_of(rr);
    f[2] = rr_mean > 0 ? 60.0 / rr_mean : 0.0;
    f[3] = rr_mean;
    f[4] = median_of(rr);
    f[5] = std_of(rr, rr_mean);
    f[6] = *std::min_element(rr.begin(), rr.end());
    f[7] = *std::max_element(rr.begin(), rr.end());

    const double amp_mean = mean_of(amp);
    f[8] = amp_mean;
    f[9] = median_of(amp);
    f[10] = std_of(amp, amp_mean);
    f[11] = *std::min_element(amp.begin(), amp.end());
    f[12] = *std::max_element(amp.begin(), amp.end());
    return f;
}

FeatureVector extract_features(const EcgRecording& rec, const FeatureRegistry& registry) {
    FeatureVector out;
    out.record_id = rec.id;
    out.label = rec.label;
    out.values.assign(registry.size(), 0.0);

    RPeakTrain peaks;
    peaks.fs = rec.fs;
    try {
        peaks = detect_r_peaks(rec.channels[kReferenceLead], rec.fs);
    } catch (const CapabilityError&) {
        out.clean = false;  // too short for detection; RR block stays sentinel
    }

    const auto baseline = morphological_features(rec, peaks);

    // Spectral battery per lead. Coefficient slot 0 is reserved for raw
    // signal statistics when the registry includes them.
    const std::size_t per_lead = 5 + (registry.includes_signal_stats() ? 1 : 0);
    std::vector<std::array<double, kNumSpectralOps>> lead_stats(12 * per_lead);
    for (std::size_t lead = 0; lead < kNumLeads; ++lead) {
        DwtCoefficients coeffs;
        bool have_coeffs = true;
        try {
            coeffs = dwt_db4(rec.channels[lead]);
        } catch (const CapabilityError&) {
            have_coeffs = false;
            out.clean = false;
        }
        for (std::size_t c = 0; c < 5; ++c) {
            auto& slot = lead_stats[lead * per_lead + c];
            slot.fill(0.0);
            if (have_coeffs && !coeffs[c].empty()) slot = spectral_stats(coeffs[c]);
        }
        if (registry.includes_signal_stats()) {
            auto& slot = lead_stats[lead * per_lead + 5];
            slot.fill(0.0);
            if (!rec.channels[lead].empty()) slot = spectral_stats(rec.channels[lead]);
        }
    }

    static const std::array<std::string_view, kNumBaselineFeatures> kBaselineOrder = {
        "age",      "sex",      "hr_mean",  "rr_mean",   "rr_median",
        "rr_std",   "rr_min",   "rr_max",   "ramp_mean", "ramp_median",
        "ramp_std", "ramp_min", "ramp_max", "n_beats",
    };

    const auto& ops = FeatureRegistry::operation_names();
    for (const auto& e : registry.entries()) {
        double v = 0.0;
        if (e.kind != FeatureKind::Spectral) {
            for (std::size_t i = 0; i < kNumBaselineFeatures; ++i) {
                if (e.name == kBaselineOrder[i]) {
                    v = baseline[i];
                    break;
                }
            }
        } else {
            const auto parsed = FeatureRegistry::parse_spectral(e.name);
            if (parsed) {
                const std::size_t c = parsed->coeff == 0 ? 5 : static_cast<std::size_t>(parsed->coeff - 1);
                std::size_t op_idx = 0;
                for (std::size_t i = 0; i < ops.size(); ++i) {
                    if (ops[i] == parsed->op) op_idx = i;
                }
                v = lead_stats[static_cast<std::size_t>(parsed->lead) * per_lead + c][op_idx];
            }
        }
        if (!std::isfinite(v)) {
            v = 0.0;
            out.clean = false;
        }
        out.values[e.index] = v;
    }
    return out;
}

void FeatureTable::append(const FeatureVector& v) {
    if (!registry || v.values.size() != registry->size()) {
        throw SchemaError("feature table: vector/registry size mismatch");
    }
    if (values.empty()) values = Matrix(0, registry->size());
    values.append_row(v.values);
    labels.push_back(diagnosis_index(v.label));
    ids.push_back(v.record_id);
}

FeatureTable FeatureTable::gather(std::span<const std::size_t> rows) const {
    FeatureTable out;
    out.registry = registry;
    out.values = values.gather_rows(rows);
    for (std::size_t r : rows) {
        out.labels.push_back(labels[r]);
        out.ids.push_back(ids[r]);
    }
    return out;
}

std::array<std::size_t, kNumDiagnoses> FeatureTable::label_histogram() const {
    std::array<std::size_t, kNumDiagnoses> h{};
    for (int l : labels) h[static_cast<std::size_t>(l)]++;
    return h;
}

void write_feature_csv(const FeatureTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "id,label";
    for (const auto& e : table.registry->entries()) out << ',' << e.name;
    out << '\n';
    char buf[32];
    for (std::size_t r = 0; r < table.size(); ++r) {
        out << table.ids[r] << ','
            << to_abbrev(static_cast<Diagnosis>(table.labels[r]));
        for (std::size_t c = 0; c < table.values.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", table.values(r, c));
            out << ',' << buf;
        }
        out << '\n';
    }
}

}  // namespace fedecg
