#include "fedecg/recording.hpp"

#include <cmath>
#include <unordered_set>

#include "fedecg/errors.hpp"

namespace fedecg {

std::string_view sex_code(Sex s) {
    switch (s) {
        case Sex::Male: return "M";
        case Sex::Female: return "F";
        default: return "U";
    }
}

std::optional<Sex> sex_from_code(std::string_view c) {
    if (c == "M") return Sex::Male;
    if (c == "F") return Sex::Female;
    if (c == "U") return Sex::Unknown;
    return std::nullopt;
}

double sex_feature_value(Sex s) {
    switch (s) {
        case Sex::Male: return 1.0;
        case Sex::Female: return 0.0;
        default: return 0.5;
    }
}

void EcgRecording::validate() const {
    if (!(fs > 0.0)) throw SchemaError("recording " + id + ": fs must be > 0");
    const std::size_t d = channels[0].size();
    if (d < 1) throw SchemaError("recording " + id + ": empty channels");
    for (std::size_t c = 0; c < kNumLeads; ++c) {
        if (channels[c].size() != d) {
            throw SchemaError("recording " + id + ": channel length mismatch");
        }
        for (double v : channels[c]) {
            if (!std::isfinite(v)) {
                throw SchemaError("recording " + id + ": non-finite sample");
            }
        }
    }
    if (age && !(std::isfinite(*age))) {
        throw SchemaError("recording " + id + ": non-finite age");
    }
}

void Dataset::validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& rec : recordings) {
        rec.validate();
        if (!seen.insert(rec.id).second) {
            throw SchemaError("dataset: duplicate id " + rec.id);
        }
    }
}

std::array<std::size_t, kNumDiagnoses> Dataset::label_histogram() const {
    std::array<std::size_t, kNumDiagnoses> h{};
    for (const auto& rec : recordings) h[static_cast<std::size_t>(rec.label)]++;
    return h;
}

}  // namespace fedecg
