#include "fedecg/feature_registry.hpp"

#include <charconv>

#include "fedecg/errors.hpp"

namespace fedecg {
namespace {

constexpr std::array<std::string_view, kNumBaselineFeatures> kBaselineNames = {
    "age",      "sex",        "hr_mean",  "rr_mean",  "rr_median",
    "rr_std",   "rr_min",     "rr_max",   "ramp_mean", "ramp_median",
    "ramp_std", "ramp_min",   "ramp_max", "n_beats",
};

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

const std::array<std::string_view, 11>& FeatureRegistry::operation_names() {
    static const std::array<std::string_view, 11> ops = {
        "n5", "n25", "n50", "n75", "n95", "mean", "std", "var", "skew", "kurt", "entropy",
    };
    return ops;
}

std::string FeatureRegistry::spectral_name(int lead, int coeff, std::string_view op) {
    std::string name = "l" + std::to_string(lead) + "_c_";
    if (coeff == 0) {
        name += "sig";
    } else {
        name += "c" + std::to_string(coeff);
    }
    name += "_";
    name += op;
    return name;
}

std::optional<SpectralName> FeatureRegistry::parse_spectral(std::string_view name) {
    if (name.size() < 2 || name[0] != 'l') return std::nullopt;
    const std::size_t p1 = name.find("_c_");
    if (p1 == std::string_view::npos) return std::nullopt;

    SpectralName out;
    if (!parse_int(name.substr(1, p1 - 1), out.lead)) return std::nullopt;
    if (out.lead < 0 || out.lead > 11) return std::nullopt;

    std::string_view rest = name.substr(p1 + 3);
    const std::size_t p2 = rest.find('_');
    if (p2 == std::string_view::npos) return std::nullopt;
    const std::string_view coeff_tok = rest.substr(0, p2);
    if (coeff_tok == "sig") {
        out.coeff = 0;
    } else {
        if (coeff_tok.size() < 2 || coeff_tok[0] != 'c') return std::nullopt;
        if (!parse_int(coeff_tok.substr(1), out.coeff)) return std::nullopt;
        if (out.coeff < 1 || out.coeff > 5) return std::nullopt;
    }

    const std::string_view op_tok = rest.substr(p2 + 1);
    for (const auto& op : operation_names()) {
        if (op == op_tok) {
            out.op = std::string(op_tok);
            return out;
        }
    }
    return std::nullopt;
}

FeatureRegistry FeatureRegistry::standard(bool include_signal_stats) {
    FeatureRegistry reg;
    reg.signal_stats_ = include_signal_stats;
    std::size_t idx = 0;

    for (std::size_t i = 0; i < kNumBaselineFeatures; ++i) {
        RegistryEntry e;
        e.index = idx++;
        e.name = std::string(kBaselineNames[i]);
        e.kind = (i < 2) ? FeatureKind::Demographic : FeatureKind::Morphological;
        if (e.name == "age") {
            e.has_missing_sentinel = true;
            e.missing_sentinel = kMissingAgeSentinel;
        }
        reg.entries_.push_back(std::move(e));
    }

    for (int lead = 0; lead < 12; ++lead) {
        for (int coeff = 1; coeff <= 5; ++coeff) {
            for (const auto& op : operation_names()) {
                RegistryEntry e;
                e.index = idx++;
                e.name = spectral_name(lead, coeff, op);
                e.kind = FeatureKind::Spectral;
                reg.entries_.push_back(std::move(e));
            }
        }
        if (include_signal_stats) {
            for (const auto& op : operation_names()) {
                RegistryEntry e;
                e.index = idx++;
                e.name = spectral_name(lead, 0, op);
                e.kind = FeatureKind::Spectral;
                reg.entries_.push_back(std::move(e));
            }
        }
    }
    return reg;
}

FeatureRegistry FeatureRegistry::subset(const std::vector<std::size_t>& indices) const {
    FeatureRegistry reg;
    reg.signal_stats_ = signal_stats_;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= entries_.size()) {
            throw ArgumentError("registry subset: index out of range");
        }
        RegistryEntry e = entries_[indices[i]];
        e.index = i;
        reg.entries_.push_back(std::move(e));
    }
    return reg;
}

std::optional<std::size_t> FeatureRegistry::find(std::string_view name) const {
    for (const auto& e : entries_) {
        if (e.name == name) return e.index;
    }
    return std::nullopt;
}

}  // namespace fedecg
