#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fedecg {

enum class FeatureKind { Morphological, Demographic, Spectral };

/// Morphological/demographic block, in vector order.
inline constexpr std::size_t kNumBaselineFeatures = 14;

/// Sentinel stored for a missing age before normalization maps it to the
/// federation-wide median.
inline constexpr double kMissingAgeSentinel = -1.0;

/// Component parts of a canonical spectral feature name
/// `l<lead>_c_c<coeff>_<operation>`. coeff 1-5 maps to [cD1..cD4, cA4];
/// coeff 0 denotes the original signal ("sig").
struct SpectralName {
    int lead = 0;   // 0-11
    int coeff = 0;  // 1-5, or 0 for "sig"
    std::string op;

    bool operator==(const SpectralName&) const = default;
};

struct RegistryEntry {
    std::size_t index = 0;
    std::string name;
    FeatureKind kind = FeatureKind::Spectral;
    bool has_missing_sentinel = false;
    double missing_sentinel = 0.0;
};

/// Ordered feature schema. The standard registry is the 14 baseline features
/// followed, per lead 0-11 and coefficient c1-c5, by the 11-operation
/// spectral battery (674 features total). Statistics over the raw signal
/// ("sig") can be switched on, adding 12*11 more.
class FeatureRegistry {
public:
    static FeatureRegistry standard(bool include_signal_stats = false);

    /// Registry with the given subset, reindexed contiguously from 0.
    FeatureRegistry subset(const std::vector<std::size_t>& indices) const;

    std::size_t size() const { return entries_.size(); }
    const std::vector<RegistryEntry>& entries() const { return entries_; }
    const RegistryEntry& entry(std::size_t i) const { return entries_[i]; }
    std::optional<std::size_t> find(std::string_view name) const;

    bool includes_signal_stats() const { return signal_stats_; }

    static const std::array<std::string_view, 11>& operation_names();
    static std::string spectral_name(int lead, int coeff, std::string_view op);
    static std::optional<SpectralName> parse_spectral(std::string_view name);

private:
    std::vector<RegistryEntry> entries_;
    bool signal_stats_ = false;
};

}  // namespace fedecg
