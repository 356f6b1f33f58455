#pragma once

#include <array>
#include <span>

namespace fedecg {

inline constexpr std::size_t kNumSpectralOps = 11;

/// Statistic battery applied to each coefficient array, in registry order:
/// [p5, p25, p50, p75, p95, mean, std, var, skewness, kurtosis, entropy].
/// Percentiles interpolate linearly between order statistics; moments are
/// population moments; skewness/kurtosis are 0 for constant input; entropy
/// is Shannon entropy (bits) of the energy distribution c_i^2 / sum c_j^2,
/// 0 for all-zero input. Throws CapabilityError on empty input.
std::array<double, kNumSpectralOps> spectral_stats(std::span<const double> values);

/// Linear-interpolation percentile of already sorted data, q in [0, 1].
double percentile_sorted(std::span<const double> sorted, double q);

}  // namespace fedecg
