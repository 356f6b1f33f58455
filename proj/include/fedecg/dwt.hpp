#pragma once

#include <array>
#include <span>
#include <vector>

namespace fedecg {

inline constexpr int kDwtLevels = 4;

/// Coefficient arrays of the level-4 Daubechies-4 decomposition with
/// symmetric boundary extension, indexed by coefficient number:
/// [0]=cD1 (finest detail) ... [3]=cD4, [4]=cA4 (approximation).
using DwtCoefficients = std::array<std::vector<double>, kDwtLevels + 1>;

/// Minimum input length (full filter support at the deepest level).
inline constexpr std::size_t kDwtMinLength = 64;

/// Throws CapabilityError for inputs shorter than kDwtMinLength.
DwtCoefficients dwt_db4(std::span<const double> x);

/// One analysis step: approximation and detail at half rate.
void dwt_step(std::span<const double> x, std::vector<double>& approx,
              std::vector<double>& detail);

}  // namespace fedecg
