#pragma once

#include "fedecg/recording.hpp"

namespace fedecg {

/// Linear resampling onto a uniform grid of length round(d * target_fs / fs).
/// A no-op when target_fs equals fs.
EcgRecording resample(const EcgRecording& rec, double target_fs);

/// Truncate (keep prefix) or zero-pad (suffix) every channel to exactly
/// round(seconds * fs) samples.
EcgRecording fix_length(const EcgRecording& rec, double seconds);

}  // namespace fedecg
