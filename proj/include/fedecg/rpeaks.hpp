#pragma once

#include <span>
#include <vector>

namespace fedecg {

/// Detected R peaks on one channel. Indices are strictly increasing and lie
/// within [0, d).
struct RPeakTrain {
    std::vector<std::size_t> indices;
    double fs = 0.0;
};

/// Pan-Tompkins style detector: 5-15 Hz band-pass, derivative, squaring,
/// 150 ms moving-window integration, adaptive thresholding with a 200 ms
/// refractory period and RR-driven searchback. Peak positions are refined
/// against the raw channel. Requires at least 2 seconds of signal.
RPeakTrain detect_r_peaks(std::span<const double> channel, double fs);

}  // namespace fedecg
