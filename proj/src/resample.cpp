#include "fedecg/resample.hpp"

#include <cmath>

#include "fedecg/errors.hpp"

namespace fedecg {

EcgRecording resample(const EcgRecording& rec, double target_fs) {
    if (!(target_fs > 0.0)) throw ArgumentError("resample: target_fs must be > 0");
    if (target_fs == rec.fs) return rec;

    const std::size_t d = rec.length();
    const auto d_out = static_cast<std::size_t>(
        std::llround(static_cast<double>(d) * target_fs / rec.fs));

    EcgRecording out = rec;
    out.fs = target_fs;
    const double step = rec.fs / target_fs;  // input samples per output sample
    for (std::size_t c = 0; c < kNumLeads; ++c) {
        const auto& x = rec.channels[c];
        std::vector<double> y(d_out);
        for (std::size_t j = 0; j < d_out; ++j) {
            double p = static_cast<double>(j) * step;
            if (p >= static_cast<double>(d - 1)) {
                y[j] = x[d - 1];
                continue;
            }
            const auto i0 = static_cast<std::size_t>(p);
            const double w = p - static_cast<double>(i0);
            y[j] = (1.0 - w) * x[i0] + w * x[i0 + 1];
        }
        out.channels[c] = std::move(y);
    }
    return out;
}

EcgRecording fix_length(const EcgRecording& rec, double seconds) {
    if (!(seconds > 0.0)) throw ArgumentError("fix_length: seconds must be > 0");
    const auto d_out = static_cast<std::size_t>(std::llround(seconds * rec.fs));

    EcgRecording out = rec;
    for (std::size_t c = 0; c < kNumLeads; ++c) {
        out.channels[c].resize(d_out, 0.0);
    }
    return out;
}

}  // namespace fedecg
