#include "fedecg/rpeaks.hpp"

#include <algorithm>
#include <cmath>

#include "fedecg/errors.hpp"

namespace fedecg {
namespace {

// Second-order Butterworth biquad, bilinear transform.
struct Biquad {
    double b0, b1, b2, a1, a2;

    static Biquad lowpass(double fc, double fs) {
        const double k = std::tan(3.141592653589793 * fc / fs);
        const double norm = 1.0 / (1.0 + std::sqrt(2.0) * k + k * k);
        Biquad q;
        q.b0 = k * k * norm;
        q.b1 = 2.0 * q.b0;
        q.b2 = q.b0;
        q.a1 = 2.0 * (k * k - 1.0) * norm;
        q.a2 = (1.0 - std::sqrt(2.0) * k + k * k) * norm;
        return q;
    }

    static Biquad highpass(double fc, double fs) {
        const double k = std::tan(3.141592653589793 * fc / fs);
        const double norm = 1.0 / (1.0 + std::sqrt(2.0) * k + k * k);
        Biquad q;
        q.b0 = norm;
        q.b1 = -2.0 * norm;
        q.b2 = norm;
        q.a1 = 2.0 * (k * k - 1.0) * norm;
        q.a2 = (1.0 - std::sqrt(2.0) * k + k * k) * norm;
        return q;
    }

    std::vector<double> apply(std::span<const double> x) const {
        std::vector<double> y(x.size(), 0.0);
        double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
        for (std::size_t n = 0; n < x.size(); ++n) {
            const double yn = b0 * x[n] + b1 * x1 + b2 * x2 - a1 * y1 - a2 * y2;
            x2 = x1;
            x1 = x[n];
            y2 = y1;
            y1 = yn;
            y[n] = yn;
        }
        return y;
    }
};

}  // namespace

RPeakTrain detect_r_peaks(std::span<const double> channel, double fs) {
    if (!(fs > 0.0)) throw ArgumentError("detect_r_peaks: fs must be > 0");
    const std::size_t n = channel.size();
    if (n < static_cast<std::size_t>(2.0 * fs)) {
        throw CapabilityError("detect_r_peaks: signal shorter than 2 seconds");
    }

    // Band-pass 5-15 Hz.
    const auto hp = Biquad::highpass(5.0, fs).apply(channel);
    const auto bp = Biquad::lowpass(15.0, fs).apply(hp);

    // Five-point derivative, squared.
    std::vector<double> sq(n, 0.0);
    for (std::size_t i = 4; i < n; ++i) {
        const double dv = (2.0 * bp[i] + bp[i - 1] - bp[i - 3] - 2.0 * bp[i - 4]) / 8.0;
        sq[i] = dv * dv;
    }

    // Moving-window integration, 150 ms.
    const std::size_t w = std::max<std::size_t>(1, static_cast<std::size_t>(0.15 * fs));
    std::vector<double> mwi(n, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += sq[i];
        if (i >= w) acc -= sq[i - w];
        mwi[i] = acc / static_cast<double>(w);
    }

    // Candidate peaks: local maxima of the integrated signal.
    std::vector<std::size_t> cand;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (mwi[i] > mwi[i - 1] && mwi[i] >= mwi[i + 1]) cand.push_back(i);
    }

    // Adaptive thresholds seeded from the first two seconds.
    const auto warm = static_cast<std::size_t>(2.0 * fs);
    double peak_max = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < warm; ++i) {
        peak_max = std::max(peak_max, mwi[i]);
        mean += mwi[i];
    }
    mean /= static_cast<double>(warm);
    double spk = 0.5 * peak_max;
    double npk = 0.5 * mean;

    const auto refractory = static_cast<std::size_t>(0.2 * fs);
    std::vector<std::size_t> accepted;  // indices into mwi
    std::vector<double> rr_hist;
    double rr_avg = fs;  // one second until real RR statistics exist

    auto threshold1 = [&] { return npk + 0.25 * (spk - npk); };

    auto accept = [&](std::size_t idx, double weight) {
        if (!accepted.empty()) {
            const double rr = static_cast<double>(idx - accepted.back());
            rr_hist.push_back(rr);
            if (rr_hist.size() > 8) rr_hist.erase(rr_hist.begin());
            double s = 0.0;
            for (double v : rr_hist) s += v;
            rr_avg = s / static_cast<double>(rr_hist.size());
        }
        accepted.push_back(idx);
        spk = weight * mwi[idx] + (1.0 - weight) * spk;
    };

    std::size_t last_noise_scan = 0;
    for (std::size_t ci = 0; ci < cand.size(); ++ci) {
        const std::size_t idx = cand[ci];

        // Searchback when more than 1.66 RR has elapsed without a beat.
        if (!accepted.empty() &&
            static_cast<double>(idx - accepted.back()) > 1.66 * rr_avg) {
            const double t2 = 0.5 * threshold1();
            std::size_t best = 0;
            double best_v = t2;
            for (std::size_t cj = last_noise_scan; cj < ci; ++cj) {
                const std::size_t j = cand[cj];
                if (j <= accepted.back() + refractory) continue;
                if (mwi[j] > best_v) {
                    best_v = mwi[j];
                    best = j;
                }
            }
            if (best != 0) accept(best, 0.25);
        }

        if (!accepted.empty() && idx < accepted.back() + refractory) continue;
        if (mwi[idx] > threshold1()) {
            accept(idx, 0.125);
            last_noise_scan = ci + 1;
        } else {
            npk = 0.125 * mwi[idx] + 0.875 * npk;
        }
    }

    // Refine each detection against the raw channel; the integrator peak
    // trails the R wave by roughly half the window plus filter delay.
    const auto back = static_cast<std::size_t>(0.20 * fs);
    const auto fwd = static_cast<std::size_t>(0.05 * fs);
    std::vector<std::size_t> refined;
    for (std::size_t idx : accepted) {
        const std::size_t lo = idx > back ? idx - back : 0;
        const std::size_t hi = std::min(n - 1, idx + fwd);
        std::size_t arg = lo;
        for (std::size_t i = lo + 1; i <= hi; ++i) {
            if (channel[i] > channel[arg]) arg = i;
        }
        refined.push_back(arg);
    }

    // Deduplicate refinements that collapsed onto the same beat.
    std::sort(refined.begin(), refined.end());
    RPeakTrain train;
    train.fs = fs;
    for (std::size_t idx : refined) {
        if (!train.indices.empty() && idx < train.indices.back() + refractory) {
            if (channel[idx] > channel[train.indices.back()]) train.indices.back() = idx;
            continue;
        }
        train.indices.push_back(idx);
    }
    return train;
}

}  // namespace fedecg
