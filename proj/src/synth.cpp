#include "fedecg/synth.hpp"

#include <cmath>

#include "fedecg/errors.hpp"
#include "fedecg/rng.hpp"

namespace fedecg {
namespace {

struct Wave {
    double amp;     // millivolts on the reference lead
    double center;  // seconds relative to the R peak
    double sigma;   // seconds
};

// Reference-lead morphology of one cardiac cycle.
constexpr Wave kP{0.12, -0.16, 0.020};
constexpr Wave kQ{-0.08, -0.026, 0.008};
constexpr Wave kR{1.00, 0.0, 0.011};
constexpr Wave kS{-0.18, 0.028, 0.009};
constexpr Wave kT{0.32, 0.22, 0.050};

// Projection gains per lead: I, II, III, aVR, aVL, aVF, V1-V6.
constexpr double kLeadGain[kNumLeads] = {0.60, 1.00, 0.45, -0.75, 0.25, 0.70,
                                         -0.50, -0.25, 0.35, 0.85, 0.80, 0.65};

struct Beat {
    double t = 0.0;           // R-peak time, seconds
    double width_scale = 1.0; // QRS sigma multiplier
    double amp_scale = 1.0;   // QRS amplitude multiplier
    bool p_present = true;
    double t_sign = 1.0;      // T-wave polarity
};

void add_wave(std::vector<double>& x, double fs, double center, double amp, double sigma) {
    const double lo = center - 4.0 * sigma;
    const double hi = center + 4.0 * sigma;
    auto first = static_cast<long long>(std::ceil(lo * fs));
    auto last = static_cast<long long>(std::floor(hi * fs));
    if (first < 0) first = 0;
    if (last >= static_cast<long long>(x.size())) last = static_cast<long long>(x.size()) - 1;
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    for (long long s = first; s <= last; ++s) {
        const double dt = static_cast<double>(s) / fs - center;
        x[static_cast<std::size_t>(s)] += amp * std::exp(-dt * dt * inv2s2);
    }
}

}  // namespace

bool synth_supports(Diagnosis cls) {
    switch (cls) {
        case Diagnosis::NSR:
        case Diagnosis::SB:
        case Diagnosis::STach:
        case Diagnosis::AF:
        case Diagnosis::PAC:
        case Diagnosis::VEB:
            return true;
        default:
            return false;
    }
}

SynthProfile make_profile(Diagnosis cls) {
    SynthProfile p;
    switch (cls) {
        case Diagnosis::NSR:
            p.rr_mean = 1.0;  // 60 bpm
            p.rr_jitter = 0.03;
            break;
        case Diagnosis::SB:
            p.rr_mean = 60.0 / 45.0;  // 45 bpm
            p.rr_jitter = 0.03;
            break;
        case Diagnosis::STach:
            p.rr_mean = 0.5;  // 120 bpm
            p.rr_jitter = 0.03;
            break;
        case Diagnosis::AF:
            p.irregular = true;
            p.rr_lo = 0.45;
            p.rr_hi = 0.95;
            p.p_wave = false;
            p.fibrillatory_amp = 0.05;
            break;
        case Diagnosis::PAC:
            p.rr_mean = 60.0 / 70.0;
            p.rr_jitter = 0.02;
            p.premature_prob = 0.18;
            break;
        case Diagnosis::VEB:
            p.rr_mean = 60.0 / 70.0;
            p.rr_jitter = 0.02;
            p.ectopic_prob = 0.18;
            break;
        default:
            throw CapabilityError("synth_generate: unsupported class " +
                                  std::string(to_abbrev(cls)));
    }
    return p;
}

SynthRecording synth_generate(Diagnosis cls, std::uint64_t seed, double fs, double seconds) {
    return synth_generate_profile(make_profile(cls), cls, seed, fs, seconds);
}

SynthRecording synth_generate_profile(const SynthProfile& profile, Diagnosis label,
                                      std::uint64_t seed, double fs, double seconds) {
    if (!(fs > 0.0) || !(seconds > 0.0)) {
        throw ArgumentError("synth_generate: fs and seconds must be > 0");
    }
    Rng rng(seed_mix(0x5EC6u, static_cast<std::uint64_t>(diagnosis_index(label)), seed));

    // Beat schedule in continuous time.
    std::vector<Beat> beats;
    double t = 0.25 + 0.10 * rng.uniform();
    bool pending_pause = false;
    while (t < seconds + 0.5) {
        Beat b;
        b.t = t;
        double rr;
        if (profile.irregular) {
            rr = rng.uniform(profile.rr_lo, profile.rr_hi);
        } else {
            rr = profile.rr_mean * (1.0 + profile.rr_jitter * rng.uniform(-1.0, 1.0));
        }
        if (pending_pause) {
            rr *= 1.2;  // compensatory pause after an early/ectopic beat
            pending_pause = false;
        }
        if (profile.premature_prob > 0 && rng.uniform() < profile.premature_prob) {
            rr *= 0.6;
            pending_pause = true;
        }
        if (profile.ectopic_prob > 0 && rng.uniform() < profile.ectopic_prob) {
            b.width_scale = 2.5;
            b.amp_scale = 1.7;
            b.p_present = false;
            b.t_sign = -1.0;
            pending_pause = true;
        }
        b.p_present = b.p_present && profile.p_wave;
        beats.push_back(b);
        t += rr;
    }

    const auto d = static_cast<std::size_t>(std::llround(seconds * fs));
    const double rec_scale = 0.9 + 0.2 * rng.uniform();

    // Reference-lead waveform; projected onto all 12 leads below.
    std::vector<double> ref(d, 0.0);
    for (const Beat& b : beats) {
        if (b.p_present) add_wave(ref, fs, b.t + kP.center, rec_scale * kP.amp, kP.sigma);
        add_wave(ref, fs, b.t + kQ.center * b.width_scale, rec_scale * kQ.amp * b.amp_scale,
                 kQ.sigma * b.width_scale);
        add_wave(ref, fs, b.t, rec_scale * kR.amp * b.amp_scale, kR.sigma * b.width_scale);
        add_wave(ref, fs, b.t + kS.center * b.width_scale, rec_scale * kS.amp * b.amp_scale,
                 kS.sigma * b.width_scale);
        add_wave(ref, fs, b.t + kT.center, rec_scale * kT.amp * b.t_sign, kT.sigma);
    }
    if (profile.fibrillatory_amp > 0) {
        const double phase = rng.uniform(0.0, 6.283185307179586);
        for (std::size_t s = 0; s < d; ++s) {
            const double ts = static_cast<double>(s) / fs;
            ref[s] += profile.fibrillatory_amp *
                      std::sin(6.283185307179586 * 6.5 * ts + phase);
        }
    }

    EcgRecording rec;
    rec.fs = fs;
    rec.label = label;
    rec.age = 35.0 + static_cast<double>(rng.uniform_index(46));
    rec.sex = (rng.next_u64() & 1u) ? Sex::Male : Sex::Female;

    const double wander_f = 0.25, wander_amp = 0.03;
    const double wander_phase = rng.uniform(0.0, 6.283185307179586);
    for (std::size_t lead = 0; lead < kNumLeads; ++lead) {
        auto& ch = rec.channels[lead];
        ch.resize(d);
        for (std::size_t s = 0; s < d; ++s) {
            const double ts = static_cast<double>(s) / fs;
            ch[s] = kLeadGain[lead] * ref[s] +
                    wander_amp * std::sin(6.283185307179586 * wander_f * ts + wander_phase) +
                    0.008 * rng.normal();
        }
    }

    SynthTruth truth;
    for (const Beat& b : beats) {
        const auto idx = static_cast<long long>(std::llround(b.t * fs));
        if (idx >= 0 && idx < static_cast<long long>(d)) {
            truth.r_peaks.push_back(static_cast<std::size_t>(idx));
        }
    }
    for (std::size_t i = 0; i + 1 < beats.size(); ++i) {
        if (beats[i + 1].t < seconds) {
            truth.rr_intervals.push_back(beats[i + 1].t - beats[i].t);
        }
    }
    if (!truth.rr_intervals.empty()) {
        double mean_rr = 0.0;
        for (double rr : truth.rr_intervals) mean_rr += rr;
        mean_rr /= static_cast<double>(truth.rr_intervals.size());
        truth.mean_hr_bpm = 60.0 / mean_rr;
    }

    return SynthRecording{std::move(rec), std::move(truth)};
}

}  // namespace fedecg
