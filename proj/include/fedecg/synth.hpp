#pragma once

#include <cstdint>
#include <vector>

#include "fedecg/recording.hpp"

namespace fedecg {

/// Rhythm/morphology parameters for the synthetic generator. Profiles for
/// the supported diagnosis classes come from make_profile; tests may build
/// custom profiles (e.g. to sweep heart rate).
struct SynthProfile {
    double rr_mean = 1.0;       // seconds
    double rr_jitter = 0.03;    // fractional uniform jitter, +/-
    bool irregular = false;     // AF-style: RR ~ U(rr_lo, rr_hi)
    double rr_lo = 0.45;
    double rr_hi = 0.95;
    double premature_prob = 0;  // chance a beat arrives early (narrow, PAC-like)
    double ectopic_prob = 0;    // chance of a wide high-amplitude beat (VEB-like)
    bool p_wave = true;
    double fibrillatory_amp = 0;  // AF baseline wavelet, millivolts
};

/// Ground truth emitted with every synthetic recording.
struct SynthTruth {
    std::vector<std::size_t> r_peaks;   // sample indices, ascending
    std::vector<double> rr_intervals;   // seconds, consecutive beat gaps
    double mean_hr_bpm = 0.0;
};

struct SynthRecording {
    EcgRecording recording;
    SynthTruth truth;
};

/// Classes the generator supports: NSR, SB, STach, AF, PAC, VEB.
bool synth_supports(Diagnosis cls);

/// Profile for a supported class; throws CapabilityError otherwise.
SynthProfile make_profile(Diagnosis cls);

/// Deterministic for a fixed (profile-defining) tuple. The beat schedule is
/// drawn in continuous time, so the rhythm realization for a given seed does
/// not depend on fs.
SynthRecording synth_generate(Diagnosis cls, std::uint64_t seed, double fs, double seconds);

/// Same engine with an explicit profile (label is attached unchanged).
SynthRecording synth_generate_profile(const SynthProfile& profile, Diagnosis label,
                                      std::uint64_t seed, double fs, double seconds);

}  // namespace fedecg
