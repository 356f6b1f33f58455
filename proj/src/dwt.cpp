#include "fedecg/dwt.hpp"

#include "fedecg/errors.hpp"

namespace fedecg {
namespace {

constexpr int kTaps = 8;

// Daubechies-4 analysis low-pass (orthonormal, sums to sqrt(2)).
constexpr double kDecLo[kTaps] = {
    -0.010597401784997278, 0.032883011666982945, 0.030841381835986965,
    -0.18703481171888114,  -0.027983769416983849, 0.63088076792959036,
    0.71484657055254153,   0.23037781330885523,
};

// Quadrature mirror: hi[m] = (-1)^m lo[kTaps-1-m].
constexpr double kDecHi[kTaps] = {
    0.23037781330885523,  -0.71484657055254153, 0.63088076792959036,
    0.027983769416983849, -0.18703481171888114, -0.030841381835986965,
    0.032883011666982945, 0.010597401784997278,
};

// Half-sample symmetric extension: ..., x1, x0 | x0, x1, ..., x_{n-1} | x_{n-1}, ...
double sym_at(std::span<const double> x, long long i) {
    const auto n = static_cast<long long>(x.size());
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return x[static_cast<std::size_t>(i)];
}

}  // namespace

void dwt_step(std::span<const double> x, std::vector<double>& approx,
              std::vector<double>& detail) {
    const auto n = static_cast<long long>(x.size());
    const auto out_len = static_cast<std::size_t>((n + kTaps - 1) / 2);
    approx.assign(out_len, 0.0);
    detail.assign(out_len, 0.0);
    for (std::size_t k = 0; k < out_len; ++k) {
        double a = 0.0, d = 0.0;
        const long long base = 2 * static_cast<long long>(k) + 1;
        for (int m = 0; m < kTaps; ++m) {
            const double v = sym_at(x, base - m);
            a += kDecLo[m] * v;
            d += kDecHi[m] * v;
        }
        approx[k] = a;
        detail[k] = d;
    }
}

DwtCoefficients dwt_db4(std::span<const double> x) {
    if (x.size() < kDwtMinLength) {
        throw CapabilityError("dwt_db4: input shorter than " +
                              std::to_string(kDwtMinLength) + " samples");
    }
    DwtCoefficients out;
    std::vector<double> current(x.begin(), x.end());
    for (int level = 0; level < kDwtLevels; ++level) {
        std::vector<double> approx, detail;
        dwt_step(current, approx, detail);
        out[static_cast<std::size_t>(level)] = std::move(detail);  // cD(level+1)
        current = std::move(approx);
    }
    out[kDwtLevels] = std::move(current);  // cA4
    return out;
}

}  // namespace fedecg
