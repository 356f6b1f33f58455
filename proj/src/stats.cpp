#include "fedecg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fedecg/errors.hpp"

namespace fedecg {

double percentile_sorted(std::span<const double> sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 0) throw CapabilityError("percentile of empty array");
    if (n == 1) return sorted[0];
    const double h = q * static_cast<double>(n - 1);
    const auto j = static_cast<std::size_t>(h);
    if (j + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(j);
    return sorted[j] + frac * (sorted[j + 1] - sorted[j]);
}

std::array<double, kNumSpectralOps> spectral_stats(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) throw CapabilityError("spectral_stats: empty array");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    const double dn = static_cast<double>(n);
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= dn;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= dn;
    m3 /= dn;
    m4 /= dn;

    const double var = m2;
    const double sd = std::sqrt(var);
    double skew = 0.0, kurt = 0.0;
    if (m2 > 0.0) {
        skew = m3 / std::pow(m2, 1.5);
        kurt = m4 / (m2 * m2) - 3.0;
    }

    double energy = 0.0;
    for (double v : values) energy += v * v;
    double entropy = 0.0;
    if (energy > 0.0) {
        for (double v : values) {
            const double p = v * v / energy;
            if (p > 0.0) entropy -= p * std::log2(p);
        }
    }

    return {percentile_sorted(sorted, 0.05), percentile_sorted(sorted, 0.25),
            percentile_sorted(sorted, 0.50), percentile_sorted(sorted, 0.75),
            percentile_sorted(sorted, 0.95), mean,
            sd,                              var,
            skew,                            kurt,
            entropy};
}

}  // namespace fedecg
