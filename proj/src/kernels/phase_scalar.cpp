#include <cmath>
#include <numbers>

#include "minkowski/kernels.hpp"

namespace minkowski::kernels {

UnitPhase unit_phase(std::int64_t n, double x) {
    const double nd = static_cast<double>(n);
    const double t = nd * x;
    const double residual = std::fma(nd, x, -t);  // exact: n*x = t + residual
    double frac = (t - std::floor(t)) + residual;
    frac -= std::round(frac);  // [-1/2, 1/2]
    const double theta = 2.0 * std::numbers::pi * frac;
    return {std::cos(theta), -std::sin(theta)};
}

void phase_accumulate_scalar(std::span<const double> x, std::span<const double> w, std::int64_t n0,
                             std::span<double> re, std::span<double> im) {
    const std::size_t count = re.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const UnitPhase step = unit_phase(1, x[i]);
        double zr = 0.0, zi = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            if (k % kReseedInterval == 0) {
                const UnitPhase seed = unit_phase(n0 + static_cast<std::int64_t>(k), x[i]);
                zr = w[i] * seed.re;
                zi = w[i] * seed.im;
            }
            re[k] += zr;
            im[k] += zi;
            const double nr = zr * step.re - zi * step.im;
            zi = zr * step.im + zi * step.re;
            zr = nr;
        }
    }
}

double rounding_slack(std::uint64_t n_abs) {
    constexpr double eps = 0x1p-53;
    // Node rounding (4 eps in x, scaled by 2 pi n), seeding, rotation drift over a
    // reseed interval, and naive accumulation over one batch.
    const double node = 8.0 * std::numbers::pi * static_cast<double>(n_abs);
    const double seed = 20.0;
    const double drift = 20.0 * kReseedInterval;
    const double accumulate = static_cast<double>(kMaxBatch) + 16.0;
    return eps * (node + seed + drift + accumulate);
}

}  // namespace minkowski::kernels
