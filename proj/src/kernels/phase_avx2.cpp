// Compiled with -mavx2 -mfma; only reached through select() after a CPU check.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "minkowski/kernels.hpp"

namespace minkowski::kernels {

namespace {

constexpr std::size_t kLanes = 4;
// Frequencies per tile; their accumulators stay in registers while the tile
// sweeps every cell. Must divide kReseedInterval.
constexpr std::size_t kTile = 4;
static_assert(kReseedInterval % kTile == 0);

// Rotation state for one batch, lane-interleaved: cell i lives at [i / 4][i % 4].
struct alignas(32) Lane4 {
    double v[kLanes];
};

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v), hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void phase_accumulate_avx2(std::span<const double> x, std::span<const double> w, std::int64_t n0,
                           std::span<double> re, std::span<double> im) {
    const std::size_t count = re.size();
    const std::size_t groups = x.size() / kLanes;
    const std::size_t full = groups * kLanes;
    if (groups > 0) {
        thread_local std::vector<Lane4> zr, zi, sr, si;
        zr.resize(groups);
        zi.resize(groups);
        sr.resize(groups);
        si.resize(groups);
        for (std::size_t i = 0; i < full; ++i) {
            const UnitPhase s = unit_phase(1, x[i]);
            sr[i / kLanes].v[i % kLanes] = s.re;
            si[i / kLanes].v[i % kLanes] = s.im;
        }

        for (std::size_t k0 = 0; k0 < count; k0 += kTile) {
            if (k0 % kReseedInterval == 0) {
                for (std::size_t i = 0; i < full; ++i) {
                    const UnitPhase s = unit_phase(n0 + static_cast<std::int64_t>(k0), x[i]);
                    zr[i / kLanes].v[i % kLanes] = w[i] * s.re;
                    zi[i / kLanes].v[i % kLanes] = w[i] * s.im;
                }
            }
            __m256d ar[kTile], ai[kTile];
            for (std::size_t t = 0; t < kTile; ++t) ar[t] = ai[t] = _mm256_setzero_pd();

            for (std::size_t g = 0; g < groups; ++g) {
                __m256d cr = _mm256_load_pd(zr[g].v), ci = _mm256_load_pd(zi[g].v);
                const __m256d rr = _mm256_load_pd(sr[g].v), ri = _mm256_load_pd(si[g].v);
                for (std::size_t t = 0; t < kTile; ++t) {
                    ar[t] = _mm256_add_pd(ar[t], cr);
                    ai[t] = _mm256_add_pd(ai[t], ci);
                    const __m256d nr = _mm256_fmsub_pd(cr, rr, _mm256_mul_pd(ci, ri));
                    ci = _mm256_fmadd_pd(cr, ri, _mm256_mul_pd(ci, rr));
                    cr = nr;
                }
                _mm256_store_pd(zr[g].v, cr);
                _mm256_store_pd(zi[g].v, ci);
            }

            const std::size_t live = std::min(kTile, count - k0);
            for (std::size_t t = 0; t < live; ++t) {
                re[k0 + t] += hsum(ar[t]);
                im[k0 + t] += hsum(ai[t]);
            }
        }
    }
    if (full < x.size()) phase_accumulate_scalar(x.subspan(full), w.subspan(full), n0, re, im);
}

}  // namespace minkowski::kernels
