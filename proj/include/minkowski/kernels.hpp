#pragma once

// Inner loop of the Fourier quadrature: for a batch of nodes x_i with weights w_i
// and a run of consecutive frequencies n0, n0+1, ..., n0+K-1,
//
//     re[k] += sum_i w_i cos(2 pi (n0+k) x_i)
//     im[k] -= sum_i w_i sin(2 pi (n0+k) x_i)          (i.e. += w e^{-2 pi i n x})
//
// Every variant walks k by complex rotation z <- z * e^{-2 pi i x}, reseeding z
// from sincos every kReseedInterval steps, so all variants agree to rounding.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace minkowski::kernels {

inline constexpr int kReseedInterval = 1024;
/// rounding_slack assumes each call sees at most this many nodes and zeroed accumulators.
inline constexpr std::size_t kMaxBatch = 2048;

using PhaseAccumulateFn = void (*)(std::span<const double> x, std::span<const double> w, std::int64_t n0,
                                   std::span<double> re, std::span<double> im);

/// Portable reference: one cell at a time.
void phase_accumulate_scalar(std::span<const double> x, std::span<const double> w, std::int64_t n0,
                             std::span<double> re, std::span<double> im);

#if defined(__x86_64__) || defined(_M_X64)
/// Four cells per lane group; needs AVX2 and FMA at run time.
void phase_accumulate_avx2(std::span<const double> x, std::span<const double> w, std::int64_t n0,
                           std::span<double> re, std::span<double> im);
/// Eight cells per lane group; needs AVX-512F at run time.
void phase_accumulate_avx512(std::span<const double> x, std::span<const double> w, std::int64_t n0,
                             std::span<double> re, std::span<double> im);
#endif

enum class Isa { scalar, avx2, avx512 };

std::string_view to_string(Isa isa);
/// Best variant the running CPU supports.
Isa detect_isa();
bool isa_available(Isa isa);
/// Throws DomainError if `isa` is not available on this CPU.
PhaseAccumulateFn select(Isa isa);
PhaseAccumulateFn best();

/// Bound on the floating-point error one unit of weight can add to a coefficient
/// at |n| = n_abs: node rounding, seeding, rotation drift and accumulation.
double rounding_slack(std::uint64_t n_abs);

/// e^{-2 pi i n x} with n*x reduced mod 1 before scaling; (cos, -sin).
struct UnitPhase {
    double re;
    double im;
};
UnitPhase unit_phase(std::int64_t n, double x);

}  // namespace minkowski::kernels
