#pragma once

// Compact Stern-Brocot cell used inside the quadrature loops. Endpoints are exact
// 64-bit fractions; the public FareyCell carries GMP rationals and is too heavy
// for tens of millions of cells.

#include <cmath>
#include <cstdint>

#include "minkowski/contfrac.hpp"
#include "minkowski/errors.hpp"

namespace minkowski::detail {

// Denominators stay below 2^53 so every endpoint converts to double without loss
// of the integer parts and q + Q cannot overflow.
inline constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 53;

struct Cell64 {
    std::uint64_t p = 0, q = 1;  // left  = p/q
    std::uint64_t P = 1, Q = 1;  // right = P/Q
    std::uint32_t depth = 0;

    double left() const { return static_cast<double>(p) / static_cast<double>(q); }
    double right() const { return static_cast<double>(P) / static_cast<double>(Q); }
    /// Unimodularity makes the width exactly 1/(qQ).
    double diameter() const { return 1.0 / (static_cast<double>(q) * static_cast<double>(Q)); }
    double mass() const { return std::ldexp(1.0, -static_cast<int>(depth)); }
    double mediant() const { return static_cast<double>(p + P) / static_cast<double>(q + Q); }
    double midpoint() const { return 0.5 * (left() + right()); }

    bool splittable() const { return q + Q < kMaxDenominator; }

    Cell64 left_child() const { return {p, q, p + P, q + Q, depth + 1}; }
    Cell64 right_child() const { return {p + P, q + Q, P, Q, depth + 1}; }

    /// Exact comparison of left endpoints.
    friend bool left_of(const Cell64& a, const Cell64& b) {
        return static_cast<unsigned __int128>(a.p) * b.q < static_cast<unsigned __int128>(b.p) * a.q;
    }

    FareyCell to_farey_cell() const {
        return FareyCell{Rational(mpz_class(static_cast<unsigned long>(p)), mpz_class(static_cast<unsigned long>(q))),
                         Rational(mpz_class(static_cast<unsigned long>(P)), mpz_class(static_cast<unsigned long>(Q))), depth};
    }
};

[[noreturn]] inline void throw_precision_exhausted() {
    throw DomainError("Farey refinement exceeded 53-bit denominators; request a looser tolerance");
}

}  // namespace minkowski::detail
