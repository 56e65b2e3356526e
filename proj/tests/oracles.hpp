#pragma once

// Independent reference computations used only by the tests. None of these call
// into the code paths they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "minkowski/rational.hpp"

namespace oracle {

using minkowski::Dyadic;
using minkowski::Rational;

/// Every reduced p/q in [0,1] with q <= max_den, ascending.
inline std::vector<std::pair<long, long>> reduced_fractions(long max_den) {
    std::vector<std::pair<long, long>> out;
    for (long q = 1; q <= max_den; ++q)
        for (long p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.first * b.second < b.first * a.second; });
    return out;
}

/// ? on every fraction with denominator <= max_den, from ?(0) = 0, ?(1) = 1 and
/// ?(mediant) = (?(left) + ?(right)) / 2 down the Stern-Brocot tree. Exact dyadics
/// as (numerator, exponent) built with plain GMP integers.
inline std::map<std::pair<long, long>, Dyadic> mediant_average_values(long max_den) {
    std::map<std::pair<long, long>, Dyadic> out;
    out[{0, 1}] = Dyadic{};
    out[{1, 1}] = Dyadic(mpz_class(1), 0);
    struct Frame {
        long p, q, P, Q;
        Dyadic lv, rv;
    };
    std::vector<Frame> stack{{0, 1, 1, 1, Dyadic{}, Dyadic(mpz_class(1), 0)}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const long mp = f.p + f.P, mq = f.q + f.Q;
        if (mq > max_den) continue;
        // Average by hand: (a/2^i + b/2^j) / 2 over a common exponent.
        const auto e = std::max(f.lv.exp(), f.rv.exp());
        mpz_class a = f.lv.num(), b = f.rv.num();
        mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), e - f.lv.exp());
        mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), e - f.rv.exp());
        Dyadic mv(a + b, e + 1);
        out[{mp, mq}] = mv;
        stack.push_back({f.p, f.q, mp, mq, f.lv, mv});
        stack.push_back({mp, mq, f.P, f.Q, mv, f.rv});
    }
    return out;
}

/// Direct sum of w_i e^{-2 pi i n x_i} with long-double sincos per term.
inline std::complex<double> direct_phase_sum(std::span<const double> x, std::span<const double> w, std::int64_t n) {
    long double re = 0.0L, im = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double t = static_cast<long double>(n) * static_cast<long double>(x[i]);
        const long double frac = t - std::floor(t);
        const long double theta = 2.0L * std::numbers::pi_v<long double> * frac;
        re += static_cast<long double>(w[i]) * std::cos(theta);
        im -= static_cast<long double>(w[i]) * std::sin(theta);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

/// Riemann-Stieltjes sum for mu^(n) on the uniform grid i/M with nodes at cell
/// midpoints, given exact interval masses. Error at most pi |n| / M.
inline std::complex<double> uniform_grid_fourier(std::int64_t n, long cells,
                                                 const std::function<double(long)>& cdf_at_grid_index) {
    long double re = 0.0L, im = 0.0L;
    double prev = cdf_at_grid_index(0);
    for (long i = 0; i < cells; ++i) {
        const double next = cdf_at_grid_index(i + 1);
        const long double mass = static_cast<long double>(next) - static_cast<long double>(prev);
        const long double x = (static_cast<long double>(i) + 0.5L) / static_cast<long double>(cells);
        const long double t = static_cast<long double>(n) * x;
        const long double theta = 2.0L * std::numbers::pi_v<long double> * (t - std::floor(t));
        re += mass * std::cos(theta);
        im -= mass * std::sin(theta);
        prev = next;
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace oracle
