#pragma once

// The Stieltjes measure mu = d? on [0,1]: exact interval masses, certified
// quadrature over Stern-Brocot cells, the Kinney dimension integral, sampling
// from the Bernoulli digit law, and the Gauss map.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "minkowski/contfrac.hpp"
#include "minkowski/rational.hpp"

namespace minkowski {

inline constexpr std::uint64_t kDefaultCellBudget = 10'000'000;

struct QuadratureResult {
    double value = 0.0;
    double err_bound = 0.0;
    std::uint64_t cells_used = 0;
};

/// A function on [0,1] together with what the quadrature needs to bound its variation.
struct Integrand {
    std::function<double(double)> eval;
    /// |eval(a) - eval(b)| <= lipschitz * |a - b| on [0,1].
    double lipschitz = 0.0;
    /// Optional: bound on sup - inf of eval over [a, b]. Used as a cap when tighter.
    std::function<double(double, double)> oscillation;
};

struct DimensionEstimate {
    double dim = 0.0;
    double err_bound = 0.0;
    QuadratureResult integral;
};

/// mu((a, b]) = ?(b) - ?(a), exact.
Dyadic mu_interval(const Rational& a, const Rational& b);

/// Worst-first Farey refinement from the root cell. Each leaf contributes
/// f(mediant) * 2^-depth with error bound 2^-depth * min(L * diam, oscillation).
/// The bound covers the measure side only; errors in evaluating f are not tracked.
///
/// Throws BudgetExhausted<QuadratureResult> when the pool would exceed `budget` cells.
QuadratureResult integrate_mu(const Integrand& f, double tol, std::uint64_t budget = kDefaultCellBudget);

/// log2(1 + x) with Lipschitz constant 1/ln 2 and its exact monotone oscillation.
Integrand kinney_integrand();

/// dim = 1 / (2 * integral of log2(1+x) dmu), with the integral's bound propagated.
DimensionEstimate kinney_dimension(double tol, std::uint64_t budget = kDefaultCellBudget);

/// Draws points from mu by sampling i.i.d. digits with P(a = k) = 2^-k.
///
/// Digits come from counting failures of fair coin flips taken from the bits of a
/// 64-bit Mersenne twister, so a seed fixes the stream on every platform.
class MuSampler {
public:
    explicit MuSampler(std::uint64_t seed) : engine_(seed) {}

    /// One geometric digit.
    std::uint64_t digit();
    /// Digits until the cylinder mass 2^-(sum) drops below mass_tol.
    CFWord word(double mass_tol);
    /// The rational p_n/q_n addressed by word(mass_tol).
    Rational rational(double mass_tol) { return rational_from_cf(word(mass_tol)); }
    double next(double mass_tol) { return rational(mass_tol).to_double(); }

private:
    bool coin();

    std::mt19937_64 engine_;
    std::uint64_t bits_ = 0;
    int bits_left_ = 0;
};

/// `count` samples from a fresh sampler seeded with `seed`.
std::vector<double> sample_mu(std::uint64_t seed, std::size_t count, double mass_tol);

/// G(x) = 1/x mod 1 on [0,1); G(0) = 0.
Rational gauss_map(const Rational& x);

}  // namespace minkowski
