#pragma once

// Fourier-Stieltjes coefficients of mu,
//
//     mu^(n) = integral over [0,1] of e^{-2 pi i n x} dmu(x),
//
// with certified error bounds, and a block-maxima power-law fit of their decay.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "minkowski/kernels.hpp"
#include "minkowski/measure.hpp"

namespace minkowski {

struct FourierCoefficient {
    std::int64_t n = 0;
    double re = 0.0;
    double im = 0.0;
    double err_bound = 0.0;

    double abs() const { return std::hypot(re, im); }
};

/// One row of a coefficient table. A row whose cell budget ran out still carries
/// the best value computed, with an err_bound above the requested tolerance.
struct CoefficientRow {
    FourierCoefficient coeff;
    bool budget_exhausted = false;
    std::uint64_t cells_used = 0;
};

/// Options for the batched engine.
struct FourierOptions {
    double tol = 1e-6;
    std::uint64_t budget = kDefaultCellBudget;
    /// Kernel variant; nullptr selects the best one for this CPU.
    kernels::PhaseAccumulateFn kernel = nullptr;
};

/// Coefficients for every n in [first, last] (any signs), ordered by n.
///
/// Frequencies are grouped by dyadic block 2^j <= |n| < 2^(j+1). Each block shares one
/// Stern-Brocot partition: every cell whose bound 2^-depth * min(2, pi |n| diam) at the
/// block's largest |n| exceeds a threshold is split, and the threshold is searched so
/// the summed bound meets tol. Nodes sit at cell midpoints. Each row's err_bound is
/// recomputed for its own n and includes floating-point slack. mu^(0) = 1 exactly.
std::vector<CoefficientRow> coeff_range(std::int64_t first, std::int64_t last, const FourierOptions& opts);

/// coeff_range over [n_min, n_max] with 0 <= n_min <= n_max.
std::vector<CoefficientRow> coeff_table(std::int64_t n_min, std::int64_t n_max, double tol,
                                        std::uint64_t budget = kDefaultCellBudget);

/// A single coefficient. Throws BudgetExhausted<FourierCoefficient> if the budget runs out.
FourierCoefficient fourier_coeff(std::int64_t n, double tol, std::uint64_t budget = kDefaultCellBudget);

struct BlockMaximum {
    int j = 0;
    std::int64_t n = 0;  // where the maximum is attained
    double value = 0.0;  // max |mu^(n)| over 2^j <= n < 2^(j+1)
    double err_bound = 0.0;
};

struct DecayEstimate {
    double eta = 0.0;
    double intercept = 0.0;
    std::vector<BlockMaximum> block_maxima;
    double residual = 0.0;  // root-mean-square residual of the log fit
};

/// Ordinary least squares of log M_j against j log 2 for j in [j_min, j_max];
/// eta = -slope. The table must hold every n in [2^j_min, 2^(j_max+1)).
///
/// Throws IllConditionedFit when a block maximum is not above its own error bound.
DecayEstimate fit_decay(std::span<const FourierCoefficient> table, int j_min, int j_max);

}  // namespace minkowski
