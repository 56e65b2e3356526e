#pragma once

// Minkowski's question mark function and its inverse (Conway's box function).
//
//   ?([0; a_1, a_2, ...]) = sum_k (-1)^(k-1) 2^(1 - (a_1 + ... + a_k))
//
// Exact on rationals (the sum is finite and lands on a dyadic), truncated with
// the alternating-series tail bound on doubles.

#include "minkowski/contfrac.hpp"
#include "minkowski/rational.hpp"

namespace minkowski {

/// A double together with a guaranteed absolute error bound.
struct ApproxReal {
    double value = 0.0;
    double tol = 0.0;
};

/// The alternating binary sum over a word, canonical or not. Empty word -> 0.
Dyadic salem_sum(const CFWord& w);

/// ?(x) for rational x in [0,1]; exp() of the result equals digit_sum - 1.
Dyadic qmark_exact(const Rational& x);

/// ?(x) truncated once the next term is below tol. The double is taken at its exact
/// binary value. The returned tol is the requested one unless rounding to double
/// forces a larger guarantee (tol below ~1e-16).
ApproxReal qmark_approx(double x, double tol);
/// Rational input: exact evaluation, then rounded.
ApproxReal qmark_approx(const Rational& x, double tol);

/// Inverse of ? on dyadics via run lengths of the terminating binary expansion.
Rational box_exact(const Dyadic& y);

/// Inverse of ? on a double: decodes binary runs into digits until the enclosing
/// cylinder is narrower than tol, then returns its midpoint.
ApproxReal box_approx(double y, double tol);

}  // namespace minkowski
