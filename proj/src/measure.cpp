#include "minkowski/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "compensated_sum.hpp"
#include "farey64.hpp"
#include "minkowski/errors.hpp"
#include "minkowski/qmark.hpp"

namespace minkowski {

namespace {

using detail::Cell64;
using detail::CompensatedSum;

struct PoolEntry {
    Cell64 cell;
    double bound;
    double contribution;
};

// Largest bound on top; among equal bounds the leftmost cell.
struct WorseFirst {
    bool operator()(const PoolEntry& a, const PoolEntry& b) const {
        if (a.bound != b.bound) return a.bound < b.bound;
        return left_of(b.cell, a.cell);
    }
};

PoolEntry make_entry(const Integrand& f, const Cell64& c) {
    const double mass = c.mass();
    double variation = f.lipschitz * c.diameter();
    if (f.oscillation) variation = std::min(variation, f.oscillation(c.left(), c.right()));
    return PoolEntry{c, mass * variation, f.eval(c.mediant()) * mass};
}

QuadratureResult summarize(const std::vector<PoolEntry>& pool) {
    CompensatedSum value, bound;
    for (const auto& e : pool) {
        value.add(e.contribution);
        bound.add(e.bound);
    }
    return QuadratureResult{value.value(), bound.value(), pool.size()};
}

void require_tol(double tol, const char* who) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError(std::string(who) + ": tol must be positive and finite");
}

}  // namespace

Dyadic mu_interval(const Rational& a, const Rational& b) {
    if (b < a) throw DomainError("mu_interval: need a <= b, got " + a.to_string() + " > " + b.to_string());
    return qmark_exact(b) - qmark_exact(a);
}

QuadratureResult integrate_mu(const Integrand& f, double tol, std::uint64_t budget) {
    require_tol(tol, "integrate_mu");
    if (!f.eval) throw DomainError("integrate_mu: integrand has no evaluator");
    if (!(f.lipschitz >= 0.0) || !std::isfinite(f.lipschitz))
        throw DomainError("integrate_mu: Lipschitz bound must be finite and nonnegative");
    if (budget < 1) throw DomainError("integrate_mu: budget must allow at least one cell");

    std::priority_queue<PoolEntry, std::vector<PoolEntry>, WorseFirst> pool;
    CompensatedSum total;
    {
        auto root = make_entry(f, Cell64{});
        total.add(root.bound);
        pool.push(root);
    }

    // Drains the queue into its backing vector to report; the queue is unusable afterwards.
    auto finish = [&pool]() {
        std::vector<PoolEntry> cells;
        cells.reserve(pool.size());
        while (!pool.empty()) {
            cells.push_back(pool.top());
            pool.pop();
        }
        // Summation order fixed by position, so results are reproducible.
        std::sort(cells.begin(), cells.end(), [](const PoolEntry& a, const PoolEntry& b) { return left_of(a.cell, b.cell); });
        return summarize(cells);
    };

    while (total.value() > tol) {
        if (pool.size() + 1 > budget) {
            const auto partial = finish();
            throw BudgetExhausted<QuadratureResult>(
                "integrate_mu: cell budget of " + std::to_string(budget) + " exhausted at error bound " +
                    std::to_string(partial.err_bound),
                partial);
        }
        const PoolEntry worst = pool.top();
        if (!worst.cell.splittable()) detail::throw_precision_exhausted();
        pool.pop();
        const auto l = make_entry(f, worst.cell.left_child());
        const auto r = make_entry(f, worst.cell.right_child());
        total.add(-worst.bound);
        total.add(l.bound);
        total.add(r.bound);
        pool.push(l);
        pool.push(r);
    }
    return finish();
}

Integrand kinney_integrand() {
    Integrand f;
    f.eval = [](double x) { return std::log2(1.0 + x); };
    f.lipschitz = 1.0 / std::numbers::ln2;
    // Increasing, so the oscillation on [a,b] is f(b) - f(a); pad for rounding in log2.
    f.oscillation = [](double a, double b) { return (std::log2(1.0 + b) - std::log2(1.0 + a)) * (1.0 + 1e-12) + 1e-300; };
    return f;
}

DimensionEstimate kinney_dimension(double tol, std::uint64_t budget) {
    require_tol(tol, "kinney_dimension");
    const auto integral = integrate_mu(kinney_integrand(), tol, budget);
    const double i = integral.value, e = integral.err_bound;
    if (!(i - e > 0.0)) throw DomainError("kinney_dimension: integral not bracketed away from zero");
    // 1/(2x) over [i - e, i + e] stays within e / (2 i (i - e)) of 1/(2i).
    return DimensionEstimate{1.0 / (2.0 * i), e / (2.0 * i * (i - e)), integral};
}

bool MuSampler::coin() {
    if (bits_left_ == 0) {
        bits_ = engine_();
        bits_left_ = 64;
    }
    const bool heads = (bits_ & 1u) != 0;
    bits_ >>= 1;
    --bits_left_;
    return heads;
}

std::uint64_t MuSampler::digit() {
    std::uint64_t k = 1;
    while (!coin()) ++k;
    return k;
}

CFWord MuSampler::word(double mass_tol) {
    if (!(mass_tol > 0.0 && mass_tol < 1.0)) throw DomainError("sample_mu: mass_tol must lie in (0,1)");
    std::vector<std::uint64_t> digits;
    std::uint64_t sum = 0;
    // Stop once 2^-sum < mass_tol.
    while (sum <= 1100 && std::ldexp(1.0, -static_cast<int>(sum)) >= mass_tol) {
        digits.push_back(digit());
        sum += digits.back();
    }
    return CFWord(std::move(digits));
}

std::vector<double> sample_mu(std::uint64_t seed, std::size_t count, double mass_tol) {
    MuSampler sampler(seed);
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next(mass_tol));
    return out;
}

Rational gauss_map(const Rational& x) {
    if (x < Rational(0) || !(x < Rational(1))) throw DomainError("gauss_map: argument must lie in [0,1), got " + x.to_string());
    if (x.is_zero()) return Rational(0);
    const Rational inv = Rational(1) / x;
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), inv.num().get_mpz_t(), inv.den().get_mpz_t());
    return inv - Rational(k, mpz_class(1));
}

}  // namespace minkowski
