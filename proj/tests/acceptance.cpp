// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "minkowski/contfrac.hpp"
#include "minkowski/fourier.hpp"
#include "minkowski/measure.hpp"
#include "minkowski/qmark.hpp"
#include "oracles.hpp"

using namespace minkowski;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_seconds) {
        v.ok = false;
        v.detail += "; over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit";
    }
    if (!v.ok) ++failures;
    std::printf("%s %d %s (%s; %.1f s)\n", v.ok ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs);
    std::fflush(stdout);
}

Rational frac(std::pair<long, long> pq) { return Rational(mpz_class(pq.first), mpz_class(pq.second)); }

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

}  // namespace

int main() {
    const auto fractions = oracle::reduced_fractions(500);

    criterion(1, "qmark equals the mediant-average oracle for q <= 500", 60, [&] {
        const auto oracle_values = oracle::mediant_average_values(500);
        std::size_t bad = 0;
        for (const auto& pq : fractions) {
            const auto it = oracle_values.find(pq);
            if (it == oracle_values.end() || !(qmark_exact(frac(pq)) == it->second)) ++bad;
        }
        return Verdict{bad == 0 && oracle_values.size() == fractions.size(),
                       std::to_string(fractions.size()) + " rationals, " + std::to_string(bad) + " mismatches"};
    });

    criterion(2, "functional equations hold exactly for q <= 500", 60, [&] {
        const Dyadic one(mpz_class(1), 0);
        std::size_t bad = 0;
        for (const auto& pq : fractions) {
            const Rational x = frac(pq);
            const Dyadic v = qmark_exact(x);
            if (!(qmark_exact(Rational(1) - x) == one - v)) ++bad;
            if (!(qmark_exact(x / (Rational(1) + x)) == v.half())) ++bad;
        }
        return Verdict{bad == 0, std::to_string(2 * fractions.size()) + " identities, " + std::to_string(bad) + " failures"};
    });

    criterion(3, "box and qmark round trips are exact", 60, [&] {
        std::size_t bad = 0, checked = 0;
        for (const auto& pq : fractions) {
            ++checked;
            if (!(box_exact(qmark_exact(frac(pq))) == frac(pq))) ++bad;
        }
        const std::uint64_t max_exp = 20;
        for (long k = 0; k <= (1L << max_exp); ++k) {
            ++checked;
            const Dyadic y(mpz_class(k), max_exp);  // covers every dyadic with exp <= 20
            if (!(qmark_exact(box_exact(y)) == y)) ++bad;
        }
        return Verdict{bad == 0, std::to_string(checked) + " points, " + std::to_string(bad) + " failures"};
    });

    criterion(4, "Gauss cylinders [k] have mass 2^-k and Farey cells 2^-depth", 60, [&] {
        std::size_t bad = 0;
        for (std::uint64_t k = 1; k <= 30; ++k) {
            const auto cyl = gauss_cylinder(CFWord{k});
            const Dyadic expect(mpz_class(1), k);
            if (!(cyl.mass == expect) || !(mu_interval(cyl.left, cyl.right) == expect)) ++bad;
        }
        std::mt19937_64 rng(20261018);
        const int descents = 1000;
        for (int t = 0; t < descents; ++t) {
            FareyCell c = FareyCell::root();
            const auto depth = rng() % 21;
            for (std::uint64_t d = 0; d < depth; ++d) {
                const auto [l, r] = farey_split(c);
                c = (rng() & 1u) ? l : r;
            }
            const Dyadic expect(mpz_class(1), depth);
            if (c.depth != depth || !(c.mass() == expect) || !(mu_interval(c.left, c.right) == expect)) ++bad;
        }
        return Verdict{bad == 0, "30 cylinders, " + std::to_string(descents) + " random cells, " + std::to_string(bad) + " failures"};
    });

    criterion(5, "mu^(0) = 1 and coefficients are real and even for |n| <= 1024 at tol 1e-4", 300, [&] {
        const auto rows = coeff_range(-1024, 1024, FourierOptions{1e-4, 200'000'000});
        bool ok = rows.size() == 2049;
        const auto& zero = rows[1024].coeff;
        ok = ok && zero.n == 0 && zero.re == 1.0 && zero.im == 0.0 && zero.err_bound == 0.0;
        std::size_t bad = 0;
        double worst_im = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& c = rows[i].coeff;
            const auto& m = rows[rows.size() - 1 - i].coeff;
            if (rows[i].budget_exhausted || c.err_bound > 1e-4) ++bad;
            if (std::abs(c.im) > 2.0 * c.err_bound) ++bad;
            if (std::hypot(c.re - m.re, c.im - m.im) > c.err_bound + m.err_bound) ++bad;
            if (c.err_bound > 0) worst_im = std::max(worst_im, std::abs(c.im) / c.err_bound);
        }
        return Verdict{ok && bad == 0, std::to_string(bad) + " failures, max |Im|/err " + fmt("%.3g", worst_im)};
    });

    criterion(6, "Kinney dimension is consistent and lies in [0.85476, 1]", 60, [&] {
        const auto a = kinney_dimension(1e-4);
        const auto b = kinney_dimension(1e-6);
        const bool agree = std::abs(a.dim - b.dim) <= a.err_bound + b.err_bound;
        bool in = true;
        for (const auto& d : {a, b}) in = in && d.dim >= 0.85476 && d.dim <= 1.0 && d.dim > 0.5;
        return Verdict{agree && in, "dim " + fmt("%.9f", b.dim) + " +- " + fmt("%.2g", b.err_bound) + " (tol 1e-6), " +
                                        fmt("%.9f", a.dim) + " +- " + fmt("%.2g", a.err_bound) + " (tol 1e-4)"};
    });

    criterion(7, "block-maxima fit over j in [4, 12] has eta > 0 and M_12 < M_4", 900, [&] {
        const auto rows = coeff_table(1, 8191, 1e-4, 200'000'000);
        std::vector<FourierCoefficient> table;
        std::size_t short_rows = 0;
        for (const auto& r : rows) {
            table.push_back(r.coeff);
            short_rows += r.budget_exhausted ? 1 : 0;
        }
        const auto est = fit_decay(table, 4, 12);
        const auto& m4 = est.block_maxima.front();
        const auto& m12 = est.block_maxima.back();
        const bool ok = short_rows == 0 && est.eta > 0.0 && m12.value < m4.value;
        return Verdict{ok, "eta " + fmt("%.4f", est.eta) + ", M_4 " + fmt("%.4g", m4.value) + ", M_12 " +
                               fmt("%.4g", m12.value) + ", residual " + fmt("%.3g", est.residual)};
    });

    criterion(8, "sampler matches ? and pushes forward to Lebesgue (KS < 0.01)", 120, [&] {
        auto xs = sample_mu(1729, 100'000, 1e-9);
        std::sort(xs.begin(), xs.end());
        const double n = static_cast<double>(xs.size());
        double ks_mu = 0.0;
        std::vector<double> ys;
        ys.reserve(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double f = qmark_approx(xs[i], 1e-12).value;
            ks_mu = std::max({ks_mu, std::abs(f - i / n), std::abs(f - (i + 1) / n)});
            ys.push_back(f);
        }
        std::sort(ys.begin(), ys.end());
        double ks_leb = 0.0;
        for (std::size_t i = 0; i < ys.size(); ++i) ks_leb = std::max({ks_leb, std::abs(ys[i] - i / n), std::abs(ys[i] - (i + 1) / n)});
        return Verdict{ks_mu < 0.01 && ks_leb < 0.01, "KS vs ? " + fmt("%.5f", ks_mu) + ", KS of ?(X) vs uniform " + fmt("%.5f", ks_leb)};
    });

    criterion(9, "mu is Gauss-map invariant to within 2^-40", 60, [&] {
        const int K = 40;
        const auto small = oracle::reduced_fractions(100);
        std::mt19937_64 rng(9);
        std::size_t bad = 0;
        for (int t = 0; t < 20; ++t) {
            const Rational x = frac(small[rng() % small.size()]);
            Dyadic sum;
            for (int k = 1; k <= K; ++k) sum = sum + (qmark_exact(Rational(1) / Rational(k)) - qmark_exact(Rational(1) / (Rational(k) + x)));
            const Dyadic gap = qmark_exact(x) - sum;
            const Dyadic limit(mpz_class(1), K);
            if (limit < gap || gap < Dyadic{} - limit) ++bad;
        }
        return Verdict{bad == 0, "20 rationals, " + std::to_string(bad) + " outside 2^-40"};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
