#include "minkowski/qmark.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "minkowski/errors.hpp"

namespace minkowski {

namespace {

constexpr double kHalfUlpOfOne = 0x1p-53;

void require_unit(const Rational& x, const char* who) {
    if (x < Rational(0) || x > Rational(1))
        throw DomainError(std::string(who) + ": argument must lie in [0,1], got " + x.to_string());
}

void require_tol(double tol, const char* who) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError(std::string(who) + ": tol must be positive and finite");
}

void require_unit(double x, const char* who) {
    if (!std::isfinite(x)) throw DomainError(std::string(who) + ": argument must be finite");
    if (x < 0.0 || x > 1.0) throw DomainError(std::string(who) + ": argument must lie in [0,1]");
}

// Rounding to double truncates toward zero, so a value in [0,1] moves by < 2^-53.
ApproxReal rounded(const Dyadic& v, double bound, double tol) {
    return ApproxReal{v.to_double(), std::max(tol, bound + kHalfUlpOfOne)};
}

}  // namespace

Dyadic salem_sum(const CFWord& w) {
    if (w.empty()) return Dyadic{};
    // acc_k = acc_{k-1} * 2^{a_k} + (-1)^{k-1}; the sum is acc_n / 2^{s_n - 1}.
    mpz_class acc = 0;
    bool positive = true;
    for (auto a : w.digits()) {
        mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), a);
        if (positive)
            acc += 1;
        else
            acc -= 1;
        positive = !positive;
    }
    return Dyadic(acc, w.digit_sum() - 1);
}

Dyadic qmark_exact(const Rational& x) {
    require_unit(x, "qmark_exact");
    return salem_sum(cf_from_rational(x));
}

ApproxReal qmark_approx(const Rational& x, double tol) {
    require_tol(tol, "qmark_approx");
    return rounded(qmark_exact(x), 0.0, tol);
}

ApproxReal qmark_approx(double x, double tol) {
    require_tol(tol, "qmark_approx");
    require_unit(x, "qmark_approx");
    if (x == 0.0) return {0.0, tol};

    const Rational r = Rational::from_double(x);
    mpz_class a = r.den(), b = r.num();
    std::vector<std::uint64_t> digits;
    std::uint64_t sum = 0;
    while (sgn(b) != 0) {
        mpz_class quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        // Every term from this digit on is at most 2^(1 - sum - quot), which bounds the
        // whole alternating tail. Past 2^-1074 nothing is representable, so stop there.
        if (quot >= 1100 - sum) return rounded(salem_sum(CFWord(std::move(digits))), std::ldexp(1.0, -1074), tol);
        const auto q = quot.get_ui();
        if (std::ldexp(1.0, 1 - static_cast<int>(sum + q)) < tol)
            return rounded(salem_sum(CFWord(std::move(digits))), std::ldexp(1.0, 1 - static_cast<int>(sum + q)), tol);
        digits.push_back(q);
        sum += q;
        a = b;
        b = rem;
    }
    return rounded(salem_sum(CFWord(std::move(digits))), 0.0, tol);
}

Rational box_exact(const Dyadic& y) {
    if (y < Dyadic{} || y > Dyadic(mpz_class(1), 0)) throw DomainError("box_exact: argument must lie in [0,1], got " + y.to_string());
    if (y.is_zero()) return Rational(0);
    if (y.exp() == 0) return Rational(1);

    // Bits b_1..b_e of y after the binary point, most significant first.
    const auto e = y.exp();
    const mpz_srcptr n = y.num().get_mpz_t();
    auto bit = [&](std::uint64_t i) { return mpz_tstbit(n, e - i) != 0; };

    std::vector<std::uint64_t> digits;
    std::uint64_t i = 1;
    std::uint64_t zeros = 0;
    while (!bit(i)) {
        ++zeros;
        ++i;
    }
    digits.push_back(zeros + 1);
    bool current = true;
    std::uint64_t run = 0;
    for (; i <= e; ++i) {
        if (bit(i) == current) {
            ++run;
        } else {
            digits.push_back(run);
            current = !current;
            run = 1;
        }
    }
    digits.push_back(run);
    return rational_from_cf(CFWord(std::move(digits)));
}

ApproxReal box_approx(double y, double tol) {
    require_tol(tol, "box_approx");
    require_unit(y, "box_approx");
    const Dyadic d = Dyadic::from_double(y);
    if (d.is_zero() || d.exp() == 0) return {y, tol};

    const auto e = d.exp();
    const mpz_srcptr n = d.num().get_mpz_t();
    auto bit = [&](std::uint64_t i) { return mpz_tstbit(n, e - i) != 0; };

    // Convergent state for the closed digits.
    mpz_class p_prev = 1, q_prev = 0, p = 0, q = 1;
    auto close_digit = [&](std::uint64_t a) {
        mpz_class pn = mpz_class(a) * p + p_prev, qn = mpz_class(a) * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
    };
    // Cylinder of the closed prefix has width 1/(q (q + q_prev)).
    auto narrow_enough = [&]() {
        const mpz_class qq = q * (q + q_prev);
        return mpz_sizeinbase(qq.get_mpz_t(), 2) > 1100 || 1.0 / qq.get_d() < tol;
    };
    auto midpoint = [&]() {
        const Rational a(p, q), b(p + p_prev, q + q_prev);
        return ApproxReal{((a + b) / Rational(2)).to_double(), std::max(tol, 2 * kHalfUlpOfOne)};
    };

    std::uint64_t i = 1, zeros = 0;
    while (!bit(i)) {
        ++zeros;
        ++i;
    }
    close_digit(zeros + 1);
    bool current = true;
    std::uint64_t run = 0;
    for (; i <= e; ++i) {
        if (bit(i) == current) {
            ++run;
            continue;
        }
        close_digit(run);
        if (narrow_enough()) return midpoint();
        current = !current;
        run = 1;
    }
    close_digit(run);
    return ApproxReal{Rational(p, q).to_double(), std::max(tol, kHalfUlpOfOne)};
}

}  // namespace minkowski
