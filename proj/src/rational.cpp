#include "minkowski/rational.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "minkowski/errors.hpp"

namespace minkowski {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_text(s)) throw DomainError("malformed integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Dyadic::Dyadic(mpz_class num, std::uint64_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }

void Dyadic::normalize() {
    if (sgn(num_) == 0) {
        exp_ = 0;
        return;
    }
    const auto tz = mpz_scan1(num_.get_mpz_t(), 0);
    const auto shift = std::min<std::uint64_t>(tz, exp_);
    if (shift > 0) {
        mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
        exp_ -= shift;
    }
}

Dyadic Dyadic::pow2(std::int64_t neg_exponent_k) {
    if (neg_exponent_k >= 0) return Dyadic(mpz_class(1), static_cast<std::uint64_t>(neg_exponent_k));
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), 2, static_cast<unsigned long>(-neg_exponent_k));
    return Dyadic(n, 0);
}

Dyadic Dyadic::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Dyadic(parse_integer(text), 0);
    const mpz_class num = parse_integer(text.substr(0, slash));
    std::string_view den = text.substr(slash + 1);
    if (den.starts_with("2^")) {
        den.remove_prefix(2);
        const mpz_class m = parse_integer(den);
        if (sgn(m) < 0 || !m.fits_ulong_p()) throw DomainError("bad dyadic exponent in '" + std::string(text) + "'");
        return Dyadic(num, m.get_ui());
    }
    const mpz_class q = parse_integer(den);
    if (sgn(q) <= 0 || mpz_popcount(q.get_mpz_t()) != 1)
        throw DomainError("denominator is not a power of two in '" + std::string(text) + "'");
    return Dyadic(num, mpz_scan1(q.get_mpz_t(), 0));
}

Dyadic Dyadic::from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value has no dyadic form");
    int e = 0;
    const double m = std::frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
    const double mant = std::ldexp(m, 53);
    mpz_class n;
    mpz_set_d(n.get_mpz_t(), mant);
    const long shift = 53L - e;  // x = n * 2^-shift
    if (shift <= 0) {
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(-shift));
        return Dyadic(n, 0);
    }
    return Dyadic(n, static_cast<std::uint64_t>(shift));
}

Rational Dyadic::to_rational() const {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
    return Rational(num_, den);
}

double Dyadic::to_double() const {
    // Truncates toward zero: within one ulp of the exact value.
    return to_rational().to_double();
}

std::string Dyadic::to_string() const {
    if (exp_ == 0) return num_.get_str();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
    return num_.get_str() + "/" + den.get_str();
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const auto e = std::max(a.exp_, b.exp_);
    mpz_class x = a.num_, y = b.num_;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), e - a.exp_);
    mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), e - b.exp_);
    return Dyadic(x + y, e);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int s = sgn((a - b).num_);
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

}  // namespace minkowski
