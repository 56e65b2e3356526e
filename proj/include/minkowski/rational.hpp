#pragma once

// Exact number types shared by every module: arbitrary-precision rationals
// and dyadic rationals k/2^m. Both are thin value wrappers over GMP.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace minkowski {

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p/q" or an integer "p". Throws DomainError on malformed text or q == 0.
    static Rational parse(std::string_view text);
    /// Exact value of a finite double.
    static Rational from_double(double x);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& get() const noexcept { return v_; }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const;  // "p/q", or "p" when q == 1

    bool is_zero() const { return sgn(v_) == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// num / 2^exp with num odd (or num == 0 and exp == 0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(mpz_class num, std::uint64_t exp);

    /// 2^-k.
    static Dyadic pow2(std::int64_t neg_exponent_k);
    /// Parses "k/2^m", "k/q" with q a power of two, or an integer.
    static Dyadic parse(std::string_view text);
    /// Exact value of a finite double.
    static Dyadic from_double(double x);

    const mpz_class& num() const noexcept { return num_; }
    std::uint64_t exp() const noexcept { return exp_; }

    Rational to_rational() const;
    double to_double() const;
    /// "k/2^m" rendered with the power of two written out, e.g. "3/8"; integers as "k".
    std::string to_string() const;

    bool is_zero() const { return sgn(num_) == 0; }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    Dyadic half() const { return Dyadic(num_, exp_ + 1); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.exp_ == b.exp_ && a.num_ == b.num_; }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
    void normalize();

    mpz_class num_{0};
    std::uint64_t exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace minkowski
