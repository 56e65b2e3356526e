#include "minkowski/contfrac.hpp"

#include <numeric>

#include "minkowski/errors.hpp"

namespace minkowski {

CFWord::CFWord(std::vector<std::uint64_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_)
        if (d < 1) throw DomainError("continued-fraction digits must be >= 1");
}

std::uint64_t CFWord::digit_sum() const noexcept {
    return std::accumulate(digits_.begin(), digits_.end(), std::uint64_t{0});
}

bool CFWord::is_canonical() const noexcept {
    if (digits_.empty()) return true;
    if (digits_.size() == 1) return true;  // [1] is x = 1
    return digits_.back() >= 2;
}

CFWord CFWord::canonical() const {
    if (is_canonical()) return *this;
    auto d = digits_;
    d.pop_back();
    d.back() += 1;
    return CFWord(std::move(d));
}

CFWord CFWord::appended(std::uint64_t digit) const {
    auto d = digits_;
    d.push_back(digit);
    return CFWord(std::move(d));
}

CFWord CFWord::tail() const {
    if (digits_.empty()) return {};
    return CFWord(std::vector<std::uint64_t>(digits_.begin() + 1, digits_.end()));
}

Rational FareyCell::mediant() const {
    return Rational(left.num() + right.num(), left.den() + right.den());
}

mpz_class FareyCell::determinant() const { return right.num() * left.den() - left.num() * right.den(); }

FareyCell Cylinder::as_farey_cell() const {
    return FareyCell{left, right, mass.exp()};
}

CFWord cf_from_rational(const Rational& x) {
    if (x < Rational(0) || x > Rational(1)) throw DomainError("cf_from_rational: x must lie in [0,1], got " + x.to_string());
    std::vector<std::uint64_t> digits;
    mpz_class a = x.den(), b = x.num();  // x = b/a; next digit is floor(a/b)
    while (sgn(b) != 0) {
        mpz_class quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (!quot.fits_ulong_p()) throw DomainError("continued-fraction digit exceeds 64 bits");
        digits.push_back(quot.get_ui());
        a = b;
        b = rem;
    }
    // Euclid ends with a digit >= 2 except for x = 1 -> [1].
    return CFWord(std::move(digits));
}

Convergents convergents(const CFWord& w) {
    Convergents c;
    c.p.reserve(w.size() + 1);
    c.q.reserve(w.size() + 1);
    mpz_class p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
    mpz_class p = 0, q = 1;            // p_0/q_0
    c.p.push_back(p);
    c.q.push_back(q);
    for (auto a : w.digits()) {
        mpz_class pn = mpz_class(a) * p + p_prev;
        mpz_class qn = mpz_class(a) * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
        c.p.push_back(p);
        c.q.push_back(q);
    }
    return c;
}

Rational rational_from_cf(const CFWord& w) {
    const auto c = convergents(w);
    return Rational(c.p.back(), c.q.back());
}

Cylinder gauss_cylinder(const CFWord& w) {
    if (w.empty()) throw DomainError("gauss_cylinder: empty word");
    const auto c = convergents(w);
    const auto n = w.size();
    Rational a(c.p[n], c.q[n]);
    Rational b(c.p[n] + c.p[n - 1], c.q[n] + c.q[n - 1]);
    if (b < a) std::swap(a, b);
    return Cylinder{std::move(a), std::move(b), Dyadic(mpz_class(1), w.digit_sum())};
}

std::pair<FareyCell, FareyCell> farey_split(const FareyCell& c) {
    const Rational m = c.mediant();
    return {FareyCell{c.left, m, c.depth + 1}, FareyCell{m, c.right, c.depth + 1}};
}

}  // namespace minkowski
