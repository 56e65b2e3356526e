#pragma once

// Continued fractions, Gauss cylinders and the Stern-Brocot (Farey) cell tree.
// Everything here is exact; no floating point.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "minkowski/rational.hpp"

namespace minkowski {

/// Partial quotients a_1..a_n of x = [0; a_1, ..., a_n]. The empty word is x = 0.
///
/// Producers emit the canonical form (last digit >= 2 unless the word is exactly [1]);
/// consumers accept both [.., a, 1] and [.., a + 1].
class CFWord {
public:
    CFWord() = default;
    /// Throws DomainError if any digit is < 1.
    explicit CFWord(std::vector<std::uint64_t> digits);
    CFWord(std::initializer_list<std::uint64_t> digits) : CFWord(std::vector<std::uint64_t>(digits)) {}

    std::span<const std::uint64_t> digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    std::uint64_t operator[](std::size_t i) const { return digits_[i]; }

    /// a_1 + ... + a_n; the binary length of the word under ?.
    std::uint64_t digit_sum() const noexcept;
    bool is_canonical() const noexcept;
    /// Rewrites a trailing [.., a, 1] as [.., a + 1].
    CFWord canonical() const;

    CFWord appended(std::uint64_t digit) const;
    /// Word with the first digit dropped (the Gauss-map shift).
    CFWord tail() const;

    friend bool operator==(const CFWord&, const CFWord&) = default;

private:
    std::vector<std::uint64_t> digits_;
};

/// Stern-Brocot interval [left, right] with right.num*left.den - left.num*right.den = 1.
/// Its mu-mass is exactly 2^-depth.
struct FareyCell {
    Rational left{0};
    Rational right{1};
    std::uint64_t depth = 0;

    static FareyCell root() { return {}; }
    Rational mediant() const;
    /// The exact mass 2^-depth.
    Dyadic mass() const { return Dyadic(mpz_class(1), depth); }
    /// right.num*left.den - left.num*right.den; 1 for every valid cell.
    mpz_class determinant() const;
};

/// All x whose expansion starts with a given word: the half-open interval (left, right].
struct Cylinder {
    Rational left;
    Rational right;
    Dyadic mass;  // 2^-(a_1 + ... + a_n)

    bool contains(const Rational& x) const { return left < x && x <= right; }
    /// The same interval viewed as a closed Farey cell of depth a_1 + ... + a_n.
    FareyCell as_farey_cell() const;
};

/// Canonical expansion of x in [0,1]: 0 -> [], 1 -> [1], last digit >= 2 otherwise.
CFWord cf_from_rational(const Rational& x);

/// p_n/q_n by the convergent recursion; tolerates non-canonical words.
Rational rational_from_cf(const CFWord& w);

/// Convergents p_k/q_k for k = 0..n, with p_0/q_0 = 0/1.
struct Convergents {
    std::vector<mpz_class> p;
    std::vector<mpz_class> q;
};
Convergents convergents(const CFWord& w);

/// Gauss cylinder of a nonempty word; endpoints p_n/q_n and (p_n+p_{n-1})/(q_n+q_{n-1}).
Cylinder gauss_cylinder(const CFWord& w);

/// Splits at the mediant; both children have depth + 1.
std::pair<FareyCell, FareyCell> farey_split(const FareyCell& c);

}  // namespace minkowski
