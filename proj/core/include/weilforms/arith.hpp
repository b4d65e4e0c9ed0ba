#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weilforms {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// num / den in lowest terms (the two-argument gmpxx constructor does not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws an input error on junk.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// Representative of q + Z in [0, 1).
Rational frac(const Rational& q);
bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // requires is_integer

bool is_square(const Integer& n);
/// Exact square root of a nonnegative rational square, if it is one.
std::optional<Rational> rational_sqrt(const Rational& q);

/// p-adic valuation of a nonzero integer; returns a large sentinel for zero.
long valuation(const Integer& n, const Integer& p);
inline constexpr long kInfiniteValuation = 1L << 40;

/// Exact power with a signed exponent.
Rational power(const Rational& base, long exponent);
Integer power(const Integer& base, unsigned long exponent);

/// Prime factorization of |n| by trial division with a primality check on the cofactor.
std::map<Integer, unsigned> factor(const Integer& n);
std::vector<Integer> prime_divisors(const Integer& n);
std::vector<Integer> divisors(const Integer& n);  // positive divisors of |n|, ascending

/// Kronecker symbol (d / n) for n > 0.
int kronecker(const Integer& d, const Integer& n);
/// Discriminant of Q(sqrt d) for a non-square d; 1 for a positive square.
Integer fundamental_discriminant(const Integer& d);

/// A weight in (1/2)Z stored as twice its value.
class HalfInteger {
public:
    HalfInteger() = default;
    explicit HalfInteger(long twice) : twice_(twice) {}
    static HalfInteger from_rational(const Rational& q);

    long twice() const { return twice_; }
    bool is_integral() const { return twice_ % 2 == 0; }
    Rational value() const { return ratio(twice_, 2); }
    double to_double() const { return static_cast<double>(twice_) / 2.0; }
    std::string str() const { return to_string(value()); }

    friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice_ == b.twice_; }
    friend auto operator<=>(HalfInteger a, HalfInteger b) { return a.twice_ <=> b.twice_; }

private:
    long twice_ = 0;
};

/// Stable 64-bit content hash used for cache keys.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace weilforms
