#pragma once

#include "weilforms/arith.hpp"

#include <vector>

namespace weilforms {

/// Hurwitz class number H(d): classes of positive definite binary forms of
/// discriminant -d weighted by 2/w, with H(0) = -1/12 and H(d) = 0 for d < 0
/// or d = 1, 2 mod 4. Memoised; safe for concurrent use.
Rational hurwitz(long d);

/// Element x + y sqrt(5) of Q(sqrt 5).
struct QSqrt5 {
    Rational x;
    Rational y;

    QSqrt5 conj() const { return {x, -y}; }
    Rational norm() const { return x * x - 5 * y * y; }
    Rational trace() const { return 2 * x; }
    /// Sign of the real embedding with sqrt(5) > 0.
    int sign() const;
    bool in_ring_of_integers() const;
    double to_double() const;

    friend QSqrt5 operator+(const QSqrt5& a, const QSqrt5& b) { return {a.x + b.x, a.y + b.y}; }
    friend QSqrt5 operator-(const QSqrt5& a, const QSqrt5& b) { return {a.x - b.x, a.y - b.y}; }
    friend QSqrt5 operator*(const QSqrt5& a, const QSqrt5& b) {
        return {a.x * b.x + 5 * a.y * b.y, a.x * b.y + a.y * b.x};
    }
    friend QSqrt5 operator/(const QSqrt5& a, const QSqrt5& b);
    friend bool operator==(const QSqrt5& a, const QSqrt5& b) { return a.x == b.x && a.y == b.y; }
};

/// Fundamental unit (1 + sqrt 5)/2 and the totally positive unit u = (3 + sqrt 5)/2.
QSqrt5 golden_unit();
QSqrt5 square_unit();

/// One totally positive generator per ideal of norm M in Z[(1 + sqrt 5)/2], reduced into the
/// window 1 <= mu/mu' < u^2. Sorted by the integer coordinates (2x, 2y).
std::vector<QSqrt5> ideals_of_norm_q5(long M);

/// Generators a + b sqrt5 and c + d sqrt5 of one ideal satisfying the trace congruences:
/// 2a = 1, 2c = 4 (mod 5) when M = 4 (mod 5) and 2a = 2, 2c = 3 (mod 5) when M = 1 (mod 5).
struct IdealWitness {
    long norm = 0;
    QSqrt5 generator;
    Rational a, b, c, d;
};
std::vector<IdealWitness> ideal_witnesses_q5(long M);

/// 7(c^2 - a^2) - 30(|cd| - |ab|) + 35(d^2 - b^2).
Rational witness_summand(const IdealWitness& w);

struct Prop10Result {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};
/// Variant 1: sum_r (r + 4/5) H(4n - 5r^2 - 8r) against the ideals of norm 5n + 4.
/// Variant 2: sum_r (r - 2/5) H(4n - 5r^2 + 4r) against the ideals of norm 5n + 1.
Prop10Result prop10_check(int variant, long n);

struct Remark12Result {
    Rational lhs1;  // r = 1 mod 3
    Rational lhs2;  // r = 2 mod 3
    Rational rhs;
    bool equal = false;
};
/// sum_{r = 1 (3)} r H(4n - r^2) = eps(n) sum_{d | n} (d/3) min(d, n/d)^2 and the r = 2 (3)
/// companion with the opposite sign; eps(n) = -1 if 3 | n, else 1/2.
Remark12Result remark12_check(long n);

/// Weight-three correction term for the cyclic module (1/N)Z/Z, Q(x/N) = -x^2/N, index
/// (1/N, 1/N), at component x/N and exponent n. Supported for N = 5 and N = 9.
Rational unit_orbit_correction(const Rational& n, long x, long N);

}  // namespace weilforms
