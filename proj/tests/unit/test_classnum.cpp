#include "weilforms/classnum.hpp"
#include "weilforms/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace weilforms;

namespace {

// Counts reduced forms (a, b, c) with b^2 - 4ac = -d, weighting the forms
// equivalent to x^2 + y^2 and x^2 + xy + y^2 by 1/2 and 1/3.
Rational hurwitz_by_forms(long d) {
    if (d == 0) return ratio(-1, 12);
    if (d < 0 || d % 4 == 1 || d % 4 == 2) return 0;
    Rational total = 0;
    for (long a = 1; 3 * a * a <= d; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            const long num = b * b + d;
            if (num % (4 * a) != 0) continue;
            const long c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (a == b && b == c) {
                total += ratio(1, 3);
            } else if (b == 0 && a == c) {
                total += ratio(1, 2);
            } else {
                total += 1;
            }
        }
    return total;
}

long kron5(long d) {
    switch (((d % 5) + 5) % 5) {
        case 1:
        case 4: return 1;
        case 2:
        case 3: return -1;
        default: return 0;
    }
}

bool integral_in_q5(const Rational& x, const Rational& y) {
    // x + y sqrt5 lies in Z[(1 + sqrt5)/2] iff 2x, 2y are integers of equal parity.
    const Rational X = 2 * x, Y = 2 * y;
    if (!is_integer(X) || !is_integer(Y)) return false;
    return (to_integer(X) - to_integer(Y)) % 2 == 0;
}

}  // namespace

TEST_SUITE("classnum") {

TEST_CASE("Hurwitz class number anchors") {
    CHECK(hurwitz(0) == ratio(-1, 12));
    CHECK(hurwitz(3) == ratio(1, 3));
    CHECK(hurwitz(4) == ratio(1, 2));
    CHECK(hurwitz(7) == 1);
    CHECK(hurwitz(8) == 1);
    CHECK(hurwitz(11) == 1);
    CHECK(hurwitz(12) == ratio(4, 3));
    CHECK(hurwitz(15) == 2);
    CHECK(hurwitz(23) == 3);
    CHECK(hurwitz(1) == 0);
    CHECK(hurwitz(6) == 0);
    CHECK(hurwitz(-3) == 0);
}

TEST_CASE("Hurwitz class numbers against reduced form counts") {
    for (long d = 0; d <= 1500; ++d) {
        CAPTURE(d);
        REQUIRE(hurwitz(d) == hurwitz_by_forms(d));
    }
}

TEST_CASE("Kronecker-Hurwitz relation") {
    for (long n = 1; n <= 300; ++n) {
        Rational lhs = 0;
        for (long r = -2 * static_cast<long>(std::sqrt(n)) - 2; r <= 2 * static_cast<long>(std::sqrt(n)) + 2; ++r)
            if (4 * n - r * r >= 0) lhs += hurwitz(4 * n - r * r);
        Rational rhs = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) rhs += 2 * d - std::min(d, n / d);
        CAPTURE(n);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("arithmetic in Q(sqrt 5)") {
    const QSqrt5 eps = golden_unit();
    CHECK(eps.norm() == -1);
    CHECK(eps * eps == square_unit());
    CHECK(square_unit().norm() == 1);
    CHECK(square_unit().trace() == 3);
    CHECK(eps.in_ring_of_integers());
    CHECK_FALSE(QSqrt5{ratio(1, 2), 0}.in_ring_of_integers());
    CHECK(QSqrt5{0, -1}.sign() == -1);
    CHECK(QSqrt5{3, -1}.sign() == 1);
    CHECK(QSqrt5{2, -1}.sign() == -1);
    CHECK((QSqrt5{7, 3} / QSqrt5{7, 3}) == QSqrt5{1, 0});
    CHECK(std::abs(eps.to_double() - 1.6180339887) < 1e-9);
}

TEST_CASE("ideal counts match the divisor sum") {
    for (long M = 1; M <= 300; ++M) {
        if (M % 5 == 0) continue;
        long expect = 0;
        for (long d = 1; d <= M; ++d)
            if (M % d == 0) expect += kron5(d);
        const auto gens = ideals_of_norm_q5(M);
        CAPTURE(M);
        REQUIRE(static_cast<long>(gens.size()) == expect);
        for (const auto& mu : gens) {
            CHECK(mu.norm() == M);
            CHECK(mu.sign() > 0);
            CHECK(mu.conj().sign() > 0);
            CHECK(mu.in_ring_of_integers());
        }
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                const QSqrt5 q = gens[i] / gens[j];
                CHECK_FALSE((q.in_ring_of_integers() && (q.norm() == 1 || q.norm() == -1)));
            }
    }
}

TEST_CASE("witness generators") {
    const auto w19 = ideal_witnesses_q5(19);
    REQUIRE(w19.size() == 2);
    bool found = false;
    for (const auto& w : w19)
        if (w.a == 8 && w.b == 3 && w.c == ratio(9, 2) && w.d == ratio(1, 2)) found = true;
    CHECK(found);

    const auto w1 = ideal_witnesses_q5(1);
    REQUIRE(w1.size() == 1);

    for (long M = 1; M <= 400; ++M) {
        const long r = M % 5;
        if (r != 1 && r != 4) continue;
        CAPTURE(M);
        for (const auto& w : ideal_witnesses_q5(M)) {
            REQUIRE(integral_in_q5(w.a, w.b));
            REQUIRE(integral_in_q5(w.c, w.d));
            CHECK(w.a * w.a - 5 * w.b * w.b == M);
            CHECK(w.c * w.c - 5 * w.d * w.d == M);
            CHECK(w.a > 0);
            CHECK(w.c > 0);
            const long ta = to_integer(2 * w.a).get_si() % 5, tc = to_integer(2 * w.c).get_si() % 5;
            CHECK(ta == (r == 4 ? 1 : 2));
            CHECK(tc == (r == 4 ? 4 : 3));
            // Both generate the ideal of the reduced generator.
            const QSqrt5 q = QSqrt5{w.a, w.b} / w.generator;
            CHECK(q.in_ring_of_integers());
            CHECK((q.norm() == 1 || q.norm() == -1));
        }
    }
    CHECK_THROWS_AS(ideal_witnesses_q5(7), Error);
}

TEST_CASE("witness summand") {
    const IdealWitness w{19, QSqrt5{}, 8, 3, ratio(9, 2), ratio(1, 2)};
    const Rational expect = 7 * (ratio(81, 4) - 64) - 30 * (ratio(9, 4) - 24) + 35 * (ratio(1, 4) - 9);
    CHECK(witness_summand(w) == expect);
}

TEST_CASE("trace form class number identities") {
    for (int variant : {1, 2})
        for (long n = 0; n <= 60; ++n) {
            const Prop10Result r = prop10_check(variant, n);
            CAPTURE(variant);
            CAPTURE(n);
            CHECK(r.equal);
            CHECK(r.lhs == r.rhs);
        }
    CHECK(prop10_check(1, 3).lhs == ratio(-8, 15));
    CHECK(prop10_check(2, 3).lhs == ratio(-8, 15));
    CHECK_THROWS_AS(prop10_check(3, 1), Error);
    CHECK_THROWS_AS(prop10_check(1, -1), Error);
}

TEST_CASE("mod three class number identities") {
    const Remark12Result one = remark12_check(1);
    CHECK(one.lhs1 == ratio(1, 2));
    CHECK(one.rhs == ratio(1, 2));
    const Remark12Result three = remark12_check(3);
    CHECK(three.equal);
    for (long n = 1; n <= 300; ++n) {
        const Remark12Result r = remark12_check(n);
        CAPTURE(n);
        CHECK(r.equal);
        CHECK(r.lhs1 == -r.lhs2);
    }
    CHECK_THROWS_AS(remark12_check(0), Error);
}

TEST_CASE("unit orbit correction for N = 5 agrees with the witness sum") {
    for (long n = 0; n <= 30; ++n) {
        CAPTURE(n);
        Rational s4 = 0, s1 = 0;
        for (const auto& w : ideal_witnesses_q5(5 * n + 4)) s4 += witness_summand(w);
        for (const auto& w : ideal_witnesses_q5(5 * n + 1)) s1 += witness_summand(w);
        CHECK(unit_orbit_correction(n + ratio(4, 5), 2, 5) == -s4 / 5);
        CHECK(unit_orbit_correction(n + ratio(4, 5), 3, 5) == s4 / 5);
        CHECK(unit_orbit_correction(n + ratio(1, 5), 4, 5) == -s1 / 5);
        CHECK(unit_orbit_correction(n + ratio(1, 5), 1, 5) == s1 / 5);
    }
    CHECK(unit_orbit_correction(3 + ratio(4, 5), 2, 5) == -16);
    CHECK_THROWS_AS(unit_orbit_correction(1, 0, 13), Error);
    CHECK_THROWS_AS(unit_orbit_correction(ratio(1, 2), 1, 5), Error);
}

}
