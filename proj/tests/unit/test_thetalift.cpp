#include "weilforms/cuspgen.hpp"
#include "weilforms/error.hpp"
#include "weilforms/thetalift.hpp"

#include <doctest.h>

#include <numeric>

using namespace weilforms;

namespace {

const EvenLattice kN2(IntMatrix{{-4}});
const EvenLattice kD5(IntMatrix{{-2, -1}, {-1, 2}});

QExpansion n2_form(const Rational& prec) {
    const FiniteQuadraticModule A(kN2);
    return r_series(kN2, HalfInteger(11), {ratio(1, 8), A.from_dual({ratio(3, 4)})}, prec);
}

QExpansion d5_form(const Rational& prec) {
    const FiniteQuadraticModule A(kD5);
    return r_series(kD5, HalfInteger(10), {ratio(1, 5), A.from_dual({ratio(2, 5), ratio(1, 5)})}, prec);
}

const LorentzianGram kS2{{{4}}, {Rational(1)}};

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "ok";
}

}  // namespace

TEST_SUITE("thetalift") {

TEST_CASE("Lorentzian Gram validation") {
    CHECK(code_of([] { kS2.validate(); }) == "ok");
    CHECK(code_of([] { LorentzianGram{{{2, 0}, {0, 2}}, {1, 0}}.validate(); }) == "bad-signature");
    CHECK(code_of([] { LorentzianGram{{{-4}}, {Rational(1)}}.validate(); }) == "bad-signature");
    CHECK(code_of([] { LorentzianGram{{{2, 1}, {1, -2}}, {1}}.validate(); }) == "bad-seed");
    CHECK(code_of([] { LorentzianGram{{{2, 1}, {1, -2}}, {0, 1}}.validate(); }) != "ok");
    CHECK(code_of([] { LorentzianGram{{{3}}, {Rational(1)}}.validate(); }) != "ok");
    CHECK(doi_naganuma_gram(5).s == IntMatrix{{2, 1}, {1, -2}});
    CHECK(doi_naganuma_gram(13).s == IntMatrix{{2, 1}, {1, -6}});
    CHECK(code_of([] { doi_naganuma_gram(4); }) == "bad-discriminant");
    CHECK(code_of([] { doi_naganuma_gram(-3); }) == "bad-discriminant");
}

TEST_CASE("positive cone points") {
    const auto pts = positive_cone_points(kS2, 5);
    // With S = [[4]] the height of r = b/4 is b itself.
    REQUIRE(pts.size() == 5);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i][0] == ratio(static_cast<long>(i) + 1, 4));

    const LorentzianGram d5 = doi_naganuma_gram(5);
    const EvenLattice S(d5.s);
    Rational last = 0;
    for (const auto& r : positive_cone_points(d5, 4)) {
        CHECK(S.q(r) > 0);
        const Rational h = d5.pairing(r, d5.seed);
        CHECK(h > 0);
        CHECK(h <= 4);
        CHECK(h >= last);
        last = h;
        for (const auto& x : S.apply(r)) CHECK(is_integer(x));
    }
}

TEST_CASE("Shimura type lift for N = 2") {
    const QExpansion f = n2_form(4);
    const OrthogonalExpansion lift = theta_lift(f, kS2, 5, 5);
    const auto series = scalar_series(lift);
    const std::map<Rational, Rational> expect{{1, 1}, {2, 16}, {3, -156}, {4, 256}, {5, 870}};
    CHECK(series == expect);
}

TEST_CASE("primitive indices carry the input coefficient") {
    const QExpansion f = d5_form(5);
    const OrthogonalExpansion lift = doi_naganuma(5, f, 4);
    const EvenLattice S(lift.gram.s);
    long primitive = 0;
    for (const auto& [r, c] : lift.coeffs) {
        const auto b = S.apply(r);
        Integer g = 0;
        for (const auto& x : b) g = gcd(g, to_integer(x));
        if (g != 1) continue;
        ++primitive;
        CHECK(c == f.coeff(f.module().from_dual(r), S.q(r)));
    }
    CHECK(primitive > 5);
}

TEST_CASE("the lift is linear") {
    const QExpansion f = n2_form(4);
    const OrthogonalExpansion a = theta_lift(f, kS2, 5, 5);
    const OrthogonalExpansion b = theta_lift(Rational(3) * f, kS2, 5, 5);
    for (const auto& [r, c] : a.coeffs) CHECK(b.coeff(r) == 3 * c);
    const OrthogonalExpansion z = theta_lift(QExpansion(kN2, HalfInteger(11), 4), kS2, 5, 5);
    CHECK(scalar_series(z).empty());
    for (const auto& [r, c] : z.coeffs) CHECK(c == 0);
}

TEST_CASE("Galois swap acts by the parity of the weight") {
    CHECK(hilbert_conjugate({ratio(2, 5), ratio(1, 5)}) == RationalVector{ratio(3, 5), ratio(-1, 5)});
    CHECK(hilbert_conjugate(hilbert_conjugate({ratio(2, 5), ratio(1, 5)})) == RationalVector{ratio(2, 5), ratio(1, 5)});
    CHECK(is_self_conjugate({1, 0}));
    CHECK(hilbert_label({ratio(2, 5), ratio(1, 5)}) == "2/5 + 1/5w");
    CHECK(hilbert_label({1, ratio(-3, 5)}) == "1 - 3/5w");

    const OrthogonalExpansion lift = doi_naganuma(5, d5_form(7), 5);
    bool nonzero = false;
    for (const auto& [r, c] : lift.coeffs) {
        CHECK(lift.coeff(hilbert_conjugate(r)) == -c);
        if (is_self_conjugate(r)) CHECK(c == 0);
        nonzero = nonzero || c != 0;
    }
    CHECK(nonzero);
}

TEST_CASE("errors") {
    const QExpansion f = n2_form(2);
    CHECK(code_of([&] { theta_lift(f, doi_naganuma_gram(5), 5, 2); }) == "module-mismatch");
    CHECK(code_of([&] { theta_lift(f, kS2, 4, 2); }) == "weight-mismatch");
    CHECK(code_of([&] { theta_lift(f, kS2, 5, 20); }) == "insufficient-precision");
    CHECK(code_of([&] { doi_naganuma(5, f, 2); }) == "weight-mismatch");
}

}
