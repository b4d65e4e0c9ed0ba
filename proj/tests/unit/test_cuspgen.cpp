#include "weilforms/cuspgen.hpp"
#include "weilforms/dimensions.hpp"
#include "weilforms/error.hpp"

#include <doctest.h>

using namespace weilforms;

namespace {

const EvenLattice kN2(IntMatrix{{-4}});
const EvenLattice kD5(IntMatrix{{-2, -1}, {-1, 2}});

std::vector<Rational> component(const QExpansion& f, const RationalVector& gamma) {
    const Element g = f.module().from_dual(gamma);
    std::vector<Rational> out;
    for (const auto& n : f.exponents(g)) out.push_back(f.coeff(g, n));
    return out;
}

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "ok";
}

void check_antisymmetric(const QExpansion& f) {
    const FiniteQuadraticModule& A = f.module();
    for (const auto& [key, c] : f.coeffs()) {
        CHECK(f.coeff(A.neg(key.first), key.second) == -c);
        CHECK(key.second > 0);
        CHECK_FALSE(A.is_two_torsion(key.first));
    }
}

}  // namespace

TEST_SUITE("cuspgen") {

TEST_CASE("weight 11/2 form for N = 2") {
    const FiniteQuadraticModule A(kN2);
    const QExpansion f = r_series(kN2, HalfInteger(11), {ratio(1, 8), A.from_dual({ratio(3, 4)})}, 4);
    CHECK(component(f, {ratio(1, 4)}) == std::vector<Rational>{1, 237, 1440, 245});
    CHECK(component(f, {ratio(3, 4)}) == std::vector<Rational>{-1, -237, -1440, -245});
    CHECK(component(f, {0}) == std::vector<Rational>(4, 0));
    CHECK(component(f, {ratio(1, 2)}) == std::vector<Rational>(4, 0));
    check_antisymmetric(f);
    const QExpansion longer = r_series(kN2, HalfInteger(11), {ratio(1, 8), A.from_dual({ratio(3, 4)})}, 10);
    CHECK(modularity_residual(longer, default_modularity_samples()) < 1e-8);
}

TEST_CASE("weight 5 form for D = 5") {
    const FiniteQuadraticModule A(kD5);
    const QExpansion f = r_series(kD5, HalfInteger(10), {ratio(1, 5), A.from_dual({ratio(2, 5), ratio(1, 5)})}, 6);
    const auto b = component(f, {ratio(1, 5), ratio(3, 5)});
    CHECK(std::vector<Rational>(b.begin(), b.begin() + 5) == std::vector<Rational>{-26, -39, 378, -140, -420});
    const auto a = component(f, {ratio(2, 5), ratio(1, 5)});
    const std::vector<Rational> magnitudes{1, 42, 108, 4, 378, 1512};
    for (std::size_t i = 0; i < magnitudes.size(); ++i) CHECK(abs(a[i]) == magnitudes[i]);
    check_antisymmetric(f);
    CHECK(modularity_residual(f, default_modularity_samples()) < 1e-8);
}

TEST_CASE("scaling and additivity are exact") {
    const FiniteQuadraticModule A(kD5);
    const CuspIndex i1{ratio(1, 5), A.from_dual({ratio(2, 5), ratio(1, 5)})};
    const CuspIndex i2{ratio(6, 5), A.from_dual({ratio(2, 5), ratio(1, 5)})};
    const QExpansion f = r_series(kD5, HalfInteger(10), i1, 3);
    const QExpansion g = r_series(kD5, HalfInteger(10), i2, 3);
    // dim S_5 = 1, so the second series is a rational multiple of the first.
    const Element e = A.from_dual({ratio(2, 5), ratio(1, 5)});
    const Rational n0 = f.exponents(e).front();
    REQUIRE(f.coeff(e, n0) != 0);
    const Rational s = g.coeff(e, n0) / f.coeff(e, n0);
    CHECK(s * f == g);
    CHECK((f + Rational(-1) * f).is_zero());
}

TEST_CASE("threaded R-series matches sequential") {
    const FiniteQuadraticModule A(kD5);
    const CuspIndex idx{ratio(1, 5), A.from_dual({ratio(2, 5), ratio(1, 5)})};
    CHECK(r_series(kD5, HalfInteger(10), idx, 4) == r_series(kD5, HalfInteger(10), idx, 4, threaded_for(3)));
}

TEST_CASE("errors") {
    const FiniteQuadraticModule A(kD5);
    const Element beta = A.from_dual({ratio(2, 5), ratio(1, 5)});
    CHECK(code_of([&] { r_series(kD5, HalfInteger(12), {ratio(1, 5), beta}, 2); }) == "wrong-parity");
    CHECK(code_of([&] { r_series(kD5, HalfInteger(6), {ratio(1, 5), beta}, 2); }) == "unsupported-weight");
    CHECK(code_of([&] { r_series(kD5, HalfInteger(10), {ratio(1, 3), beta}, 2); }) == "index-mismatch");
    CHECK(code_of([&] { r_series(kD5, HalfInteger(10), {ratio(1, 5), Element{7, 0}}, 2); }) == "index-mismatch");
    CHECK(code_of([&] { cusp_basis(kD5, HalfInteger(12)); }) == "wrong-parity");
}

TEST_CASE("cusp basis size matches the dimension formula") {
    const std::vector<std::pair<IntMatrix, long>> cases{
        {{{-4}}, 11}, {{{-2, -1}, {-1, 2}}, 10}, {{{-2, -1}, {-1, 2}}, 14}, {{{6}}, 17}, {{{4}}, 21}, {{{10}}, 13}};
    for (const auto& [g, twice] : cases) {
        const EvenLattice L(g);
        const FiniteQuadraticModule A(L);
        REQUIRE(is_antisymmetric_weight(A, HalfInteger(twice)));
        const long dim = dim_antisymmetric(A, HalfInteger(twice)).dim_s;
        CuspBasisOptions opts;
        opts.output_prec = Rational(4);
        const auto basis = cusp_basis(L, HalfInteger(twice), opts);
        CAPTURE(twice);
        CHECK(static_cast<long>(basis.size()) == dim);
        for (const auto& entry : basis) {
            CHECK(entry.series.prec() == 4);
            CHECK_FALSE(entry.series.is_zero());
            CHECK(entry.index.m > 0);
            CHECK(is_integer(entry.index.m + A.qvalue(entry.index.beta)));
            check_antisymmetric(entry.series);
        }
    }
}

TEST_CASE("empty basis when there are no cusp forms") {
    CHECK(cusp_basis(EvenLattice(), HalfInteger(10)).empty());
    CHECK(cusp_basis(EvenLattice(IntMatrix{{2}}), HalfInteger(9)).empty());
}

TEST_CASE("weight three forms") {
    for (long N : {5L, 9L}) {
        CAPTURE(N);
        const Weight3Parts p = weight3_parts(N, 8);
        CHECK(p.total.is_zero());
        CHECK_FALSE(p.holomorphic.is_zero());
        CHECK(p.holomorphic == Rational(-1) * p.correction);
        check_antisymmetric(p.holomorphic);
        CHECK(weight3_cyclic(N, 4).is_zero());
    }
    CHECK(code_of([] { weight3_parts(13, 3); }) == "unsupported-module");
    CHECK(code_of([] { weight3_parts(7, 3); }) == "unsupported-module");
    CHECK(code_of([] { weight3_parts(1, 3); }) == "unsupported-module");
}

}
