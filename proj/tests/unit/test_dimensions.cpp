#include "weilforms/dimensions.hpp"
#include "weilforms/error.hpp"

#include <doctest.h>

using namespace weilforms;

namespace {

// Dimensions of M_k and S_k for SL2(Z).
long dim_mf(long k) {
    if (k < 0 || k % 2 != 0) return 0;
    if (k == 2) return 0;
    return k % 12 == 2 ? k / 12 : k / 12 + 1;
}
long dim_cf(long k) { return k >= 12 ? dim_mf(k) - 1 : 0; }

long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace

TEST_SUITE("dimensions") {

TEST_CASE("sawtooth") {
    CHECK(sawtooth(0) == 0);
    CHECK(sawtooth(5) == 0);
    CHECK(sawtooth(ratio(1, 4)) == ratio(-1, 4));
    CHECK(sawtooth(ratio(3, 4)) == ratio(1, 4));
    CHECK(sawtooth(ratio(1, 2)) == 0);
    CHECK(sawtooth(ratio(-1, 3)) == ratio(1, 6));
    CHECK(sawtooth(ratio(7, 3)) == ratio(-1, 6));
    for (long num = -30; num <= 30; ++num) {
        const Rational x = ratio(num, 7);
        CHECK(sawtooth(-x) == -sawtooth(x));
        CHECK(sawtooth(x + 1) == sawtooth(x));
    }
}

TEST_CASE("weight parity") {
    const FiniteQuadraticModule A{EvenLattice(IntMatrix{{-4}})};
    CHECK(is_antisymmetric_weight(A, HalfInteger(11)));
    CHECK_FALSE(is_symmetric_weight(A, HalfInteger(11)));
    CHECK(is_symmetric_weight(A, HalfInteger(13)));
    CHECK_FALSE(is_antisymmetric_weight(A, HalfInteger(10)));
    try {
        dim_antisymmetric(A, HalfInteger(13));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "wrong-parity");
        CHECK(e.exit_code() == 2);
    }
}

TEST_CASE("anchor dimensions") {
    CHECK(dim_antisymmetric(FiniteQuadraticModule(EvenLattice(IntMatrix{{-2, -1}, {-1, 2}})), HalfInteger(10)).dim_s == 1);
    CHECK(dim_antisymmetric(FiniteQuadraticModule(EvenLattice(IntMatrix{{-4}})), HalfInteger(11)).dim_s == 1);
    CHECK(dim_antisymmetric(FiniteQuadraticModule(cyclic_module_lattice(5).lattice), HalfInteger(6)).dim_s == 0);
    CHECK(dim_antisymmetric(FiniteQuadraticModule(cyclic_module_lattice(9).lattice), HalfInteger(6)).dim_s == 0);
}

TEST_CASE("scalar case has no odd weight forms") {
    const FiniteQuadraticModule A{EvenLattice()};
    for (long k = 3; k <= 25; k += 2) {
        const DimensionReport r = dim_antisymmetric(A, HalfInteger(2 * k));
        CHECK(r.dim_m == 0);
        CHECK(r.dim_s == 0);
    }
}

TEST_CASE("odd weight Jacobi forms of index m") {
    // J_{k,m} with k odd is M_{k-1/2} for the dual Weil representation of [[2m]], and
    // dim J_{k,m} = sum_{j=1}^{m-1} (dim M_{k+2j-1} - ceil(j^2 / 4m)).
    for (long m = 1; m <= 12; ++m) {
        const FiniteQuadraticModule A{EvenLattice(IntMatrix{{2 * m}})};
        for (long k = 3; k <= 31; k += 2) {
            CAPTURE(m);
            CAPTURE(k);
            long expect = 0;
            for (long j = 1; j <= m - 1; ++j) expect += dim_mf(k + 2 * j - 1) - ceil_div(j * j, 4 * m);
            const DimensionReport r = dim_antisymmetric(A, HalfInteger(2 * k - 1));
            CHECK(r.dim_m == std::max(expect, 0L));
            CHECK(r.numeric_residual < 1e-8);
        }
    }
}

TEST_CASE("odd weight Jacobi cusp forms of index m") {
    for (long m = 1; m <= 12; ++m) {
        const FiniteQuadraticModule A{EvenLattice(IntMatrix{{2 * m}})};
        for (long k = 3; k <= 31; k += 2) {
            CAPTURE(m);
            CAPTURE(k);
            long expect = 0;
            for (long j = 1; j <= m - 1; ++j) expect += dim_cf(k + 2 * j - 1) - (j * j) / (4 * m);
            CHECK(dim_antisymmetric(A, HalfInteger(2 * k - 1)).dim_s == std::max(expect, 0L));
        }
    }
}

TEST_CASE("shifting the weight by 12 adds one dimension per pair") {
    const std::vector<IntMatrix> grams{{{-4}}, {{-2, -1}, {-1, 2}}, {{2, 1}, {1, -4}}, {{6}}, {{-10}},
                                       {{2, 0}, {0, 2}}, {{4, 2}, {2, -6}}};
    for (const auto& g : grams) {
        const FiniteQuadraticModule A{EvenLattice(g)};
        for (long twice = 5; twice <= 30; ++twice) {
            const HalfInteger k(twice);
            if (!is_antisymmetric_weight(A, k)) continue;
            const DimensionReport a = dim_antisymmetric(A, k);
            const DimensionReport b = dim_antisymmetric(A, HalfInteger(twice + 24));
            CAPTURE(twice);
            CHECK(a.dim_s >= 0);
            CHECK(a.dim_m >= a.dim_s);
            CHECK(b.dim_m - a.dim_m == a.d_pairs);
            CHECK(a.dim_m - a.dim_s == a.alpha4_tilde);
        }
    }
}

}
