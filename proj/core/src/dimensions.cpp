#include "weilforms/dimensions.hpp"

#include "weilforms/error.hpp"

#include <cmath>
#include <numbers>

namespace weilforms {

Rational sawtooth(const Rational& x) {
    return x - Rational(floor(x) - floor(-x)) / 2;
}

namespace {

// 2k + sig modulo 4, as an integer in [0, 4).
long twice_weight_plus_sig(const FiniteQuadraticModule& A, HalfInteger k) {
    long t = (k.twice() + A.signature()) % 4;
    return t < 0 ? t + 4 : t;
}

std::complex<double> e(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

}  // namespace

bool is_antisymmetric_weight(const FiniteQuadraticModule& A, HalfInteger k) {
    return twice_weight_plus_sig(A, k) == 2;
}

bool is_symmetric_weight(const FiniteQuadraticModule& A, HalfInteger k) {
    return twice_weight_plus_sig(A, k) == 0;
}

DimensionReport dim_antisymmetric(const FiniteQuadraticModule& A, HalfInteger k, double tolerance) {
    if (!is_antisymmetric_weight(A, k))
        fail_input("wrong-parity", "weight " + k.str() + " is not antisymmetric for this module");
    if (k.twice() <= 4) fail_input("unsupported-weight", "the dimension formula needs k > 2");

    DimensionReport rep;
    rep.weight = k;
    long isotropic_nontorsion = 0;
    long nontorsion = 0;
    for (const auto& g : A.elements()) {
        const Rational q = A.qvalue(g);
        rep.b1 += sawtooth(q);
        if (A.is_two_torsion(g)) {
            rep.b2 += sawtooth(q);
        } else {
            ++nontorsion;
            if (q == 0) ++isotropic_nontorsion;
        }
    }
    rep.d_pairs = nontorsion / 2;
    rep.alpha4_tilde = isotropic_nontorsion / 2;

    const double n = static_cast<double>(A.size());
    const double kk = k.to_double();
    const double sig = A.signature();
    const auto g1 = gauss_sum(A, Rational(1));
    const auto g2 = gauss_sum(A, Rational(2));
    const auto gm3 = gauss_sum(A, Rational(-3));

    double value = rep.d_pairs * (kk - 1.0) / 12.0;
    value += (e((2.0 * (kk + 1.0) + sig) / 8.0) * g2).imag() / (4.0 * std::sqrt(n));
    value -= (e((4.0 * kk + 3.0 * sig - 10.0) / 24.0) * (g1 - gm3)).real() / (3.0 * std::sqrt(3.0 * n));
    value += (rep.alpha4_tilde + Rational(rep.b1 - rep.b2).get_d()) / 2.0;

    const double rounded = std::round(value);
    rep.numeric_residual = std::abs(value - rounded);
    if (rep.numeric_residual > tolerance)
        fail_math("numeric-inconsistency", "dimension formula did not round to an integer");
    rep.dim_m = static_cast<long>(rounded);
    rep.dim_s = rep.dim_m - rep.alpha4_tilde;
    if (rep.dim_m < 0 || rep.dim_s < 0) fail_math("numeric-inconsistency", "negative dimension");
    return rep;
}

}  // namespace weilforms
