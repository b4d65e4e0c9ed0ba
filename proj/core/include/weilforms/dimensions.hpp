#pragma once

#include "weilforms/arith.hpp"
#include "weilforms/quadmod.hpp"

namespace weilforms {

struct DimensionReport {
    HalfInteger weight;
    long dim_m = 0;
    long dim_s = 0;
    long alpha4_tilde = 0;
    Rational b1;
    Rational b2;
    long d_pairs = 0;
    double numeric_residual = 0.0;
};

/// B(x) = x - (floor(x) - floor(-x)) / 2.
Rational sawtooth(const Rational& x);

/// True when k + sig/2 is an odd integer.
bool is_antisymmetric_weight(const FiniteQuadraticModule& A, HalfInteger k);
/// True when k + sig/2 is an even integer.
bool is_symmetric_weight(const FiniteQuadraticModule& A, HalfInteger k);

/// Dimensions of M_k(rho*) and S_k(rho*) for an antisymmetric weight k > 2.
/// The transcendental part is evaluated in double precision and rounded; a
/// rounding residual above `tolerance` raises a math error.
DimensionReport dim_antisymmetric(const FiniteQuadraticModule& A, HalfInteger k, double tolerance = 1e-4);

}  // namespace weilforms
