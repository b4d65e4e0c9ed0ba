#pragma once

#include "weilforms/arith.hpp"

#include <vector>

namespace weilforms {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

IntMatrix identity_int(std::size_t n);
RatMatrix to_rational(const IntMatrix& m);

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

/// Inverse of a nonsingular square matrix; throws a math error if singular.
RatMatrix inverse(const RatMatrix& m);

RationalVector mat_vec(const RatMatrix& m, const RationalVector& v);
RationalVector mat_vec(const IntMatrix& m, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... and all d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix V;
    std::vector<Integer> diagonal;
};
SmithForm smith_normal_form(const IntMatrix& A);

/// Incremental exact row echelon basis over Q. Adding a vector reports
/// whether it increased the rank.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t width) : width_(width) {}
    bool add(RationalVector v);
    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    std::size_t width_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace weilforms
