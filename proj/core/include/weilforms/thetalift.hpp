#pragma once

#include "weilforms/arith.hpp"
#include "weilforms/linalg.hpp"
#include "weilforms/qexpansion.hpp"

#include <map>
#include <vector>

namespace weilforms {

/// Lorentzian Gram matrix S of signature (1, l - 1) with even diagonal, plus a vector of
/// positive norm selecting the positive cone and the height functional <., seed>.
struct LorentzianGram {
    IntMatrix s;
    RationalVector seed;

    /// Throws an input error unless S is even, nondegenerate and of signature (1, l - 1)
    /// and seed^T S seed > 0.
    void validate() const;
    std::size_t rank() const { return s.size(); }
    /// Pairing <u, v> = u^T S v.
    Rational pairing(const RationalVector& u, const RationalVector& v) const;
};

/// Gram [[2, 1], [1, (1 - D)/2]] with seed (1, 0).
LorentzianGram doi_naganuma_gram(long D);

/// Fourier expansion sum a(r) q^r of an orthogonal modular form, keyed by r in S^{-1} Z^l.
/// Only indices with 0 < <r, seed> <= height_bound are present.
struct OrthogonalExpansion {
    LorentzianGram gram;
    long weight = 0;
    Rational height_bound;
    std::map<RationalVector, Rational> coeffs;

    Rational coeff(const RationalVector& r) const;
    Rational height(const RationalVector& r) const { return gram.pairing(r, gram.seed); }
    bool is_zero() const { return coeffs.empty(); }
};

/// Every r in S^{-1} Z^l with Q_S(r) > 0 and 0 < <r, seed> <= bound, ordered by (height, r).
std::vector<RationalVector> positive_cone_points(const LorentzianGram& g, const Rational& bound);

/// Lift of a cusp form F for the module of -S, of weight k + 1 - l/2:
///   a(r) = sum_{n | r, r/n in S^{-1} Z^l} c(Q_S(r/n), r/n) n^{k-1}.
/// Every index with Q_S(r) > 0 is stored, including zero coefficients.
OrthogonalExpansion theta_lift(const QExpansion& F, const LorentzianGram& g, long k, const Rational& height_bound);

/// Lift for Q(sqrt D), D = 1 mod 4 squarefree; F must have integral weight k for the module of -S.
OrthogonalExpansion doi_naganuma(long D, const QExpansion& F, const Rational& height_bound);

/// nu = r1 + r2 w with w = (1 + sqrt D)/2 and its Galois conjugate (r1 + r2) - r2 w.
RationalVector hilbert_conjugate(const RationalVector& r);
bool is_self_conjugate(const RationalVector& r);
std::string hilbert_label(const RationalVector& r);

/// The coefficient of q^h in the one-variable series obtained by grouping indices by height h.
std::map<Rational, Rational> scalar_series(const OrthogonalExpansion& f);

}  // namespace weilforms
