#pragma once

#include "weilforms/arith.hpp"
#include "weilforms/linalg.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace weilforms {

/// Even lattice Z^e with integral symmetric Gram matrix G, even diagonal, det G != 0.
/// The quadratic form is Q(v) = v^T G v / 2. Rank 0 is allowed.
class EvenLattice {
public:
    EvenLattice() = default;
    explicit EvenLattice(IntMatrix gram);

    const IntMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.size(); }
    const Integer& det() const { return det_; }
    const RatMatrix& gram_inverse() const { return gram_inv_; }

    Rational q(const RationalVector& v) const;
    Rational bilinear(const RationalVector& u, const RationalVector& v) const;
    RationalVector apply(const RationalVector& v) const;  // G v
    bool in_dual(const RationalVector& v) const;

    EvenLattice negated() const;
    /// Real signature b+ - b- of the Gram matrix.
    int real_signature() const;
    std::string fingerprint() const;

    friend bool operator==(const EvenLattice& a, const EvenLattice& b) { return a.gram_ == b.gram_; }

private:
    IntMatrix gram_;
    Integer det_ = 1;
    RatMatrix gram_inv_;
};

/// Element of a finite abelian group in generator coordinates, coords[i] in [0, d_i).
using Element = std::vector<long>;

/// Discriminant module L'/L with Q(x) = x^T G x / 2 mod 1, structured by Smith normal form.
class FiniteQuadraticModule {
public:
    explicit FiniteQuadraticModule(EvenLattice lattice);

    const EvenLattice& lattice() const { return lattice_; }
    const std::vector<long>& orders() const { return orders_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Element>& elements() const { return elements_; }

    Element zero() const { return Element(orders_.size(), 0); }
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(const Element& a, long k) const;
    bool is_two_torsion(const Element& a) const { return neg(a) == a; }

    std::size_t index(const Element& a) const;
    bool contains(const Element& a) const;

    /// Coset representative in [0, 1)^e.
    RationalVector dual_vector(const Element& a) const;
    /// Class of a dual-lattice vector; throws an input error if v is not in L'.
    Element from_dual(const RationalVector& v) const;

    Rational qvalue(const Element& a) const;
    Rational bilinear(const Element& a, const Element& b) const;
    int signature() const { return signature_; }

    /// The lexicographically smaller of a and -a.
    Element orbit_representative(const Element& a) const;
    /// Representatives of the +-orbits, in element order.
    std::vector<Element> orbit_representatives() const;

    /// rho*(S) and rho*(T) in the element ordering of elements().
    Eigen::MatrixXcd weil_S() const;
    Eigen::MatrixXcd weil_T() const;

    std::string element_label(const Element& a) const;

private:
    EvenLattice lattice_;
    std::vector<long> orders_;
    std::vector<std::size_t> kept_;       // Smith rows with d_i > 1
    IntMatrix smith_U_;                   // U with U G V = D
    std::vector<RationalVector> generators_;  // dual vectors of the generators
    std::vector<Element> elements_;
    std::vector<Rational> qvalues_;
    int signature_ = 0;
};

/// Gauss sum sum_{g in A} e(a Q(g)).
std::complex<double> gauss_sum(const FiniteQuadraticModule& A, const Rational& a);

/// Lattice with Gram [[G, G beta], [beta^T G, 2(Q(beta)+m)]]; requires beta in L', m > 0, m + Q(beta) in Z.
EvenLattice enlarge_lattice(const EvenLattice& L, const Rational& m, const RationalVector& beta);

/// Cyclic module realising A = (1/N)Z/Z with Q(x/N) = -x^2/N for N = 1 mod 4,
/// together with the map x -> element.
struct CyclicRealisation {
    EvenLattice lattice;
    std::vector<RationalVector> residue_vectors;  // dual vector of x/N for x = 0..N-1
};
CyclicRealisation cyclic_module_lattice(long N);

}  // namespace weilforms
