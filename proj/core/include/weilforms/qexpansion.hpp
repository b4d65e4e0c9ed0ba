#pragma once

#include "weilforms/arith.hpp"
#include "weilforms/quadmod.hpp"

#include <complex>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace weilforms {

/// Truncated vector-valued q-series sum c(n, g) q^n e_g with exponents n in Z - Q(g), 0 <= n < prec.
class QExpansion {
public:
    using Key = std::pair<Element, Rational>;

    QExpansion(EvenLattice lattice, HalfInteger weight, Rational prec);
    QExpansion(std::shared_ptr<const FiniteQuadraticModule> module, HalfInteger weight, Rational prec);

    const FiniteQuadraticModule& module() const { return *module_; }
    std::shared_ptr<const FiniteQuadraticModule> module_ptr() const { return module_; }
    const EvenLattice& lattice() const { return module_->lattice(); }
    HalfInteger weight() const { return weight_; }
    const Rational& prec() const { return prec_; }

    /// Stores a coefficient; zero values are dropped. Rejects keys outside the
    /// exponent lattice or the precision window.
    void set(const Element& gamma, const Rational& n, const Rational& c);
    Rational coeff(const Element& gamma, const Rational& n) const;
    const std::map<Key, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Exponents n in Z - Q(gamma) with 0 <= n < prec, ascending.
    std::vector<Rational> exponents(const Element& gamma) const;

    /// Coefficient vector over all (gamma, n) below `cutoff`, in a fixed order.
    std::vector<Rational> flatten(const Rational& cutoff) const;

    /// Numerical value of every component at tau.
    std::vector<std::complex<double>> evaluate(std::complex<double> tau) const;

    friend bool operator==(const QExpansion& a, const QExpansion& b);

private:
    std::shared_ptr<const FiniteQuadraticModule> module_;
    HalfInteger weight_;
    Rational prec_;
    std::map<Key, Rational> coeffs_;
};

QExpansion operator+(const QExpansion& a, const QExpansion& b);
QExpansion operator*(const Rational& s, const QExpansion& a);

/// Largest deviation from the S- and T-transformation laws of rho* at the sample points:
/// |f(-1/tau) - tau^k rho*(S) f(tau)| and |f(tau+1) - rho*(T) f(tau)|, using the principal branch of tau^k.
double modularity_residual(const QExpansion& f, const std::vector<std::complex<double>>& taus);

/// Sample points used across the library: i, 0.3 + i, -0.4 + 0.95i.
std::vector<std::complex<double>> default_modularity_samples();

}  // namespace weilforms
