#include "weilforms/qexpansion.hpp"

#include "weilforms/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace weilforms {

QExpansion::QExpansion(EvenLattice lattice, HalfInteger weight, Rational prec)
    : QExpansion(std::make_shared<const FiniteQuadraticModule>(std::move(lattice)), weight, std::move(prec)) {}

QExpansion::QExpansion(std::shared_ptr<const FiniteQuadraticModule> module, HalfInteger weight, Rational prec)
    : module_(std::move(module)), weight_(weight), prec_(std::move(prec)) {}

void QExpansion::set(const Element& gamma, const Rational& n, const Rational& c) {
    if (!module_->contains(gamma)) fail_input("bad-element", "coefficient key is not a module element");
    if (!is_integer(n + module_->qvalue(gamma)))
        fail_input("bad-exponent", "exponent " + to_string(n) + " is not in Z - Q(gamma)");
    if (n < 0 || n >= prec_) fail_input("bad-exponent", "exponent " + to_string(n) + " outside [0, prec)");
    Key key{gamma, n};
    if (c == 0) {
        coeffs_.erase(key);
    } else {
        coeffs_[key] = c;
    }
}

Rational QExpansion::coeff(const Element& gamma, const Rational& n) const {
    auto it = coeffs_.find(Key{gamma, n});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<Rational> QExpansion::exponents(const Element& gamma) const {
    std::vector<Rational> out;
    for (Rational n = frac(-module_->qvalue(gamma)); n < prec_; n += 1) out.push_back(n);
    return out;
}

std::vector<Rational> QExpansion::flatten(const Rational& cutoff) const {
    std::vector<Rational> out;
    for (const auto& g : module_->elements())
        for (const auto& n : exponents(g)) {
            if (n >= cutoff) break;
            out.push_back(coeff(g, n));
        }
    return out;
}

std::vector<std::complex<double>> QExpansion::evaluate(std::complex<double> tau) const {
    std::vector<std::complex<double>> v(module_->size(), 0.0);
    const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
    for (const auto& [key, c] : coeffs_)
        v[module_->index(key.first)] += c.get_d() * std::exp(two_pi_i * key.second.get_d() * tau);
    return v;
}

bool operator==(const QExpansion& a, const QExpansion& b) {
    return a.lattice() == b.lattice() && a.weight_ == b.weight_ && a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    if (!(a.lattice() == b.lattice()) || a.weight() != b.weight())
        fail_input("mismatch", "cannot add expansions of different modules or weights");
    QExpansion out(a.module_ptr(), a.weight(), std::min(a.prec(), b.prec()));
    for (const auto* src : {&a, &b})
        for (const auto& [key, c] : src->coeffs())
            if (key.second < out.prec()) out.set(key.first, key.second, out.coeff(key.first, key.second) + c);
    return out;
}

QExpansion operator*(const Rational& s, const QExpansion& a) {
    QExpansion out(a.module_ptr(), a.weight(), a.prec());
    for (const auto& [key, c] : a.coeffs()) out.set(key.first, key.second, s * c);
    return out;
}

double modularity_residual(const QExpansion& f, const std::vector<std::complex<double>>& taus) {
    if (f.is_zero()) return 0.0;
    const auto& A = f.module();
    const Eigen::MatrixXcd S = A.weil_S();
    const Eigen::MatrixXcd T = A.weil_T();
    const auto n = static_cast<Eigen::Index>(A.size());
    auto to_vec = [n](const std::vector<std::complex<double>>& v) {
        Eigen::VectorXcd out(n);
        for (Eigen::Index i = 0; i < n; ++i) out(i) = v[static_cast<std::size_t>(i)];
        return out;
    };
    double worst = 0.0;
    for (const auto& tau : taus) {
        const Eigen::VectorXcd at_tau = to_vec(f.evaluate(tau));
        const Eigen::VectorXcd at_inv = to_vec(f.evaluate(-1.0 / tau));
        const Eigen::VectorXcd at_shift = to_vec(f.evaluate(tau + 1.0));
        const std::complex<double> automorphy = std::exp(f.weight().to_double() * std::log(tau));
        worst = std::max(worst, (at_inv - automorphy * (S * at_tau)).norm());
        worst = std::max(worst, (at_shift - T * at_tau).norm());
    }
    return worst;
}

std::vector<std::complex<double>> default_modularity_samples() {
    return {{0.0, 1.0}, {0.3, 1.0}, {-0.4, 0.95}};
}

}  // namespace weilforms
