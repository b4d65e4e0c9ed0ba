#include "weilforms/thetalift.hpp"

#include "weilforms/error.hpp"
#include "weilforms/quadmod.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

namespace weilforms {

void LorentzianGram::validate() const {
    const std::size_t l = s.size();
    if (l == 0) fail_input("bad-gram", "Lorentzian Gram matrix must have rank at least 1");
    const EvenLattice lat(s);  // checks symmetry, even diagonal and nondegeneracy
    if (lat.real_signature() != 2 - static_cast<int>(l))
        fail_input("bad-signature", "Gram matrix must have signature (1, l - 1)");
    if (seed.size() != l) fail_input("bad-seed", "cone seed has the wrong length");
    if (pairing(seed, seed) <= 0) fail_input("bad-seed", "cone seed must have positive norm");
}

Rational LorentzianGram::pairing(const RationalVector& u, const RationalVector& v) const {
    return dot(u, mat_vec(s, v));
}

LorentzianGram doi_naganuma_gram(long D) {
    if (D <= 1 || D % 4 != 1) fail_input("bad-discriminant", "D must be a discriminant = 1 mod 4 and > 1");
    for (const auto& [p, e] : factor(Integer(D)))
        if (e > 1) fail_input("bad-discriminant", "D must be squarefree");
    return LorentzianGram{IntMatrix{{2, 1}, {1, (1 - D) / 2}}, RationalVector{1, 0}};
}

Rational OrthogonalExpansion::coeff(const RationalVector& r) const {
    auto it = coeffs.find(r);
    return it == coeffs.end() ? Rational(0) : it->second;
}

std::vector<RationalVector> positive_cone_points(const LorentzianGram& g, const Rational& bound) {
    g.validate();
    const std::size_t l = g.rank();
    const RatMatrix sinv = inverse(to_rational(g.s));
    std::vector<RationalVector> out;
    if (bound <= 0) return out;

    // With b = S r: b^T P b <= 2 H^2 / <seed, seed> for every r in the cone of height <= H, where
    // P = 2 seed seed^T / <seed, seed> - S^{-1} is positive definite.
    const double norm = g.pairing(g.seed, g.seed).get_d();
    Eigen::MatrixXd P(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            P(i, j) = 2.0 * g.seed[i].get_d() * g.seed[j].get_d() / norm - sinv[i][j].get_d();
    const Eigen::MatrixXd Pinv = P.inverse();
    const double radius = 2.0 * bound.get_d() * bound.get_d() / norm;
    std::vector<long> box(l);
    for (std::size_t i = 0; i < l; ++i)
        box[i] = static_cast<long>(std::ceil(std::sqrt(radius * std::max(Pinv(i, i), 0.0)))) + 1;

    RationalVector b(l);
    std::function<void(std::size_t)> scan = [&](std::size_t i) {
        if (i == l) {
            const RationalVector r = mat_vec(sinv, b);
            const Rational h = dot(b, g.seed);
            if (h <= 0 || h > bound) return;
            if (dot(b, r) <= 0) return;
            out.push_back(r);
            return;
        }
        for (long v = -box[i]; v <= box[i]; ++v) {
            b[i] = v;
            scan(i + 1);
        }
    };
    scan(0);
    std::sort(out.begin(), out.end(), [&](const RationalVector& x, const RationalVector& y) {
        const Rational hx = g.pairing(x, g.seed), hy = g.pairing(y, g.seed);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return out;
}

OrthogonalExpansion theta_lift(const QExpansion& F, const LorentzianGram& g, long k, const Rational& height_bound) {
    g.validate();
    const std::size_t l = g.rank();
    const EvenLattice S(g.s);
    if (!(F.lattice() == S.negated()))
        fail_input("module-mismatch", "input form does not live on the module of -S");
    const HalfInteger expected(2 * k + 2 - static_cast<long>(l));
    if (!(F.weight() == expected))
        fail_input("weight-mismatch", "input weight " + F.weight().str() + " does not match lift weight " +
                                          std::to_string(k) + " (expected " + expected.str() + ")");

    const FiniteQuadraticModule& A = F.module();
    OrthogonalExpansion out{g, k, height_bound, {}};
    for (const auto& r : positive_cone_points(g, height_bound)) {
        const RationalVector b = S.apply(r);
        Integer common = 0;
        for (const auto& x : b) common = gcd(common, to_integer(x));
        Rational total = 0;
        for (const auto& n : divisors(common)) {
            RationalVector lambda(l);
            for (std::size_t i = 0; i < l; ++i) lambda[i] = r[i] / Rational(n);
            const Rational exponent = S.q(lambda);
            if (exponent >= F.prec())
                fail_precision("insufficient-precision", "input expansion lacks exponent " + to_string(exponent));
            const Rational c = F.coeff(A.from_dual(lambda), exponent);
            if (c != 0) total += c * power(Rational(n), k - 1);
        }
        out.coeffs.emplace(r, total);
    }
    return out;
}

OrthogonalExpansion doi_naganuma(long D, const QExpansion& F, const Rational& height_bound) {
    if (!F.weight().is_integral()) fail_input("weight-mismatch", "Hilbert lift needs an integral input weight");
    return theta_lift(F, doi_naganuma_gram(D), F.weight().twice() / 2, height_bound);
}

RationalVector hilbert_conjugate(const RationalVector& r) {
    if (r.size() != 2) fail_input("bad-index", "Hilbert indices have two coordinates");
    return {r[0] + r[1], -r[1]};
}

bool is_self_conjugate(const RationalVector& r) { return r.size() == 2 && r[1] == 0; }

std::string hilbert_label(const RationalVector& r) {
    if (r.size() != 2) fail_input("bad-index", "Hilbert indices have two coordinates");
    return to_string(r[0]) + (r[1] < 0 ? " - " : " + ") + to_string(abs(r[1])) + "w";
}

std::map<Rational, Rational> scalar_series(const OrthogonalExpansion& f) {
    std::map<Rational, Rational> out;
    for (const auto& [r, c] : f.coeffs) {
        if (c == 0) continue;
        out[f.height(r)] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace weilforms
