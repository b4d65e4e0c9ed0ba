#include "weilforms/quadmod.hpp"

#include "weilforms/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace weilforms {

EvenLattice::EvenLattice(IntMatrix gram) : gram_(std::move(gram)) {
    const std::size_t n = gram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) fail_input("gram-shape", "Gram matrix must be square");
        if (gram_[i][i] % 2 != 0) fail_input("gram-odd", "Gram matrix needs an even diagonal");
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i]) fail_input("gram-symmetry", "Gram matrix must be symmetric");
    }
    det_ = n == 0 ? Integer(1) : determinant(gram_);
    if (det_ == 0) fail_input("degenerate-module", "Gram matrix is singular");
    gram_inv_ = n == 0 ? RatMatrix{} : inverse(to_rational(gram_));
}

RationalVector EvenLattice::apply(const RationalVector& v) const { return mat_vec(gram_, v); }

Rational EvenLattice::bilinear(const RationalVector& u, const RationalVector& v) const {
    return dot(u, apply(v));
}

Rational EvenLattice::q(const RationalVector& v) const { return bilinear(v, v) / 2; }

bool EvenLattice::in_dual(const RationalVector& v) const {
    if (v.size() != rank()) return false;
    for (const auto& x : apply(v))
        if (!is_integer(x)) return false;
    return true;
}

EvenLattice EvenLattice::negated() const {
    IntMatrix g = gram_;
    for (auto& row : g)
        for (auto& x : row) x = -x;
    return EvenLattice(std::move(g));
}

int EvenLattice::real_signature() const {
    const auto n = static_cast<Eigen::Index>(rank());
    if (n == 0) return 0;
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = gram_[i][j].get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    int s = 0;
    for (Eigen::Index i = 0; i < n; ++i) s += solver.eigenvalues()(i) > 0 ? 1 : -1;
    return s;
}

std::string EvenLattice::fingerprint() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < gram_.size(); ++j) os << (j ? "," : "") << gram_[i][j].get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

FiniteQuadraticModule::FiniteQuadraticModule(EvenLattice lattice) : lattice_(std::move(lattice)) {
    const std::size_t e = lattice_.rank();
    if (e > 0) {
        SmithForm snf = smith_normal_form(lattice_.gram());
        smith_U_ = snf.U;
        RatMatrix U_inv = inverse(to_rational(snf.U));
        for (std::size_t i = 0; i < e; ++i) {
            if (snf.diagonal[i] == 1) continue;
            kept_.push_back(i);
            orders_.push_back(snf.diagonal[i].get_si());
            RationalVector column(e);
            for (std::size_t r = 0; r < e; ++r) column[r] = U_inv[r][i];
            RationalVector g = mat_vec(lattice_.gram_inverse(), column);
            for (auto& x : g) x = frac(x);
            generators_.push_back(std::move(g));
        }
    }

    std::size_t total = 1;
    for (long d : orders_) total *= static_cast<std::size_t>(d);
    elements_.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Element a(orders_.size());
        std::size_t rest = idx;
        for (std::size_t i = orders_.size(); i-- > 0;) {
            a[i] = static_cast<long>(rest % static_cast<std::size_t>(orders_[i]));
            rest /= static_cast<std::size_t>(orders_[i]);
        }
        elements_.push_back(std::move(a));
    }
    qvalues_.reserve(total);
    for (const auto& a : elements_) qvalues_.push_back(frac(lattice_.q(dual_vector(a))));

    auto g = gauss_sum(*this, Rational(1));
    const double root = std::sqrt(static_cast<double>(total));
    const double turns = std::arg(g) / (2.0 * std::numbers::pi) * 8.0;
    const double nearest = std::round(turns);
    if (std::abs(std::abs(g) - root) > 1e-6 * root || std::abs(turns - nearest) > 1e-6)
        fail_math("signature-inconsistent", "Milgram Gauss sum does not have the expected shape");
    signature_ = static_cast<int>(((static_cast<long>(nearest) % 8) + 8) % 8);
}

Element FiniteQuadraticModule::add(const Element& a, const Element& b) const {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
    return c;
}

Element FiniteQuadraticModule::neg(const Element& a) const {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (orders_[i] - a[i]) % orders_[i];
    return c;
}

Element FiniteQuadraticModule::scale(const Element& a, long k) const {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long v = (a[i] * (k % orders_[i])) % orders_[i];
        c[i] = v < 0 ? v + orders_[i] : v;
    }
    return c;
}

bool FiniteQuadraticModule::contains(const Element& a) const {
    if (a.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= orders_[i]) return false;
    return true;
}

std::size_t FiniteQuadraticModule::index(const Element& a) const {
    if (!contains(a)) fail_input("bad-element", "element does not belong to the module");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(a[i]);
    return idx;
}

RationalVector FiniteQuadraticModule::dual_vector(const Element& a) const {
    RationalVector v(lattice_.rank(), 0);
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t r = 0; r < v.size(); ++r) v[r] += a[i] * generators_[i][r];
    for (auto& x : v) x = frac(x);
    return v;
}

Element FiniteQuadraticModule::from_dual(const RationalVector& v) const {
    if (!lattice_.in_dual(v)) fail_input("not-in-dual", "vector is not in the dual lattice");
    RationalVector y = lattice_.apply(v);
    Element a(orders_.size());
    for (std::size_t i = 0; i < kept_.size(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < y.size(); ++j) s += smith_U_[kept_[i]][j] * to_integer(y[j]);
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), Integer(orders_[i]).get_mpz_t());
        a[i] = r.get_si();
    }
    return a;
}

Rational FiniteQuadraticModule::qvalue(const Element& a) const { return qvalues_[index(a)]; }

Rational FiniteQuadraticModule::bilinear(const Element& a, const Element& b) const {
    return frac(lattice_.bilinear(dual_vector(a), dual_vector(b)));
}

Element FiniteQuadraticModule::orbit_representative(const Element& a) const {
    Element b = neg(a);
    return b < a ? b : a;
}

std::vector<Element> FiniteQuadraticModule::orbit_representatives() const {
    std::vector<Element> reps;
    for (const auto& a : elements_)
        if (orbit_representative(a) == a) reps.push_back(a);
    return reps;
}

namespace {
std::complex<double> e_turns(double x) {
    return std::polar(1.0, 2.0 * std::numbers::pi * x);
}
}  // namespace

Eigen::MatrixXcd FiniteQuadraticModule::weil_S() const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::MatrixXcd S(n, n);
    const auto pre = e_turns(signature_ / 8.0) / std::sqrt(static_cast<double>(n));
    for (Eigen::Index col = 0; col < n; ++col)
        for (Eigen::Index row = 0; row < n; ++row)
            S(row, col) = pre * e_turns(bilinear(elements_[col], elements_[row]).get_d());
    return S;
}

Eigen::MatrixXcd FiniteQuadraticModule::weil_T() const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) T(i, i) = e_turns(-qvalues_[i].get_d());
    return T;
}

std::string FiniteQuadraticModule::element_label(const Element& a) const {
    std::ostringstream os;
    os << "(";
    auto v = dual_vector(a);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    os << ")";
    return os.str();
}

std::complex<double> gauss_sum(const FiniteQuadraticModule& A, const Rational& a) {
    std::complex<double> s = 0;
    for (const auto& g : A.elements()) s += e_turns(frac(a * A.qvalue(g)).get_d());
    return s;
}

EvenLattice enlarge_lattice(const EvenLattice& L, const Rational& m, const RationalVector& beta) {
    if (m <= 0) fail_input("index-mismatch", "index m must be positive");
    if (!L.in_dual(beta)) fail_input("index-mismatch", "beta is not in the dual lattice");
    const Rational corner = L.q(beta) + m;
    if (!is_integer(corner)) fail_input("index-mismatch", "m + Q(beta) is not an integer");
    const std::size_t e = L.rank();
    RationalVector gb = L.apply(beta);
    IntMatrix g(e + 1, std::vector<Integer>(e + 1, 0));
    for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t j = 0; j < e; ++j) g[i][j] = L.gram()[i][j];
        g[i][e] = g[e][i] = to_integer(gb[i]);
    }
    g[e][e] = 2 * to_integer(corner);
    return EvenLattice(std::move(g));
}

CyclicRealisation cyclic_module_lattice(long N) {
    if (N <= 1 || N % 4 != 1) fail_input("unsupported-module", "cyclic realisation needs N = 1 mod 4, N > 1");
    CyclicRealisation out{EvenLattice(IntMatrix{{2, 1}, {1, (1 - N) / 2}}), {}};
    // The generator v0 = G^{-1} e_1 has Q(v0) = -x0^2 / N with x0 = (N + 1) / 2.
    RationalVector v0{out.lattice.gram_inverse()[0][0], out.lattice.gram_inverse()[1][0]};
    Integer x0_inv;
    Integer x0 = (N + 1) / 2;
    mpz_invert(x0_inv.get_mpz_t(), x0.get_mpz_t(), Integer(N).get_mpz_t());
    for (long x = 0; x < N; ++x) {
        long k = (x * x0_inv.get_si()) % N;
        RationalVector v{frac(k * v0[0]), frac(k * v0[1])};
        out.residue_vectors.push_back(std::move(v));
    }
    return out;
}

}  // namespace weilforms
