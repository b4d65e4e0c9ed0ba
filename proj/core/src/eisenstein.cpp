#include "weilforms/eisenstein.hpp"

#include "weilforms/error.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace weilforms {

namespace {

// f(x) = sum_{i<=j} quad[i][j] x_i x_j + lin . x + cst with integer coefficients.
struct QuadPoly {
    std::size_t e = 0;
    std::vector<std::vector<Integer>> quad;
    std::vector<Integer> lin;
    Integer cst;
};

QuadPoly shifted_form(const EvenLattice& L, const RationalVector& gamma, const Rational& n) {
    const std::size_t e = L.rank();
    QuadPoly f;
    f.e = e;
    f.quad.assign(e, std::vector<Integer>(e, 0));
    for (std::size_t i = 0; i < e; ++i) {
        f.quad[i][i] = L.gram()[i][i] / 2;
        for (std::size_t j = i + 1; j < e; ++j) f.quad[i][j] = L.gram()[i][j];
    }
    for (const auto& x : L.apply(gamma)) f.lin.push_back(to_integer(x));
    f.cst = to_integer(L.q(gamma) + n);
    return f;
}

Integer eval_exact(const QuadPoly& f, const std::vector<long>& x) {
    Integer s = f.cst;
    for (std::size_t i = 0; i < f.e; ++i) {
        s += f.lin[i] * x[i];
        for (std::size_t j = i; j < f.e; ++j) s += f.quad[i][j] * x[i] * x[j];
    }
    return s;
}

Integer gradient_exact(const QuadPoly& f, const std::vector<long>& x, std::size_t i) {
    Integer g = f.lin[i] + 2 * f.quad[i][i] * x[i];
    for (std::size_t j = 0; j < f.e; ++j) {
        if (j == i) continue;
        g += (j < i ? f.quad[j][i] : f.quad[i][j]) * x[j];
    }
    return g;
}

long mod_long(const Integer& a, long p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

// delta_0 .. delta_V for the zero set of f modulo powers of p.
std::vector<Rational> density_sequence(long p, const QuadPoly& f, long V) {
    const auto e = static_cast<long>(f.e);
    std::vector<Rational> res(static_cast<std::size_t>(V + 1), 0);
    res[0] = 1;
    if (V == 0) return res;

    // Residues of the coefficients, for the cheap mod-p scan.
    std::vector<std::vector<long>> qm(f.e, std::vector<long>(f.e, 0));
    std::vector<long> lm(f.e);
    for (std::size_t i = 0; i < f.e; ++i) {
        lm[i] = mod_long(f.lin[i], p);
        for (std::size_t j = i; j < f.e; ++j) qm[i][j] = mod_long(f.quad[i][j], p);
    }
    const long cm = mod_long(f.cst, p);

    long nonsingular = 0;
    std::vector<std::vector<long>> singular;
    std::vector<long> x(f.e, 0);
    while (true) {
        long v = cm;
        for (std::size_t i = 0; i < f.e; ++i) {
            v = (v + lm[i] * x[i]) % p;
            for (std::size_t j = i; j < f.e; ++j) v = (v + qm[i][j] * x[i] % p * x[j]) % p;
        }
        if (v == 0) {
            bool grad_zero = true;
            for (std::size_t i = 0; i < f.e && grad_zero; ++i) {
                long g = lm[i] + 2 * qm[i][i] * x[i];
                for (std::size_t j = 0; j < f.e; ++j)
                    if (j != i) g += (j < i ? qm[j][i] : qm[i][j]) * x[j];
                if (g % p != 0) grad_zero = false;
            }
            if (grad_zero) {
                singular.push_back(x);
            } else {
                ++nonsingular;
            }
        }
        std::size_t k = 0;
        while (k < f.e && ++x[k] == p) x[k++] = 0;
        if (k == f.e) break;
    }

    const Rational P(p);
    const Rational hensel = Rational(nonsingular) * power(P, 1 - e);
    for (long nu = 1; nu <= V; ++nu) res[static_cast<std::size_t>(nu)] += hensel;

    for (const auto& x0 : singular) {
        // g(y) = f(x0 + p y): quadratic part p^2 q, linear part p * grad f(x0), constant f(x0).
        QuadPoly g;
        g.e = f.e;
        g.quad = f.quad;
        const Integer p2 = Integer(p) * p;
        long t = kInfiniteValuation;
        for (std::size_t i = 0; i < f.e; ++i)
            for (std::size_t j = i; j < f.e; ++j) {
                g.quad[i][j] *= p2;
                t = std::min(t, valuation(g.quad[i][j], p));
            }
        for (std::size_t i = 0; i < f.e; ++i) {
            g.lin.push_back(p * gradient_exact(f, x0, i));
            t = std::min(t, valuation(g.lin.back(), p));
        }
        g.cst = eval_exact(f, x0);
        t = std::min(t, valuation(g.cst, p));
        if (t >= kInfiniteValuation) fail_math("density-degenerate", "polynomial vanishes identically");

        std::vector<Rational> sub;
        for (long nu = 1; nu <= V; ++nu) {
            if (nu <= t) {
                res[static_cast<std::size_t>(nu)] += power(P, nu - e);
                continue;
            }
            if (sub.empty()) {
                const Integer pt = power(Integer(p), static_cast<unsigned long>(t));
                for (auto& row : g.quad)
                    for (auto& c : row) c /= pt;
                for (auto& c : g.lin) c /= pt;
                g.cst /= pt;
                sub = density_sequence(p, g, V - t);
            }
            res[static_cast<std::size_t>(nu)] += power(P, t - e) * sub[static_cast<std::size_t>(nu - t)];
        }
    }
    return res;
}

std::string vector_key(const RationalVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s;
}

RationalVector reduced(const RationalVector& v) {
    RationalVector out = v;
    for (auto& x : out) x = frac(x);
    return out;
}

}  // namespace

LocalDensityRecord local_density(const Integer& p, const EvenLattice& L, const Rational& n,
                                 const RationalVector& gamma) {
    if (n <= 0) fail_input("bad-exponent", "local densities need n > 0");
    if (!L.in_dual(gamma)) fail_input("not-in-dual", "gamma is not in the dual lattice");
    if (!is_integer(n + L.q(gamma))) fail_input("bad-exponent", "n + Q(gamma) is not an integer");
    if (!mpz_fits_slong_p(p.get_mpz_t())) fail_input("prime-too-large", "prime out of range for counting");
    const long pl = p.get_si();
    const QuadPoly f = shifted_form(L, gamma, n);
    const long nu0 = valuation(n.get_num() * n.get_den(), p) + 2 * valuation(2 * L.det(), p) + 3;
    for (long V = nu0; V <= nu0 + 10; V += 2) {
        auto d = density_sequence(pl, f, V);
        const auto last = static_cast<std::size_t>(V);
        if (d[last] == d[last - 1] && d[last - 1] == d[last - 2])
            return LocalDensityRecord{p, V, d[last], std::move(d)};
    }
    fail_math("stabilization-failure", "local density at p = " + to_string(p) + " did not stabilise");
}

LocalDensityRecord local_density_good_prime(const Integer& p, const EvenLattice& L, const Rational& n) {
    const long e = static_cast<long>(L.rank());
    if (p == 2 || mpz_divisible_p(L.det().get_mpz_t(), p.get_mpz_t()))
        fail_input("bad-prime", "closed form needs an odd prime not dividing det");
    if (n <= 0) fail_input("bad-exponent", "local densities need n > 0");
    const Rational P(p);
    const Rational scale = power(P, 1 - e);

    // Zero counts of Q(y) = t modulo p for t a unit and for t = 0.
    Rational z_unit, z_zero;
    auto z_for = [&](const Integer& t_num_times_den) {
        if (e % 2 == 0) {
            const Integer sgn = (e / 2) % 2 == 0 ? 1 : -1;
            const int eps = kronecker(sgn * L.det(), p);
            z_zero = power(P, e - 1) + eps * (P - 1) * power(P, e / 2 - 1);
            z_unit = power(P, e - 1) - eps * power(P, e / 2 - 1);
        } else {
            const Integer sgn = ((e - 1) / 2) % 2 == 0 ? 1 : -1;
            const int eta = kronecker(sgn * t_num_times_den * 2 * L.det(), p);
            z_zero = power(P, e - 1);
            z_unit = power(P, e - 1) + eta * power(P, (e - 1) / 2);
        }
    };

    // Represent t = -n = tn / td with p not dividing td.
    Integer tn = -n.get_num();
    const Integer td = n.get_den();
    if (mpz_divisible_p(td.get_mpz_t(), p.get_mpz_t()))
        fail_math("bad-exponent", "exponent has p in its denominator at a good prime");

    const long v_total = valuation(tn, p);
    const long V = v_total + 3;
    std::vector<Rational> d(static_cast<std::size_t>(V + 1), 0);
    // Fill delta for t / p^{2j}, innermost first.
    std::vector<Integer> chain{tn};
    while (valuation(chain.back(), p) >= 2) chain.push_back(chain.back() / (p * p));
    std::vector<Rational> inner;
    for (std::size_t level = chain.size(); level-- > 0;) {
        const Integer& t = chain[level];
        const long v = valuation(t, p);
        const long len = V - 2 * static_cast<long>(level);
        std::vector<Rational> cur(static_cast<std::size_t>(len + 1), 0);
        cur[0] = 1;
        z_for(t * td);
        for (long nu = 1; nu <= len; ++nu) {
            Rational& c = cur[static_cast<std::size_t>(nu)];
            if (v == 0) {
                c = z_unit * scale;
            } else if (nu == 1) {
                c = z_zero * scale;
            } else if (v == 1) {
                c = (z_zero - 1) * scale;
            } else {
                c = (z_zero - 1) * scale + power(P, 2 - e) * inner[static_cast<std::size_t>(nu - 2)];
            }
        }
        inner = std::move(cur);
    }
    d = std::move(inner);
    return LocalDensityRecord{p, V, d.back(), std::move(d)};
}

Rational local_factor(const LocalDensityRecord& rec, long rank, const Rational& kappa) {
    const Rational ex = ratio(rank, 2) - kappa;
    if (!is_integer(ex)) fail_math("weight-parity", "rank/2 - kappa must be an integer");
    const Rational X = power(Rational(rec.prime), to_integer(ex).get_si());
    Rational sum = 0, prev = 0, Xnu = 1;
    for (const auto& d : rec.deltas) {
        sum += (d - prev) * Xnu;
        prev = d;
        Xnu *= X;
    }
    return sum;
}

Rational bernoulli_number(unsigned n) {
    static std::mutex lock;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> guard(lock);
    while (table.size() <= n) {
        const unsigned m = static_cast<unsigned>(table.size());
        Rational s = 0;
        Integer binom = 1;  // C(m + 1, j)
        for (unsigned j = 0; j < m; ++j) {
            s += Rational(binom) * table[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        table.push_back(-s / (m + 1));
    }
    return table[n];
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
    Rational s = 0;
    Integer binom = 1;
    for (unsigned j = 0; j <= n; ++j) {
        s += Rational(binom) * bernoulli_number(j) * power(x, static_cast<long>(n - j));
        binom = binom * (n - j) / (j + 1);
    }
    return s;
}

Rational generalized_bernoulli(const Integer& d0, unsigned n) {
    if (n == 0) fail_input("bernoulli-index", "generalized Bernoulli numbers need n >= 1");
    const Integer f = abs(d0);
    Rational s = 0;
    for (Integer a = 1; a <= f; ++a) {
        const int chi = kronecker(d0, a);
        if (chi != 0) s += chi * bernoulli_polynomial(n, ratio(a, f));
    }
    return power(Rational(f), static_cast<long>(n) - 1) * s;
}

DensityCache::DensityCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) fail_input("cache-dir", "cannot create cache directory " + dir_.string());
}

std::filesystem::path DensityCache::path_for(const std::string& key) const {
    std::ostringstream name;
    name << std::hex << fnv1a64(key) << ".dens";
    return dir_ / name.str();
}

std::optional<std::vector<Rational>> DensityCache::load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::string header, stored_key, line;
    if (!std::getline(in, header) || header != kSchema) return std::nullopt;
    if (!std::getline(in, stored_key) || stored_key != key) return std::nullopt;
    std::vector<Rational> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(parse_rational(line));
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

void DensityCache::store(const std::string& key, const std::vector<Rational>& deltas) const {
    const auto target = path_for(key);
    auto tmp = target;
    std::ostringstream suffix;
    suffix << ".tmp" << std::hash<std::thread::id>{}(std::this_thread::get_id());
    tmp += suffix.str();
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << kSchema << "\n" << key << "\n";
        for (const auto& d : deltas) out << to_string(d) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

EisensteinSeries::EisensteinSeries(EvenLattice lattice, HalfInteger weight, std::shared_ptr<const DensityCache> disk)
    : module_(std::make_shared<const FiniteQuadraticModule>(std::move(lattice))),
      weight_(weight),
      disk_(std::move(disk)) {
    if (weight_.twice() < 5) fail_input("unsupported-weight", "Eisenstein weight must be at least 5/2");
    long t = (weight_.twice() + module_->signature()) % 4;
    symmetric_ = t == 0;
}

Rational EisensteinSeries::coefficient(const Element& gamma, const Rational& n) const {
    return coefficient(module_->dual_vector(gamma), n);
}

Rational EisensteinSeries::coefficient(const RationalVector& gamma_in, const Rational& n) const {
    const EvenLattice& L = module_->lattice();
    if (!L.in_dual(gamma_in)) fail_input("not-in-dual", "gamma is not in the dual lattice");
    const RationalVector gamma = reduced(gamma_in);
    if (n < 0 || !is_integer(n + L.q(gamma))) return 0;
    if (n == 0) {
        for (const auto& x : gamma)
            if (x != 0) return 0;
        return 1;
    }
    if (!symmetric_) return 0;

    const std::string key = vector_key(gamma) + "|" + to_string(n);
    {
        std::shared_lock<std::shared_mutex> read(memo_lock_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Rational value = compute(gamma, n);
    std::unique_lock<std::shared_mutex> write(memo_lock_);
    memo_.emplace(key, value);
    return value;
}

Rational EisensteinSeries::local_term(const Integer& p, const RationalVector& gamma, const Rational& n) const {
    const EvenLattice& L = module_->lattice();
    const Rational kappa = weight_.value();
    const auto rank = static_cast<long>(L.rank());
    if (p != 2 && !mpz_divisible_p(L.det().get_mpz_t(), p.get_mpz_t()))
        return local_factor(local_density_good_prime(p, L, n), rank, kappa);

    const std::string key = L.fingerprint() + "|" + to_string(p) + "|" + to_string(n) + "|" + vector_key(gamma);
    if (disk_) {
        if (auto hit = disk_->load(key)) {
            LocalDensityRecord rec{p, static_cast<long>(hit->size()) - 1, hit->back(), std::move(*hit)};
            return local_factor(rec, rank, kappa);
        }
    }
    LocalDensityRecord rec = local_density(p, L, n, gamma);
    if (disk_) disk_->store(key, rec.deltas);
    return local_factor(rec, rank, kappa);
}

Rational EisensteinSeries::compute(const RationalVector& gamma, const Rational& n) const {
    const EvenLattice& L = module_->lattice();
    const auto e = static_cast<long>(L.rank());
    const Integer det = L.det();
    const Rational order(abs(det));
    const Rational kappa = weight_.value();

    const long quarter = (weight_.twice() + module_->signature()) / 4;
    const int phase = quarter % 2 == 0 ? 1 : -1;

    std::set<Integer> bad{Integer(2)};
    for (const auto& p : prime_divisors(det)) bad.insert(p);
    for (const auto& p : prime_divisors(n.get_num())) bad.insert(p);
    for (const auto& p : prime_divisors(n.get_den())) bad.insert(p);

    auto need_sqrt = [](const Rational& x) {
        auto r = rational_sqrt(x);
        if (!r) fail_math("irrational-coefficient", "square-root factor " + to_string(x) + " is irrational");
        return *r;
    };

    if (e % 2 == 0) {
        const long k = to_integer(kappa).get_si();
        const Integer D = ((e / 2) % 2 == 0 ? 1 : -1) * det;
        const Integer d0 = fundamental_discriminant(D);
        const Integer f = abs(d0);
        const long a = d0 > 0 ? 0 : 1;
        if ((k - a) % 2 != 0) fail_math("character-parity", "weight and character parity disagree");
        const long half = (k - a) / 2;
        Rational val = ((1 + half) % 2 == 0 ? 1 : -1) * phase * 2 * k;
        val *= power(Rational(f), k - 1) * need_sqrt(Rational(f) / order) * power(n, k - 1);
        val /= generalized_bernoulli(d0, static_cast<unsigned>(k));
        for (const auto& p : bad) {
            const Rational euler = 1 - kronecker(d0, p) * power(Rational(p), -k);
            val *= local_term(p, gamma, n) / euler;
        }
        return val;
    }

    const long s = to_integer(kappa - ratio(1, 2)).get_si();
    const Integer Dp = (((e + 1) / 2) % 2 == 0 ? 1 : -1) * 2 * det * n.get_num() * n.get_den();
    const Integer d0 = fundamental_discriminant(Dp);
    const Integer f = abs(d0);
    const long a = d0 > 0 ? 0 : 1;
    if ((s - a) % 2 != 0) fail_math("character-parity", "weight and character parity disagree");
    const long sign_exp = (s - a) / 2 - s;
    Rational val = (sign_exp % 2 == 0 ? 1 : -1) * phase;
    val *= power(Rational(4), s) * power(Rational(f), -s) * power(n, s);
    val *= need_sqrt(2 * Rational(f) / (n * order));
    val *= generalized_bernoulli(d0, static_cast<unsigned>(s)) / bernoulli_number(static_cast<unsigned>(2 * s));
    for (const auto& p : bad) {
        const Rational P(p);
        const Rational num = 1 - kronecker(d0, p) * power(P, -s);
        const Rational den = 1 - power(P, -2 * s);
        val *= local_term(p, gamma, n) * num / den;
    }
    return val;
}

QExpansion eisenstein_qexp(const EvenLattice& L, HalfInteger k, const Rational& prec, const ParallelFor& pfor,
                           std::shared_ptr<const DensityCache> disk) {
    EisensteinSeries E(L, k, std::move(disk));
    QExpansion out(E.module_ptr(), k, prec);
    if (!E.nonvanishing()) return out;
    std::vector<std::pair<Element, Rational>> tasks;
    for (const auto& g : E.module().elements())
        for (const auto& n : out.exponents(g)) tasks.emplace_back(g, n);
    std::vector<Rational> values(tasks.size());
    pfor(tasks.size(), [&](std::size_t i) { values[i] = E.coefficient(tasks[i].first, tasks[i].second); });
    for (std::size_t i = 0; i < tasks.size(); ++i) out.set(tasks[i].first, tasks[i].second, values[i]);
    return out;
}

}  // namespace weilforms
