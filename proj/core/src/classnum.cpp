#include "weilforms/classnum.hpp"

#include "weilforms/error.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>

namespace weilforms {

namespace {

std::shared_mutex hurwitz_lock;
std::vector<Rational> hurwitz_table;  // H(d) for d < size, grown on demand

Rational hurwitz_uncached(long d) {
    if (d == 0) return ratio(-1, 12);
    if (d % 4 == 1 || d % 4 == 2) return 0;
    // Reduced forms (a, b, c): |b| <= a <= c, b^2 - 4ac = -d, b >= 0 when |b| = a or a = c.
    Rational total = 0;
    for (long a = 1; 3 * a * a <= d; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            const long num = b * b + d;
            if (num % (4 * a) != 0) continue;
            const long c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (a == b && b == c) {
                total += ratio(1, 3);
            } else if (b == 0 && a == c) {
                total += ratio(1, 2);
            } else {
                total += 1;
            }
        }
    }
    return total;
}

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Rational hurwitz(long d) {
    if (d < 0) return 0;
    const auto idx = static_cast<std::size_t>(d);
    {
        std::shared_lock<std::shared_mutex> read(hurwitz_lock);
        if (idx < hurwitz_table.size()) return hurwitz_table[idx];
    }
    std::unique_lock<std::shared_mutex> write(hurwitz_lock);
    while (hurwitz_table.size() <= idx)
        hurwitz_table.push_back(hurwitz_uncached(static_cast<long>(hurwitz_table.size())));
    return hurwitz_table[idx];
}

int QSqrt5::sign() const {
    const int sx = sgn(x);
    const int sy = sgn(y);
    if (sx == 0) return sy;
    if (sy == 0 || sx == sy) return sx;
    return x * x > 5 * y * y ? sx : sy;
}

bool QSqrt5::in_ring_of_integers() const {
    const Rational tx = 2 * x, ty = 2 * y;
    if (!is_integer(tx) || !is_integer(ty)) return false;
    const Integer diff = tx.get_num() - ty.get_num();
    return mpz_even_p(diff.get_mpz_t()) != 0;
}

double QSqrt5::to_double() const { return x.get_d() + y.get_d() * std::sqrt(5.0); }

QSqrt5 operator/(const QSqrt5& a, const QSqrt5& b) {
    const Rational n = b.norm();
    if (n == 0) fail_math("division-by-zero", "division by zero in Q(sqrt 5)");
    const QSqrt5 t = a * b.conj();
    return {t.x / n, t.y / n};
}

QSqrt5 golden_unit() { return {ratio(1, 2), ratio(1, 2)}; }
QSqrt5 square_unit() { return {ratio(3, 2), ratio(1, 2)}; }

std::vector<QSqrt5> ideals_of_norm_q5(long M) {
    if (M < 1) fail_input("bad-norm", "ideal norm must be positive");
    const QSqrt5 u = square_unit();
    const QSqrt5 u2 = u * u;
    std::vector<QSqrt5> out;
    // mu = (A + B sqrt5)/2 with A^2 - 5B^2 = 4M; the window forces 0 <= B < u sqrt(M/5).
    const long bound = static_cast<long>(std::floor(2.62 * std::sqrt(static_cast<double>(M) / 5.0))) + 2;
    for (long B = 0; B <= bound; ++B) {
        const Integer A2 = Integer(4) * M + Integer(5) * B * B;
        if (!is_square(A2)) continue;
        const Integer A = sqrt(A2);
        if ((A - B) % 2 != 0) continue;
        const QSqrt5 mu{ratio(A, 2), ratio(B, 2)};
        if ((u2 * mu.conj() - mu).sign() <= 0) continue;
        out.push_back(mu);
    }
    return out;
}

std::vector<IdealWitness> ideal_witnesses_q5(long M) {
    const long r = mod_pos(M, 5);
    if (r != 1 && r != 4) fail_input("unsupported-norm", "witness congruences are defined for norms = 1, 4 mod 5");
    const long c_class = r == 4 ? 4 : 3;
    const long a_class = r == 4 ? 1 : 2;
    const QSqrt5 eps = golden_unit();
    const QSqrt5 eps_inv = eps.conj() * QSqrt5{Rational(-1), Rational(0)};
    const QSqrt5 u = square_unit();
    const QSqrt5 u_inv = u.conj();
    constexpr int kReach = 10;

    std::vector<IdealWitness> out;
    for (const auto& mu : ideals_of_norm_q5(M)) {
        // Walk through the associates +-mu eps^j and keep the best c-class candidate.
        std::vector<std::pair<int, QSqrt5>> associates;
        QSqrt5 g = mu;
        for (int j = 0; j <= kReach; ++j, g = g * eps) associates.emplace_back(j, g);
        g = mu * eps_inv;
        for (int j = -1; j >= -kReach; --j, g = g * eps_inv) associates.emplace_back(j, g);

        std::optional<std::pair<int, QSqrt5>> best;
        auto better = [](const QSqrt5& p, const QSqrt5& q) {
            return std::make_tuple(p.x, abs(p.y), p.y < 0) < std::make_tuple(q.x, abs(q.y), q.y < 0);
        };
        for (const auto& [j, h0] : associates)
            for (int s : {1, -1}) {
                const QSqrt5 h{s * h0.x, s * h0.y};
                if (h.x <= 0) continue;
                if (mod_pos(to_integer(h.trace()).get_si(), 5) != c_class) continue;
                if (!best || better(h, best->second)) best = std::make_pair(j, h);
            }
        if (!best || std::abs(best->first) >= kReach)
            fail_math("witness-search", "no minimal-trace generator found near the reduced generator");
        const QSqrt5 c = best->second;
        const QSqrt5 a = c * (c.y >= 0 ? u : u_inv);
        if (a.x <= 0 || mod_pos(to_integer(a.trace()).get_si(), 5) != a_class)
            fail_math("witness-congruence", "paired generator misses its trace class");
        out.push_back(IdealWitness{M, mu, a.x, a.y, c.x, c.y});
    }
    return out;
}

Rational witness_summand(const IdealWitness& w) {
    return 7 * (w.c * w.c - w.a * w.a) - 30 * (abs(w.c * w.d) - abs(w.a * w.b)) + 35 * (w.d * w.d - w.b * w.b);
}

Prop10Result prop10_check(int variant, long n) {
    if (variant != 1 && variant != 2) fail_input("bad-variant", "variant must be i or ii");
    if (n < 0) fail_input("bad-index", "n must be nonnegative");
    const Rational shift = variant == 1 ? ratio(4, 5) : ratio(-2, 5);
    const long lin = variant == 1 ? -8 : 4;
    Prop10Result res;
    const long reach = static_cast<long>(std::sqrt(static_cast<double>(n))) + 3;
    for (long r = -reach; r <= reach; ++r) {
        const long d = 4 * n - 5 * r * r + lin * r;
        if (d >= 0) res.lhs += (r + shift) * hurwitz(d);
    }
    const long M = variant == 1 ? 5 * n + 4 : 5 * n + 1;
    Rational sum = 0;
    for (const auto& w : ideal_witnesses_q5(M)) sum += witness_summand(w);
    res.rhs = -sum / 150;
    res.equal = res.lhs == res.rhs;
    return res;
}

Remark12Result remark12_check(long n) {
    if (n < 1) fail_input("bad-index", "n must be positive");
    Remark12Result res;
    const long reach = 2 * static_cast<long>(std::sqrt(static_cast<double>(n))) + 2;
    for (long r = -reach; r <= reach; ++r) {
        const long d = 4 * n - r * r;
        if (d < 0) continue;
        const long cls = mod_pos(r, 3);
        if (cls == 1) res.lhs1 += r * hurwitz(d);
        if (cls == 2) res.lhs2 += r * hurwitz(d);
    }
    Rational sum = 0;
    for (const auto& d : divisors(Integer(n))) {
        const Integer other = Integer(n) / d;
        const Integer m = std::min(d, other);
        sum += kronecker(d, Integer(3)) * Rational(m * m);
    }
    const Rational eps = n % 3 == 0 ? Rational(-1) : ratio(1, 2);
    res.rhs = eps * sum;
    res.equal = res.lhs1 == res.rhs && res.lhs2 == -res.rhs;
    return res;
}

Rational unit_orbit_correction(const Rational& n, long x_in, long N) {
    if (N != 5 && N != 9) fail_input("unsupported-module", "correction term is available for N = 5 and N = 9");
    const long x = mod_pos(x_in, N);
    if (n <= 0) fail_input("bad-exponent", "correction term needs n > 0");
    if (!is_integer(n - ratio(x * x, N))) fail_input("bad-exponent", "exponent does not match the component");
    const Rational r0 = frac(ratio(2 * x, N));

    if (N == 9) {
        // (9r)^2 - s^2 = 36 n with s = 9 sqrt(r^2 - 4n/9); factor 36n = (R - s)(R + s).
        const Integer K = to_integer(36 * n);
        Rational total = 0;
        for (const auto& lo : divisors(K)) {
            const Integer hi = K / lo;
            if (lo > hi || (lo + hi) % 2 != 0) continue;
            const Integer s = (hi - lo) / 2;
            for (int sg : {1, -1}) {
                const Rational r = ratio(sg * (lo + hi) / 2, 9);
                if (!is_integer(r - r0)) continue;
                const Rational gap = abs(r) - ratio(s, 9);
                const long A = s == 0 ? -24 : -48;
                total += sg * A * gap * gap;
            }
        }
        return total * ratio(27, 32);
    }

    // N = 5: totally positive nu = (J + T sqrt5)/2 of norm 5n, one per orbit of u^2 = (7 + 3 sqrt5)/2,
    // each orbit summed as a geometric series.
    const Integer nn = to_integer(5 * n);
    const QSqrt5 u = square_unit();
    const QSqrt5 u2 = u * u;
    const QSqrt5 one{Rational(1), Rational(0)};
    QSqrt5 S{Rational(0), Rational(0)};
    const long bound = static_cast<long>(std::floor(2.62 * std::sqrt(n.get_d()))) + 2;
    for (long T = 0; T <= bound; ++T) {
        const Integer J2 = 4 * nn + Integer(5) * T * T;
        if (!is_square(J2)) continue;
        const Integer J = sqrt(J2);
        const QSqrt5 nu{ratio(J, 2), ratio(T, 2)};
        if ((u2 * nu.conj() - nu).sign() <= 0) continue;
        int s0 = 0;
        if (is_integer(ratio(J, 5) - r0)) ++s0;
        if (is_integer(ratio(-J, 5) - r0)) --s0;
        if (s0 == 0) continue;
        const QSqrt5 nup = nu.conj();
        const QSqrt5 term = (nup * nup * u2 - nu * nu) / (u2 + one);
        S = S + QSqrt5{s0 * term.x, s0 * term.y};
    }
    // C = -(3 sqrt5 / 5) S must be rational.
    if (S.x != 0) fail_math("irrational-correction", "weight-three correction is not rational");
    return -3 * S.y;
}

}  // namespace weilforms
