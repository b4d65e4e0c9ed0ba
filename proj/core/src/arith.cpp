#include "weilforms/arith.hpp"

#include "weilforms/error.hpp"

#include <algorithm>
#include <cctype>

namespace weilforms {

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (num.size() > 1 && num[0] == '+') num.erase(0, 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-')
        fail_input("parse-rational", "not a rational number: '" + raw + "'");
    Integer n(num), d(den);
    if (d == 0) fail_input("parse-rational", "zero denominator in '" + raw + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
    if (!is_integer(q)) fail_math("not-integral", "expected an integer, got " + to_string(q));
    return q.get_num();
}

bool is_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0 || !is_square(q.get_num()) || !is_square(q.get_den())) return std::nullopt;
    Integer a = sqrt(q.get_num());
    Integer b = sqrt(q.get_den());
    return ratio(a, b);
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) return kInfiniteValuation;
    Integer m = abs(n);
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

Integer power(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational power(const Rational& base, long exponent) {
    if (exponent >= 0) {
        Rational r(power(base.get_num(), static_cast<unsigned long>(exponent)),
                   power(base.get_den(), static_cast<unsigned long>(exponent)));
        r.canonicalize();
        return r;
    }
    if (base == 0) fail_math("division-by-zero", "zero raised to a negative power");
    return power(Rational(1) / base, -exponent);
}

std::map<Integer, unsigned> factor(const Integer& n) {
    std::map<Integer, unsigned> out;
    Integer m = abs(n);
    if (m <= 1) return out;
    auto strip = [&](const Integer& p) {
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++out[p];
        }
    };
    strip(2);
    strip(3);
    for (Integer p = 5; p * p <= m; p += 6) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) break;
        strip(p);
        Integer q = p + 2;
        strip(q);
    }
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
            fail_math("factorization", "could not factor " + to_string(n));
        ++out[m];
    }
    return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (const auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factor(n)) {
        std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int kronecker(const Integer& d, const Integer& n) {
    if (n <= 0) fail_math("kronecker", "Kronecker symbol needs a positive modulus");
    return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t());
}

Integer fundamental_discriminant(const Integer& d) {
    if (d == 0) fail_math("discriminant", "zero has no quadratic field");
    if (d > 0 && is_square(d)) return 1;
    Integer core = d < 0 ? Integer(-1) : Integer(1);
    for (const auto& [p, e] : factor(d))
        if (e % 2 == 1) core *= p;
    Integer r = core % 4;
    if (r < 0) r += 4;
    return r == 1 ? core : Integer(4 * core);
}

HalfInteger HalfInteger::from_rational(const Rational& q) {
    Rational t = 2 * q;
    if (!is_integer(t)) fail_input("weight", "weight must lie in (1/2)Z, got " + to_string(q));
    return HalfInteger(t.get_num().get_si());
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace weilforms
