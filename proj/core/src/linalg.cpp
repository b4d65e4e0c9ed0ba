#include "weilforms/linalg.hpp"

#include "weilforms/error.hpp"

#include <utility>

namespace weilforms {

IntMatrix identity_int(std::size_t n) {
    IntMatrix I(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) r[i].emplace_back(x);
    return r;
}

Rational determinant(const RatMatrix& input) {
    RatMatrix m = input;
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m) { return to_integer(determinant(to_rational(m))); }

RatMatrix inverse(const RatMatrix& input) {
    const std::size_t n = input.size();
    RatMatrix a = input;
    RatMatrix inv(n, RationalVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) fail_math("singular-matrix", "matrix is not invertible");
        std::swap(a[pivot], a[c]);
        std::swap(inv[pivot], inv[c]);
        Rational p = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= p;
            inv[c][k] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

RationalVector mat_vec(const RatMatrix& m, const RationalVector& v) {
    RationalVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

RationalVector mat_vec(const IntMatrix& m, const RationalVector& v) {
    RationalVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += Rational(m[i][j]) * v[j];
    return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

void row_combine(IntMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
    for (std::size_t k = 0; k < m[target].size(); ++k) m[target][k] -= f * m[source][k];
}

void col_combine(IntMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
    for (auto& row : m) row[target] -= f * row[source];
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    IntMatrix D = A;
    IntMatrix U = identity_int(rows);
    IntMatrix V = identity_int(cols);
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // Move the entry of least absolute value in the trailing block to (t, t).
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (D[i][j] != 0 && (pr == rows || abs(D[i][j]) < abs(D[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) break;
            std::swap(D[t], D[pr]);
            std::swap(U[t], U[pr]);
            swap_cols(D, t, pc);
            swap_cols(V, t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
                row_combine(D, i, t, q);
                row_combine(U, i, t, q);
                if (D[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
                col_combine(D, j, t, q);
                col_combine(V, j, t, q);
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the remaining block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
                        for (std::size_t k = 0; k < cols; ++k) D[t][k] += D[i][k];
                        for (std::size_t k = 0; k < rows; ++k) U[t][k] += U[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : U[t]) x = -x;
        }
    }

    SmithForm out{std::move(U), std::move(V), {}};
    for (std::size_t t = 0; t < n; ++t) out.diagonal.push_back(D[t][t]);
    return out;
}

bool RowEchelon::add(RationalVector v) {
    if (v.size() != width_) fail_math("dimension-mismatch", "row has wrong width");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p] == 0) continue;
        Rational f = v[p];
        for (std::size_t k = p; k < width_; ++k) v[k] -= f * rows_[i][k];
    }
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    Rational lead = v[p];
    for (std::size_t k = p; k < width_; ++k) v[k] /= lead;
    // Keep the stored rows fully reduced so later eliminations stay single-pass.
    for (auto& row : rows_) {
        if (row[p] == 0) continue;
        Rational f = row[p];
        for (std::size_t k = p; k < width_; ++k) row[k] -= f * v[k];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

}  // namespace weilforms
