#include "gspingj/linalg.hpp"

#include <algorithm>
#include <climits>

namespace gspingj {

Matrix mat_identity(size_t n) {
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), k = b.size(), mcols = k ? b[0].size() : 0;
    Matrix r(n, std::vector<Rational>(mcols, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < mcols; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

Matrix mat_transpose(const Matrix& a) {
    size_t n = a.size(), m = n ? a[0].size() : 0;
    Matrix r(m, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

std::vector<Rational> mat_apply(const Matrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0) r[i] += a[i][j] * v[j];
    }
    return r;
}

Rational mat_det(Matrix a) {
    size_t n = a.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = Rational(1) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::optional<std::vector<Rational>> mat_solve(Matrix a, std::vector<Rational> b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Rational inv = Rational(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

namespace {

long val_or_big(const Rational& r, unsigned long p) {
    PadicVal v = val_p(r, p);
    return v.infinite ? LONG_MAX / 4 : v.v;
}

} // namespace

LocalSnf local_snf(const Matrix& m_in, unsigned long p) {
    Matrix m = m_in;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    Matrix c = mat_identity(cols); // column operations applied to identity
    std::vector<long> divisors;

    size_t k = 0; // current corner
    while (k < cols) {
        // locate entry of minimal valuation in the remaining block
        long best = LONG_MAX / 2;
        size_t bi = rows, bj = cols;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                long v = val_or_big(m[i][j], p);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows)
            throw std::invalid_argument("local_snf: matrix does not have full column rank");
        std::swap(m[bi], m[k]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][bj], m[i][k]);
        for (size_t i = 0; i < cols; ++i) std::swap(c[i][bj], c[i][k]);

        Rational piv = m[k][k];
        // clear the pivot column with unimodular row ops
        for (size_t i = k + 1; i < rows; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / piv; // val >= 0 by pivot minimality
            for (size_t j = k; j < cols; ++j) m[i][j] -= f * m[k][j];
        }
        // clear the pivot row with unimodular column ops, tracked in c
        for (size_t j = k + 1; j < cols; ++j) {
            if (m[k][j] == 0) continue;
            Rational f = m[k][j] / piv;
            for (size_t i = k; i < rows; ++i) m[i][j] -= f * m[i][k];
            for (size_t i = 0; i < cols; ++i) c[i][j] -= f * c[i][k];
        }
        divisors.push_back(best);
        ++k;
    }

    // preimage lattice basis: columns of C * diag(p^{-d_i})
    Matrix basis(cols, std::vector<Rational>(cols, Rational(0)));
    for (size_t j = 0; j < cols; ++j) {
        Rational s = q_pow(p, -divisors[j]);
        for (size_t i = 0; i < cols; ++i) basis[i][j] = c[i][j] * s;
    }
    return LocalSnf{std::move(divisors), std::move(basis)};
}

Rational lattice_preimage_measure(const Matrix& m, unsigned long p) {
    LocalSnf snf = local_snf(m, p);
    long total = 0;
    for (long d : snf.divisor_vals) total += d;
    return q_pow(p, total);
}

Matrix lattice_span_basis(const Matrix& columns, unsigned long p) {
    size_t rows = columns.size();
    size_t ncols = rows ? columns[0].size() : 0;
    Matrix work = columns;
    Matrix basis;
    std::vector<bool> used_col(ncols, false);
    std::vector<bool> used_row(rows, false);

    for (size_t step = 0; step < rows; ++step) {
        long best = LONG_MAX / 2;
        size_t bi = rows, bj = ncols;
        for (size_t i = 0; i < rows; ++i) {
            if (used_row[i]) continue;
            for (size_t j = 0; j < ncols; ++j) {
                if (used_col[j] || work[i][j] == 0) continue;
                long v = val_or_big(work[i][j], p);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi == rows)
            throw std::invalid_argument("lattice_span_basis: columns do not span the space");
        // eliminate the pivot row from the other columns (unimodular at p)
        for (size_t j = 0; j < ncols; ++j) {
            if (j == bj || used_col[j] || work[bi][j] == 0) continue;
            Rational f = work[bi][j] / work[bi][bj];
            for (size_t i = 0; i < rows; ++i) work[i][j] -= f * work[i][bj];
        }
        used_col[bj] = true;
        used_row[bi] = true;
    }
    for (size_t j = 0; j < ncols; ++j) {
        if (!used_col[j]) continue;
        std::vector<Rational> col(rows);
        for (size_t i = 0; i < rows; ++i) col[i] = work[i][j];
        basis.push_back(std::move(col));
    }
    return mat_transpose(basis); // rows x rank, columns are the basis
}

bool lattice_contains(const Matrix& basis, const std::vector<Rational>& v, unsigned long p) {
    auto sol = mat_solve(basis, v);
    if (!sol) return false;
    for (const Rational& c : *sol)
        if (!val_p(c, p).at_least(0)) return false;
    return true;
}

} // namespace gspingj
