#include "trp/matrix.hpp"

#include <utility>

#include "trp/errors.hpp"

namespace trp {

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix product: shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace detail {

Integer bareiss_determinant(IntMatrix m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

size_t bareiss_rank(IntMatrix m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    Integer prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Integer v = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace detail

namespace {

detail::IntMatrix integer_rows(const RationalMatrix& m) {
    detail::IntMatrix out(m.rows(), std::vector<Integer>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return out;
}

}  // namespace

size_t rank(const RationalMatrix& m) { return detail::bareiss_rank(integer_rows(m)); }

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    Rational scale = 1;
    for (size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= Rational(l);
    }
    return Rational(detail::bareiss_determinant(integer_rows(m))) / scale;
}

std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
    RationalMatrix a = m;
    const size_t rows = a.rows(), cols = a.cols();
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
        Rational inv = 1 / a(r, c);
        for (size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
    const size_t n = m.rows();
    if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
    RationalMatrix a = m, inv = RationalMatrix::identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw DomainError("matrix is singular");
        for (size_t j = 0; j < n; ++j) {
            std::swap(a(c, j), a(p, j));
            std::swap(inv(c, j), inv(p, j));
        }
        Rational f = 1 / a(c, c);
        for (size_t j = 0; j < n; ++j) {
            a(c, j) *= f;
            inv(c, j) *= f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rational g = a(i, c);
            for (size_t j = 0; j < n; ++j) {
                a(i, j) -= g * a(c, j);
                inv(i, j) -= g * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace trp
