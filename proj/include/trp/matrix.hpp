#pragma once

#include <cstddef>
#include <vector>

#include "trp/rational.hpp"

namespace trp {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank via fraction-free (Bareiss) elimination on an integer rescaling of the rows.
size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
/// Basis of the right null space {v : m v = 0}, from the reduced row echelon form.
std::vector<std::vector<Rational>> kernel(const RationalMatrix& m);
/// Throws DomainError when singular.
RationalMatrix inverse(const RationalMatrix& m);

namespace detail {

using IntMatrix = std::vector<std::vector<Integer>>;
/// Bareiss determinant of a square integer matrix (destroys its argument).
Integer bareiss_determinant(IntMatrix m);
/// Bareiss rank of an integer matrix (destroys its argument).
size_t bareiss_rank(IntMatrix m);

}  // namespace detail

}  // namespace trp
