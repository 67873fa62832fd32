#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bq {

/// Exact rational scalar. GMP keeps every fraction canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Scalar = mpq_class;

std::string to_string(const Scalar& s);
/// num/den in lowest terms (the two-argument mpq constructor does not reduce).
Scalar rational(long num, long den);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix column_vector(const std::vector<Scalar>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Scalar trace() const;

    std::vector<Scalar> column(std::size_t c) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix rows_subset(const std::vector<std::size_t>& idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    /// [a | b]; both must have the same row count (a zero-column operand is fine).
    static Matrix hstack(const Matrix& a, const Matrix& b);
    /// [a ; b]; both must have the same column count.
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diagonal(const std::vector<Matrix>& blocks);

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    Matrix& operator+=(const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    const std::vector<Scalar>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace bq
