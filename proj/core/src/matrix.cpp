#include "bq/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace bq {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational: zero denominator");
    Scalar r(num, den);
    r.canonicalize();
    return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("Matrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& v)
{
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Scalar Matrix::trace() const
{
    Scalar t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
        t += (*this)(i, i);
    return t;
}

std::vector<Scalar> Matrix::column(std::size_t c) const
{
    std::vector<Scalar> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const
{
    Matrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m(r, j) = (*this)(r, idx[j]);
    return m;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& idx) const
{
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            m(i, c) = (*this)(idx[i], c);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() == 0)
        return b;
    if (b.cols() == 0)
        return a;
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() == 0 && a.cols() == 0)
        return b;
    if (b.rows() == 0 && b.cols() == 0)
        return a;
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix m(a.rows_, b.cols_);
    Scalar t;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (sgn(bkj) == 0)
                    continue;
                t = aik * bkj;
                m(i, j) += t;
            }
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    Matrix m = a;
    m += b;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& b)
{
    if (rows_ != b.rows_ || cols_ != b.cols_)
        throw std::invalid_argument("Matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += b.data_[i];
    return *this;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix difference: shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a)
{
    Matrix m = a;
    for (auto& x : m.data_)
        x *= s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("Matrix apply: shape mismatch");
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            os << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                os << ' ';
            os << m(r, c);
        }
    }
    return os << ']';
}

}  // namespace bq
