#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bq/matrix.hpp"

namespace bq {

struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Pivot choice: first nonzero column, smallest row index.
Echelon echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

struct RankAndBases {
    std::size_t rank = 0;
    Matrix kernel_basis;  // cols x nullity, columns are a basis of ker(m)
    Matrix image_basis;   // rows x rank, columns are the reduced echelon basis of im(m)
};

RankAndBases rank_and_bases(const Matrix& m);

Matrix kernel(const Matrix& m);
/// Reduced echelon basis of the column space, as columns.
Matrix column_space(const Matrix& m);

/// Solution x of a * x = b (particular solution with free variables zero),
/// or nullopt when the system is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Least-degree monic polynomial annihilating a square matrix; coefficients
/// listed from the constant term upwards.
std::vector<Scalar> minimal_polynomial(const Matrix& op);

/// Columns of `extra` that extend the column space of `base`, chosen greedily
/// left to right (deterministic complement).
std::vector<std::size_t> extending_columns(const Matrix& base, const Matrix& extra);

/// Coordinates with respect to a basis of a subspace (columns of `basis`,
/// linearly independent). Uses an invertible square minor on pivot rows.
class SubspaceCoordinates {
public:
    SubspaceCoordinates() = default;
    explicit SubspaceCoordinates(const Matrix& basis);
    /// Coordinates of the columns of v (which must lie in the span).
    Matrix coordinates(const Matrix& v) const;
    std::size_t dimension() const { return dim_; }

private:
    std::size_t dim_ = 0;
    std::vector<std::size_t> pivot_rows_;
    Matrix minor_inverse_;
};

Matrix inverse(const Matrix& m);  // throws std::domain_error if singular

/// Sparse linear system helper: rows are maps column -> coefficient.
using SparseRow = std::map<std::size_t, Scalar>;

/// Basis of {x : row . x = 0 for every row}, as columns of an ncols x k matrix.
Matrix sparse_nullspace(std::vector<SparseRow> rows, std::size_t ncols);

/// Incremental sparse reduced echelon basis. Column order is the caller's
/// priority: lower column index = pivot preferred.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t ncols) : ncols_(ncols) {}
    /// Reduces and inserts a row; returns true if it increased the rank.
    bool insert(SparseRow row);
    /// Fully reduces all rows (back substitution).
    void finish();
    std::size_t rank() const { return rows_.size(); }
    const std::map<std::size_t, SparseRow>& rows() const { return rows_; }
    bool is_pivot(std::size_t c) const { return rows_.count(c) != 0; }
    SparseRow reduce(SparseRow row) const;

private:
    std::size_t ncols_;
    std::map<std::size_t, SparseRow> rows_;  // keyed by pivot column
};

namespace poly {

using Poly = std::vector<Scalar>;  // constant term first, no trailing zeros

void normalize(Poly& p);
int degree(const Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
Poly monic(const Poly& p);
Poly power(const Poly& p, unsigned k);
/// Distinct rational roots, found by the rational root theorem (bounded search).
std::vector<Scalar> rational_roots(const Poly& p);
/// Root multiplicity of x - r in p.
unsigned multiplicity(const Poly& p, const Scalar& r);
Matrix evaluate(const Poly& p, const Matrix& m);

}  // namespace poly

}  // namespace bq
