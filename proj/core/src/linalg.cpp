#include "bq/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bq {

Echelon echelon(const Matrix& m)
{
    Echelon e{m, {}};
    Matrix& a = e.rref;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && sgn(a(piv, col)) == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a(piv, c), a(row, c));
        Scalar inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c)
            a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || sgn(a(r, col)) == 0)
                continue;
            Scalar f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (sgn(a(row, c)) != 0)
                    a(r, c) -= f * a(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

static Matrix kernel_from_echelon(const Echelon& e, std::size_t cols)
{
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c])
            free.push_back(c);
    Matrix k(cols, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        k(free[j], j) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k(e.pivots[r], j) = -e.rref(r, free[j]);
    }
    return k;
}

Matrix kernel(const Matrix& m) { return kernel_from_echelon(echelon(m), m.cols()); }

Matrix column_space(const Matrix& m)
{
    Echelon e = echelon(m.transpose());
    Matrix basis(m.rows(), e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        for (std::size_t r = 0; r < m.rows(); ++r)
            basis(r, j) = e.rref(j, r);
    return basis;
}

RankAndBases rank_and_bases(const Matrix& m)
{
    Echelon e = echelon(m);
    RankAndBases out;
    out.rank = e.pivots.size();
    out.kernel_basis = kernel_from_echelon(e, m.cols());
    out.image_basis = column_space(m);
    return out;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_linear: row mismatch");
    Matrix aug(a.rows(), a.cols() + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    Echelon e = echelon(aug);
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols())
            return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(e.pivots[r], c) = e.rref(r, a.cols() + c);
    }
    return x;
}

std::vector<Scalar> minimal_polynomial(const Matrix& op)
{
    if (!op.is_square())
        throw std::invalid_argument("minimal_polynomial: not square");
    const std::size_t n = op.rows();
    // Krylov sequence of powers, vectorized; stop at the first dependency.
    std::vector<Matrix> powers{Matrix::identity(n)};
    while (true) {
        const std::size_t k = powers.size();
        Matrix stacked(n * n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n * n; ++i)
                stacked(i, j) = powers[j].data()[i];
        Matrix next = powers.back() * op;
        auto sol = solve_linear(stacked, Matrix::column_vector(next.data()));
        if (sol) {
            std::vector<Scalar> coeffs(k + 1);
            for (std::size_t j = 0; j < k; ++j)
                coeffs[j] = -(*sol)(j, 0);
            coeffs[k] = 1;
            return coeffs;
        }
        powers.push_back(std::move(next));
    }
}

std::vector<std::size_t> extending_columns(const Matrix& base, const Matrix& extra)
{
    std::vector<std::size_t> chosen;
    SparseEchelon ech(std::max(base.rows(), extra.rows()));
    auto to_row = [](const Matrix& m, std::size_t c) {
        SparseRow row;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (sgn(m(r, c)) != 0)
                row.emplace(r, m(r, c));
        return row;
    };
    for (std::size_t c = 0; c < base.cols(); ++c)
        ech.insert(to_row(base, c));
    for (std::size_t c = 0; c < extra.cols(); ++c)
        if (ech.insert(to_row(extra, c)))
            chosen.push_back(c);
    return chosen;
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw std::domain_error("inverse: not square");
    auto sol = solve_linear(m, Matrix::identity(m.rows()));
    if (!sol || rank(m) != m.rows())
        throw std::domain_error("inverse: singular matrix");
    return *sol;
}

SubspaceCoordinates::SubspaceCoordinates(const Matrix& basis) : dim_(basis.cols())
{
    if (dim_ == 0)
        return;
    Echelon e = echelon(basis.transpose());
    if (e.pivots.size() != dim_)
        throw std::invalid_argument("SubspaceCoordinates: dependent basis");
    pivot_rows_ = e.pivots;
    minor_inverse_ = inverse(basis.rows_subset(pivot_rows_));
}

Matrix SubspaceCoordinates::coordinates(const Matrix& v) const
{
    if (dim_ == 0)
        return Matrix(0, v.cols());
    return minor_inverse_ * v.rows_subset(pivot_rows_);
}

// --- sparse elimination -------------------------------------------------

static void axpy(SparseRow& row, const Scalar& f, const SparseRow& other)
{
    // row -= f * other
    for (const auto& [c, v] : other) {
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, -f * v);
        } else {
            it->second -= f * v;
            if (sgn(it->second) == 0)
                row.erase(it);
        }
    }
}

SparseRow SparseEchelon::reduce(SparseRow row) const
{
    auto it = row.begin();
    while (it != row.end()) {
        auto piv = rows_.find(it->first);
        if (piv == rows_.end()) {
            ++it;
            continue;
        }
        std::size_t col = it->first;
        Scalar f = it->second;
        axpy(row, f, piv->second);
        it = row.upper_bound(col);
    }
    return row;
}

bool SparseEchelon::insert(SparseRow row)
{
    for (auto it = row.begin(); it != row.end();)
        it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
    // Leading-term reduction only; full reduction happens in finish().
    while (!row.empty()) {
        auto lead = row.begin();
        auto piv = rows_.find(lead->first);
        if (piv == rows_.end())
            break;
        Scalar f = lead->second;
        axpy(row, f, piv->second);
    }
    if (row.empty())
        return false;
    Scalar inv = 1 / row.begin()->second;
    for (auto& [c, v] : row)
        v *= inv;
    std::size_t col = row.begin()->first;
    rows_.emplace(col, std::move(row));
    return true;
}

void SparseEchelon::finish()
{
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SparseRow& row = it->second;
        auto jt = std::next(row.begin());
        while (jt != row.end()) {
            auto piv = rows_.find(jt->first);
            if (piv == rows_.end() || piv->first == it->first) {
                ++jt;
                continue;
            }
            std::size_t col = jt->first;
            Scalar f = jt->second;
            axpy(row, f, piv->second);
            jt = row.upper_bound(col);
        }
    }
}

Matrix sparse_nullspace(std::vector<SparseRow> rows, std::size_t ncols)
{
    SparseEchelon ech(ncols);
    for (auto& r : rows)
        ech.insert(std::move(r));
    ech.finish();
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!ech.is_pivot(c))
            free.push_back(c);
    std::vector<std::size_t> free_pos(ncols, 0);
    for (std::size_t j = 0; j < free.size(); ++j)
        free_pos[free[j]] = j;
    Matrix k(ncols, free.size());
    for (std::size_t j = 0; j < free.size(); ++j)
        k(free[j], j) = 1;
    for (const auto& [p, row] : ech.rows())
        for (const auto& [c, v] : row)
            if (c != p)
                k(p, free_pos[c]) = -v;
    return k;
}

// --- polynomials -------------------------------------------------------

namespace poly {

void normalize(Poly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

int degree(const Poly& p)
{
    Poly q = p;
    normalize(q);
    return static_cast<int>(q.size()) - 1;
}

Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    normalize(r);
    return r;
}

Poly derivative(const Poly& p)
{
    Poly r;
    for (std::size_t i = 1; i < p.size(); ++i)
        r.push_back(p[i] * static_cast<long>(i));
    normalize(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    Poly bb = b;
    normalize(bb);
    if (bb.empty())
        throw std::domain_error("poly division by zero");
    Poly r = a;
    normalize(r);
    Poly q(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0);
    while (r.size() >= bb.size() && !r.empty()) {
        std::size_t shift = r.size() - bb.size();
        Scalar f = r.back() / bb.back();
        q[shift] = f;
        for (std::size_t i = 0; i < bb.size(); ++i)
            r[shift + i] -= f * bb[i];
        normalize(r);
    }
    normalize(q);
    return {q, r};
}

Poly monic(const Poly& p)
{
    Poly r = p;
    normalize(r);
    if (r.empty())
        return r;
    Scalar lead = r.back();
    for (auto& c : r)
        c /= lead;
    return r;
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    normalize(x);
    normalize(y);
    while (!y.empty()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Poly power(const Poly& p, unsigned k)
{
    Poly r{Scalar(1)};
    for (unsigned i = 0; i < k; ++i)
        r = mul(r, p);
    return r;
}

static Scalar eval(const Poly& p, const Scalar& x)
{
    Scalar r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * x + *it;
    return r;
}

// Positive divisors of |n|, via trial division; gives up (returns the
// divisors found from the smooth part) once the cofactor is large.
static std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> fac;
    for (mpz_class p = 2; p * p <= n && p < 100000; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            fac.emplace_back(p, e);
    }
    if (n > 1)
        fac.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
            if (divs.size() > 20000)
                return divs;
        }
    }
    return divs;
}

std::vector<Scalar> rational_roots(const Poly& p)
{
    Poly q = p;
    normalize(q);
    std::set<Scalar> roots;
    if (q.size() <= 1)
        return {};
    // Strip factors of x.
    std::size_t low = 0;
    while (low < q.size() && sgn(q[low]) == 0)
        ++low;
    if (low > 0)
        roots.insert(Scalar(0));
    Poly r(q.begin() + static_cast<std::ptrdiff_t>(low), q.end());
    if (r.size() > 1) {
        mpz_class lcm = 1;
        for (const auto& c : r)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        std::vector<mpz_class> ints;
        for (const auto& c : r) {
            Scalar s = c * lcm;
            ints.push_back(s.get_num());
        }
        auto num_divs = divisors(ints.front());
        auto den_divs = divisors(ints.back());
        for (const auto& a : num_divs)
            for (const auto& b : den_divs)
                for (int sign : {1, -1}) {
                    Scalar cand(a * sign, b);
                    cand.canonicalize();
                    if (sgn(eval(r, cand)) == 0)
                        roots.insert(cand);
                }
    }
    return {roots.begin(), roots.end()};
}

unsigned multiplicity(const Poly& p, const Scalar& r)
{
    Poly q = p;
    normalize(q);
    Poly lin{-r, Scalar(1)};
    unsigned m = 0;
    while (!q.empty()) {
        auto [quot, rem] = divmod(q, lin);
        if (!rem.empty())
            break;
        q = std::move(quot);
        ++m;
    }
    return m;
}

Matrix evaluate(const Poly& p, const Matrix& m)
{
    Matrix r = Matrix::zero(m.rows(), m.cols());
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * m + (*it) * Matrix::identity(m.rows());
    return r;
}

}  // namespace poly

}  // namespace bq
