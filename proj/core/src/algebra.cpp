#include "bq/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bq/errors.hpp"
#include "bq/linalg.hpp"
#include "bq/random.hpp"

namespace bq {

// --- quiver --------------------------------------------------------------

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size())
        throw InvalidParameters("duplicate vertex id");
    std::set<std::string> arrow_ids;
    for (const auto& a : arrows_) {
        if (!arrow_ids.insert(a.id).second)
            throw InvalidParameters("duplicate arrow id '" + a.id + "'");
        if (a.source >= vertices_.size() || a.target >= vertices_.size())
            throw InvalidParameters("arrow '" + a.id + "' has an unknown endpoint");
    }
}

Quiver Quiver::from_ids(std::vector<std::string> vertices,
                        const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
{
    Quiver q(std::move(vertices), {});
    std::vector<Arrow> as;
    for (const auto& [id, s, t] : arrows)
        as.push_back({id, q.vertex_index(s), q.vertex_index(t)});
    return Quiver(q.vertices_, std::move(as));
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& id) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == id)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const
{
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].id == id)
            return i;
    return std::nullopt;
}

std::size_t Quiver::vertex_index(const std::string& id) const
{
    if (auto v = find_vertex(id))
        return *v;
    throw InvalidParameters("unknown vertex '" + id + "'");
}

std::size_t Quiver::arrow_index(const std::string& id) const
{
    if (auto a = find_arrow(id))
        return *a;
    throw InvalidParameters("unknown arrow '" + id + "'");
}

bool Quiver::connected() const
{
    if (vertices_.empty())
        return true;
    std::vector<std::size_t> parent(vertices_.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& a : arrows_)
        parent[find(a.source)] = find(a.target);
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find(i) != find(0))
            return false;
    return true;
}

Quiver Quiver::reversed() const
{
    std::vector<Arrow> as;
    for (const auto& a : arrows_)
        as.push_back({a.id, a.target, a.source});
    return Quiver(vertices_, std::move(as));
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids)
{
    if (arrow_ids.empty())
        throw InvalidParameters("empty arrow word");
    Path p;
    for (std::size_t k = 0; k < arrow_ids.size(); ++k) {
        std::size_t a = q.arrow_index(arrow_ids[k]);
        const Arrow& arr = q.arrows()[a];
        if (k == 0)
            p.source = arr.source;
        else if (arr.source != p.target)
            throw InvalidParameters("arrows '" + arrow_ids[k - 1] + "' and '" + arrow_ids[k] +
                                    "' are not composable");
        p.target = arr.target;
        p.arrows.push_back(a);
    }
    return p;
}

std::optional<Path> concat(const Path& p, const Path& q)
{
    if (p.target != q.source)
        return std::nullopt;
    Path r{p.source, q.target, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::string path_to_string(const Quiver& q, const Path& p)
{
    if (p.arrows.empty())
        return "e_" + q.vertices()[p.source];
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k)
            s += "*";
        s += q.arrows()[p.arrows[k]].id;
    }
    return s;
}

static Path reversed_path(const Path& p)
{
    Path r{p.target, p.source, p.arrows};
    std::reverse(r.arrows.begin(), r.arrows.end());
    return r;
}

// Enumeration order: shorter first, then source vertex, then arrow word.
static bool path_less(const Path& a, const Path& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.source != b.source)
        return a.source < b.source;
    return a.arrows < b.arrows;
}

// --- algebra --------------------------------------------------------------

Algebra::Algebra(Data d) : d_(std::move(d))
{
    const std::size_t n = vertex_count();
    const std::size_t dim = dimension();
    if (d_.table.size() != dim * dim)
        throw InvalidParameters("multiplication table has the wrong size");
    for (std::size_t v = 0; v < n; ++v)
        if (d_.basis[v] != Path::trivial(v))
            throw InvalidParameters("basis must start with the trivial paths");

    arrow_basis_.assign(d_.quiver.arrow_count(), dim);
    corner_.assign(n * n, {});
    for (std::size_t b = 0; b < dim; ++b) {
        const Path& p = d_.basis[b];
        corner_[p.source * n + p.target].push_back(b);
        if (p.length() == 1)
            arrow_basis_[p.arrows[0]] = b;
    }
    if (d_.loewy_length > 1)
        for (std::size_t a = 0; a < arrow_basis_.size(); ++a)
            if (arrow_basis_[a] == dim)
                throw InvalidParameters("arrow missing from the basis (inadmissible relations)");

    proj_inj_.assign(n, false);
    inj_proj_.assign(n, false);
    for (std::size_t u = 0; u < n; ++u) {
        auto sv = simple_socle_vertex(u);
        if (sv && starting_at(u).size() == ending_at(*sv).size()) {
            proj_inj_[u] = true;
            inj_proj_[*sv] = true;
        }
    }

    std::ostringstream os;
    for (const auto& v : d_.quiver.vertices())
        os << v << ',';
    os << '|';
    for (const auto& a : d_.quiver.arrows())
        os << a.id << ':' << a.source << '>' << a.target << ',';
    os << '|';
    for (const auto& p : d_.basis) {
        os << p.source << '.';
        for (auto a : p.arrows)
            os << a << '.';
        os << ',';
    }
    os << '|';
    for (const auto& e : d_.table) {
        for (const auto& [k, c] : e)
            os << k << '=' << c << ' ';
        os << ';';
    }
    fingerprint_ = std::hash<std::string>{}(os.str());
}

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const
{
    const std::size_t dim = dimension();
    std::vector<Scalar> r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (sgn(y[j]) == 0)
                continue;
            for (const auto& [k, c] : product(i, j))
                r[k] += x[i] * y[j] * c;
        }
    }
    return r;
}

std::optional<std::size_t> Algebra::basis_index(const Path& p) const
{
    for (auto b : corner(p.source, p.target))
        if (d_.basis[b] == p)
            return b;
    return std::nullopt;
}

std::vector<Scalar> Algebra::reduce_path(const Path& p) const
{
    std::vector<Scalar> x(dimension());
    x[p.source] = 1;
    for (auto a : p.arrows) {
        if (arrow_basis_[a] >= dimension())
            return std::vector<Scalar>(dimension());
        std::vector<Scalar> y(dimension());
        y[arrow_basis_[a]] = 1;
        x = multiply(x, y);
    }
    return x;
}

std::vector<std::size_t> Algebra::starting_at(std::size_t u) const
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertex_count(); ++v)
        for (auto b : corner(u, v))
            out.push_back(b);
    return out;
}

std::vector<std::size_t> Algebra::ending_at(std::size_t v) const
{
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
        for (auto b : corner(u, v))
            out.push_back(b);
    return out;
}

Matrix Algebra::cartan() const
{
    const std::size_t n = vertex_count();
    Matrix c(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            c(u, v) = static_cast<long>(corner(u, v).size());
    return c;
}

Matrix Algebra::projective_socle(std::size_t u) const
{
    // soc(e_u A) = elements of e_u A killed by every arrow from the right.
    auto idx = starting_at(u);
    std::vector<SparseRow> rows;
    for (std::size_t a = 0; a < d_.quiver.arrow_count(); ++a) {
        if (arrow_basis_[a] >= dimension())
            continue;
        std::map<std::size_t, SparseRow> eq;  // one equation per output basis element
        for (std::size_t k = 0; k < idx.size(); ++k)
            for (const auto& [out, c] : product(idx[k], arrow_basis_[a]))
                eq[out][k] += c;
        for (auto& [out, row] : eq)
            rows.push_back(std::move(row));
    }
    return sparse_nullspace(rows, idx.size());
}

std::optional<std::size_t> Algebra::simple_socle_vertex(std::size_t u) const
{
    auto idx = starting_at(u);
    Matrix ker = projective_socle(u);
    if (ker.cols() != 1)
        return std::nullopt;
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (sgn(ker(k, 0)) != 0)
            return d_.basis[idx[k]].target;
    return std::nullopt;
}

std::size_t Algebra::projective_loewy_length(std::size_t u) const
{
    // Layers e_u J^k as spans of algebra elements.
    const std::size_t dim = dimension();
    std::vector<std::vector<Scalar>> layer;
    std::vector<Scalar> e(dim);
    e[u] = 1;
    layer.push_back(e);
    std::size_t k = 0;
    while (!layer.empty()) {
        ++k;
        SparseEchelon ech(dim);
        std::vector<std::vector<Scalar>> next;
        for (const auto& x : layer)
            for (std::size_t a = 0; a < d_.quiver.arrow_count(); ++a) {
                if (arrow_basis_[a] >= dim)
                    continue;
                std::vector<Scalar> y(dim);
                y[arrow_basis_[a]] = 1;
                auto z = multiply(x, y);
                SparseRow row;
                for (std::size_t i = 0; i < dim; ++i)
                    if (sgn(z[i]) != 0)
                        row.emplace(i, z[i]);
                if (ech.insert(row))
                    next.push_back(std::move(z));
            }
        layer = std::move(next);
    }
    return k;
}

bool Algebra::selfinjective() const
{
    return std::all_of(proj_inj_.begin(), proj_inj_.end(), [](bool b) { return b; });
}

bool Algebra::same_as(const Algebra& other) const
{
    return this == &other || (fingerprint_ == other.fingerprint_ && d_.basis == other.d_.basis &&
                              d_.quiver == other.d_.quiver && d_.table == other.d_.table);
}

// --- construction ------------------------------------------------------------

static void validate_relations(const Quiver& q, const std::vector<Relation>& rels)
{
    for (const auto& r : rels) {
        if (r.empty())
            throw InvalidParameters("empty relation");
        for (const auto& t : r) {
            if (t.path.length() < 2)
                throw InvalidParameters("relation term of length < 2 (inadmissible)");
            std::size_t v = t.path.source;
            for (auto a : t.path.arrows) {
                if (a >= q.arrow_count())
                    throw InvalidParameters("relation uses an unknown arrow");
                if (q.arrows()[a].source != v)
                    throw InvalidParameters("relation term is not a path");
                v = q.arrows()[a].target;
            }
            if (v != t.path.target)
                throw InvalidParameters("relation term has an inconsistent target");
            if (t.path.source != r.front().path.source || t.path.target != r.front().path.target)
                throw InvalidParameters("relation terms are not parallel");
        }
    }
}

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels, std::size_t loewy_cap,
                         std::string name)
{
    validate_relations(q, rels);
    constexpr std::size_t kMaxPaths = 200000;
    const std::size_t n = q.vertex_count();
    if (n == 0)
        throw InvalidParameters("quiver without vertices");

    std::vector<std::size_t> min_len;
    for (const auto& r : rels) {
        std::size_t m = r.front().path.length();
        for (const auto& t : r)
            m = std::min(m, t.path.length());
        min_len.push_back(m);
    }

    // Paths by length, extended level by level.
    std::vector<std::vector<Path>> levels{{}};
    for (std::size_t v = 0; v < n; ++v)
        levels[0].push_back(Path::trivial(v));
    std::size_t total = n;

    for (std::size_t N = 1; N <= loewy_cap; ++N) {
        std::vector<Path> next;
        for (const auto& p : levels.back())
            for (std::size_t a = 0; a < q.arrow_count(); ++a)
                if (q.arrows()[a].source == p.target) {
                    Path e = p;
                    e.target = q.arrows()[a].target;
                    e.arrows.push_back(a);
                    next.push_back(std::move(e));
                }
        total += next.size();
        if (total > kMaxPaths)
            throw BoundExceeded("path enumeration exceeded " + std::to_string(kMaxPaths) +
                                " paths before the algebra closed (length " + std::to_string(N) + ")");
        std::sort(next.begin(), next.end(), path_less);
        levels.push_back(std::move(next));

        // Columns: largest monomial first.
        std::vector<const Path*> ascending;
        for (const auto& lvl : levels)
            for (const auto& p : lvl)
                ascending.push_back(&p);
        const std::size_t cols = ascending.size();
        std::map<Path, std::size_t> column;
        for (std::size_t k = 0; k < cols; ++k)
            column.emplace(*ascending[k], cols - 1 - k);

        std::vector<std::vector<const Path*>> by_target(n), by_source(n);
        for (const auto& lvl : levels)
            for (const auto& p : lvl) {
                by_target[p.target].push_back(&p);
                by_source[p.source].push_back(&p);
            }

        SparseEchelon ech(cols);
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            const Relation& r = rels[ri];
            if (min_len[ri] > N)
                continue;
            const std::size_t s = r.front().path.source, t = r.front().path.target;
            for (const Path* u : by_target[s]) {
                if (u->length() + min_len[ri] > N)
                    continue;
                for (const Path* v : by_source[t]) {
                    if (u->length() + min_len[ri] + v->length() > N)
                        continue;
                    SparseRow row;
                    for (const auto& term : r) {
                        if (u->length() + term.path.length() + v->length() > N)
                            continue;
                        Path w = *concat(*concat(*u, term.path), *v);
                        row[column.at(w)] += term.coeff;
                    }
                    ech.insert(std::move(row));
                }
            }
        }
        bool closed = true;
        for (const auto& p : levels[N])
            if (!ech.is_pivot(column.at(p))) {
                closed = false;
                break;
            }
        if (!closed)
            continue;
        ech.finish();

        Algebra::Data d;
        d.name = std::move(name);
        d.quiver = q;
        d.relations = rels;
        d.loewy_length = N;
        std::map<std::size_t, std::size_t> basis_of_column;
        for (std::size_t lvl = 0; lvl < N; ++lvl)
            for (const auto& p : levels[lvl]) {
                std::size_t c = column.at(p);
                if (!ech.is_pivot(c)) {
                    basis_of_column[c] = d.basis.size();
                    d.basis.push_back(p);
                }
            }
        const std::size_t dim = d.basis.size();
        d.table.resize(dim * dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                auto w = concat(d.basis[i], d.basis[j]);
                if (!w || w->length() >= N)
                    continue;
                std::size_t c = column.at(*w);
                SparseVec& out = d.table[i * dim + j];
                if (!ech.is_pivot(c)) {
                    out.emplace_back(basis_of_column.at(c), Scalar(1));
                    continue;
                }
                for (const auto& [oc, val] : ech.rows().at(c))
                    if (oc != c)
                        out.emplace_back(basis_of_column.at(oc), -val);
                std::sort(out.begin(), out.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
            }
        return std::make_shared<const Algebra>(std::move(d));
    }
    throw BoundExceeded("no Loewy length <= " + std::to_string(loewy_cap) +
                        " closes the algebra; raise loewy_cap or check the relations");
}

AlgebraPtr opposite(const AlgebraPtr& a)
{
    std::lock_guard<std::mutex> lock(a->op_mutex_);
    if (a->op_strong_)
        return a->op_strong_;
    if (auto back = a->op_weak_.lock())
        return back;

    const Algebra::Data& src = a->d_;
    Algebra::Data d;
    d.name = src.name.size() > 3 && src.name.ends_with("^op") ? src.name.substr(0, src.name.size() - 3)
                                                               : src.name + "^op";
    d.quiver = src.quiver.reversed();
    for (const auto& r : src.relations) {
        Relation rr;
        for (const auto& t : r)
            rr.push_back({t.coeff, reversed_path(t.path)});
        d.relations.push_back(std::move(rr));
    }
    d.loewy_length = src.loewy_length;
    for (const auto& p : src.basis)
        d.basis.push_back(reversed_path(p));
    const std::size_t dim = d.basis.size();
    d.table.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            d.table[i * dim + j] = src.table[j * dim + i];
    auto op = std::make_shared<Algebra>(std::move(d));
    op->op_weak_ = a;
    a->op_strong_ = op;
    return op;
}

AlgebraPtr quotient_by_idempotent_ideal(const AlgebraPtr& a, const std::vector<std::size_t>& vertices)
{
    const std::size_t n = a->vertex_count();
    std::set<std::size_t> killed(vertices.begin(), vertices.end());
    if (killed.empty())
        throw InvalidParameters("quotient needs a nonempty vertex set");
    for (auto v : killed)
        if (v >= n)
            throw InvalidParameters("quotient vertex out of range");
    if (killed.size() == n)
        throw QuotientCollapse("the idempotent ideal is the whole algebra");

    const Quiver& q = a->quiver();
    std::vector<std::size_t> new_index(n, n);
    std::vector<std::string> vs;
    for (std::size_t v = 0; v < n; ++v)
        if (!killed.count(v)) {
            new_index[v] = vs.size();
            vs.push_back(q.vertices()[v]);
        }
    std::vector<std::size_t> new_arrow(q.arrow_count(), q.arrow_count());
    std::vector<Arrow> as;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& arr = q.arrows()[k];
        if (killed.count(arr.source) || killed.count(arr.target))
            continue;
        new_arrow[k] = as.size();
        as.push_back({arr.id, new_index[arr.source], new_index[arr.target]});
    }
    std::vector<Relation> rels;
    for (const auto& r : a->relations()) {
        Relation nr;
        for (const auto& t : r) {
            bool keep = !killed.count(t.path.source);
            for (auto k : t.path.arrows)
                keep = keep && new_arrow[k] != q.arrow_count();
            if (!keep)
                continue;
            Path p{new_index[t.path.source], new_index[t.path.target], {}};
            for (auto k : t.path.arrows)
                p.arrows.push_back(new_arrow[k]);
            nr.push_back({t.coeff, std::move(p)});
        }
        if (!nr.empty())
            rels.push_back(std::move(nr));
    }
    return build_algebra(Quiver(vs, as), rels, std::max<std::size_t>(a->loewy_length(), 1),
                         a->name() + "/ideal");
}

// --- symmetric form -----------------------------------------------------------

static bool nondegenerate(const Algebra& a, const std::vector<Scalar>& lambda)
{
    const std::size_t dim = a.dimension();
    Matrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [k, c] : a.product(i, j))
                g(i, j) += c * lambda[k];
    return rank(g) == dim;
}

SymmetricForm symmetric_form(const Algebra& a, unsigned seed, std::size_t budget)
{
    Matrix c = a.cartan();
    if (c != c.transpose())
        throw NotSymmetric("Cartan matrix is not symmetric");
    const std::size_t dim = a.dimension();
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            SparseRow row;
            for (const auto& [k, v] : a.product(i, j))
                row[k] += v;
            for (const auto& [k, v] : a.product(j, i))
                row[k] -= v;
            for (auto it = row.begin(); it != row.end();)
                it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
            if (!row.empty())
                rows.push_back(std::move(row));
        }
    Matrix space = sparse_nullspace(rows, dim);
    auto try_combo = [&](const std::vector<Scalar>& w) -> std::optional<SymmetricForm> {
        std::vector<Scalar> lambda(dim);
        for (std::size_t k = 0; k < space.cols(); ++k)
            if (sgn(w[k]) != 0)
                for (std::size_t i = 0; i < dim; ++i)
                    lambda[i] += w[k] * space(i, k);
        if (nondegenerate(a, lambda))
            return SymmetricForm{lambda};
        return std::nullopt;
    };
    for (std::size_t k = 0; k < space.cols(); ++k) {
        std::vector<Scalar> w(space.cols());
        w[k] = 1;
        if (auto f = try_combo(w))
            return *f;
    }
    SmallIntRng rng(seed);
    for (std::size_t t = 0; t < budget && space.cols() > 1; ++t) {
        std::vector<Scalar> w(space.cols());
        for (auto& x : w)
            x = rng.next(-3, 3);
        if (auto f = try_combo(w))
            return *f;
    }
    throw NotSymmetric("no nondegenerate symmetric functional found in the searched set");
}

bool is_certified_symmetric(const Algebra& a, unsigned seed)
{
    try {
        symmetric_form(a, seed);
        return true;
    } catch (const NotSymmetric&) {
        return false;
    }
}

}  // namespace bq
