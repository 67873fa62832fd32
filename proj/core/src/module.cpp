#include "bq/module.hpp"

#include <algorithm>
#include <sstream>

#include "bq/errors.hpp"
#include "bq/linalg.hpp"

namespace bq {

// --- representations -------------------------------------------------------

Representation::Representation(AlgebraPtr a, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps,
                               std::string name)
{
    if (!a)
        throw InvalidParameters("representation without an algebra");
    const Quiver& q = a->quiver();
    if (dims.size() != q.vertex_count())
        throw InvalidParameters("dimension vector has the wrong length");
    if (arrow_maps.size() != q.arrow_count())
        throw InvalidParameters("wrong number of arrow matrices");
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& arr = q.arrows()[k];
        if (arrow_maps[k].rows() != dims[arr.target] || arrow_maps[k].cols() != dims[arr.source])
            throw InvalidParameters("arrow matrix for '" + arr.id + "' has the wrong shape");
    }
    auto d = std::make_shared<Data>();
    d->algebra = std::move(a);
    d->dims = std::move(dims);
    d->maps = std::move(arrow_maps);
    d->name = std::move(name);
    for (auto x : d->dims)
        d->total += x;
    d_ = d;
    for (const auto& r : algebra()->relations()) {
        const auto& p0 = r.front().path;
        Matrix s(dim(p0.target), dim(p0.source));
        for (const auto& t : r)
            s += t.coeff * act(t.path);
        if (!s.is_zero())
            throw InvalidParameters("representation does not satisfy the relations");
    }
}

Representation Representation::zero(AlgebraPtr a)
{
    const Quiver& q = a->quiver();
    std::vector<Matrix> maps(q.arrow_count());
    return Representation(a, std::vector<std::size_t>(q.vertex_count(), 0), maps, "0");
}

Matrix Representation::act(const Path& p) const
{
    Matrix m = Matrix::identity(dim(p.source));
    for (auto a : p.arrows)
        m = d_->maps[a] * m;
    return m;
}

const Matrix& Representation::act_basis(std::size_t b) const
{
    std::call_once(d_->actions_once, [this] {
        const auto& basis = algebra()->basis();
        d_->actions.reserve(basis.size());
        for (const auto& p : basis)
            d_->actions.push_back(act(p));
    });
    return d_->actions[b];
}

Representation Representation::renamed(std::string name) const
{
    Representation r;
    auto d = std::make_shared<Data>();
    d->algebra = d_->algebra;
    d->dims = d_->dims;
    d->maps = d_->maps;
    d->total = d_->total;
    d->name = std::move(name);
    r.d_ = d;
    return r;
}

const std::string& Representation::key() const
{
    std::call_once(d_->key_once, [this] {
        std::ostringstream os;
        os << algebra()->fingerprint() << '|';
        for (auto x : d_->dims)
            os << x << ',';
        for (const auto& m : d_->maps)
            os << '|' << m;
        d_->key = os.str();
    });
    return d_->key;
}

bool same_algebra(const Representation& m, const Representation& n)
{
    return m.algebra() == n.algebra() || m.algebra()->same_as(*n.algebra());
}

// --- maps --------------------------------------------------------------------

ModuleMap::ModuleMap(Representation source, Representation target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components))
{
    if (!same_algebra(source_, target_))
        throw InvalidParameters("module map between modules over different algebras");
    const Quiver& q = source_.algebra()->quiver();
    if (comps_.size() != q.vertex_count())
        throw InvalidParameters("module map has the wrong number of components");
    for (std::size_t v = 0; v < comps_.size(); ++v)
        if (comps_[v].rows() != target_.dim(v) || comps_[v].cols() != source_.dim(v))
            throw InvalidParameters("module map component has the wrong shape");
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& arr = q.arrows()[k];
        if (comps_[arr.target] * source_.arrow_map(k) != target_.arrow_map(k) * comps_[arr.source])
            throw InternalInconsistency("module map is not natural at arrow '" + arr.id + "'");
    }
}

ModuleMap ModuleMap::zero(const Representation& source, const Representation& target)
{
    std::vector<Matrix> c;
    for (std::size_t v = 0; v < source.vertex_count(); ++v)
        c.emplace_back(target.dim(v), source.dim(v));
    return ModuleMap(source, target, std::move(c), true);
}

ModuleMap ModuleMap::identity(const Representation& m)
{
    std::vector<Matrix> c;
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
        c.push_back(Matrix::identity(m.dim(v)));
    return ModuleMap(m, m, std::move(c), true);
}

bool ModuleMap::is_zero() const
{
    return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool ModuleMap::is_injective() const
{
    for (std::size_t v = 0; v < comps_.size(); ++v)
        if (rank(comps_[v]) != source_.dim(v))
            return false;
    return true;
}

bool ModuleMap::is_surjective() const
{
    for (std::size_t v = 0; v < comps_.size(); ++v)
        if (rank(comps_[v]) != target_.dim(v))
            return false;
    return true;
}

bool ModuleMap::is_isomorphism() const
{
    return source_.dims() == target_.dims() && is_injective();
}

Matrix ModuleMap::total() const { return Matrix::block_diagonal(comps_); }

ModuleMap operator*(const ModuleMap& g, const ModuleMap& f)
{
    if (g.source_.dims() != f.target_.dims())
        throw InvalidParameters("composition of incompatible module maps");
    std::vector<Matrix> c;
    for (std::size_t v = 0; v < f.comps_.size(); ++v)
        c.push_back(g.comps_[v] * f.comps_[v]);
    return ModuleMap(f.source_, g.target_, std::move(c), true);
}

ModuleMap operator+(const ModuleMap& f, const ModuleMap& g)
{
    std::vector<Matrix> c;
    for (std::size_t v = 0; v < f.comps_.size(); ++v)
        c.push_back(f.comps_[v] + g.comps_[v]);
    return ModuleMap(f.source_, f.target_, std::move(c), true);
}

ModuleMap operator-(const ModuleMap& f, const ModuleMap& g)
{
    std::vector<Matrix> c;
    for (std::size_t v = 0; v < f.comps_.size(); ++v)
        c.push_back(f.comps_[v] - g.comps_[v]);
    return ModuleMap(f.source_, f.target_, std::move(c), true);
}

ModuleMap operator*(const Scalar& s, const ModuleMap& f)
{
    std::vector<Matrix> c;
    for (const auto& m : f.comps_)
        c.push_back(s * m);
    return ModuleMap(f.source_, f.target_, std::move(c), true);
}

// --- constructions -------------------------------------------------------------

DirectSum direct_sum(const std::vector<Representation>& parts)
{
    if (parts.empty())
        throw InvalidParameters("direct sum of no modules (use Representation::zero)");
    const AlgebraPtr& a = parts.front().algebra();
    const Quiver& q = a->quiver();
    const std::size_t n = q.vertex_count();
    std::vector<std::size_t> dims(n, 0);
    for (const auto& p : parts) {
        if (!same_algebra(p, parts.front()))
            throw InvalidParameters("direct sum over different algebras");
        for (std::size_t v = 0; v < n; ++v)
            dims[v] += p.dim(v);
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.arrow_map(k));
        maps.push_back(Matrix::block_diagonal(blocks));
    }
    std::string name;
    for (const auto& p : parts)
        name += (name.empty() ? "" : " + ") + (p.name().empty() ? std::string("?") : p.name());
    DirectSum out{Representation(a, dims, maps, name), {}, {}};
    std::vector<std::size_t> offset(n, 0);
    for (const auto& p : parts) {
        std::vector<Matrix> inj, proj;
        for (std::size_t v = 0; v < n; ++v) {
            Matrix i(dims[v], p.dim(v)), pr(p.dim(v), dims[v]);
            for (std::size_t k = 0; k < p.dim(v); ++k) {
                i(offset[v] + k, k) = 1;
                pr(k, offset[v] + k) = 1;
            }
            inj.push_back(std::move(i));
            proj.push_back(std::move(pr));
            offset[v] += p.dim(v);
        }
        out.injections.emplace_back(p, out.sum, std::move(inj));
        out.projections.emplace_back(out.sum, p, std::move(proj));
    }
    return out;
}

Representation direct_sum_module(const std::vector<Representation>& parts) { return direct_sum(parts).sum; }

Submodule submodule_from_bases(const Representation& m, const std::vector<Matrix>& bases)
{
    const auto& a = m.algebra();
    const Quiver& q = a->quiver();
    std::vector<std::size_t> dims;
    std::vector<SubspaceCoordinates> coords;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        dims.push_back(bases[v].cols());
        coords.emplace_back(bases[v]);
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& arr = q.arrows()[k];
        Matrix image = m.arrow_map(k) * bases[arr.source];
        Matrix x = dims[arr.target] ? coords[arr.target].coordinates(image) : Matrix(0, dims[arr.source]);
        if (bases[arr.target].cols() == 0 ? !image.is_zero() : bases[arr.target] * x != image)
            throw InternalInconsistency("subspace is not stable under arrow '" + arr.id + "'");
        maps.push_back(std::move(x));
    }
    Representation sub(a, dims, maps);
    std::vector<Matrix> inc;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        inc.push_back(bases[v].cols() ? bases[v] : Matrix(m.dim(v), 0));
    return {sub, ModuleMap(sub, m, std::move(inc))};
}

Submodule generated_submodule(const Representation& m, const std::vector<Matrix>& generators)
{
    const Quiver& q = m.algebra()->quiver();
    const std::size_t n = q.vertex_count();
    std::vector<Matrix> span(n);
    for (std::size_t v = 0; v < n; ++v)
        span[v] = generators[v].cols() ? column_space(generators[v]) : Matrix(m.dim(v), 0);
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t k = 0; k < q.arrow_count(); ++k) {
            const Arrow& arr = q.arrows()[k];
            if (span[arr.source].cols() == 0)
                continue;
            Matrix img = m.arrow_map(k) * span[arr.source];
            Matrix joined = column_space(Matrix::hstack(span[arr.target], img));
            if (joined.cols() > span[arr.target].cols()) {
                span[arr.target] = joined;
                grew = true;
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (span[v].cols() == 0)
            span[v] = Matrix(m.dim(v), 0);
    return submodule_from_bases(m, span);
}

Quotient quotient_by(const Representation& m, const std::vector<Matrix>& sub_bases)
{
    const auto& a = m.algebra();
    const Quiver& q = a->quiver();
    const std::size_t n = q.vertex_count();
    std::vector<Matrix> comp(n), proj(n);
    std::vector<std::size_t> dims(n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t d = m.dim(v);
        Matrix base = sub_bases[v].cols() ? sub_bases[v] : Matrix(d, 0);
        auto extra = extending_columns(base, Matrix::identity(d));
        comp[v] = Matrix::identity(d).columns(extra);
        dims[v] = extra.size();
        if (d == 0) {
            proj[v] = Matrix(0, 0);
            continue;
        }
        Matrix t = inverse(Matrix::hstack(base, comp[v]));
        std::vector<std::size_t> rows;
        for (std::size_t k = base.cols(); k < d; ++k)
            rows.push_back(k);
        proj[v] = t.rows_subset(rows);
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& arr = q.arrows()[k];
        maps.push_back(proj[arr.target] * m.arrow_map(k) * comp[arr.source]);
    }
    Representation quo(a, dims, maps);
    return {quo, ModuleMap(m, quo, std::move(proj))};
}

ModuleMap factor_through_quotient(const ModuleMap& q, const ModuleMap& h)
{
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < q.components().size(); ++v) {
        const std::size_t d = q.target().dim(v);
        if (d == 0) {
            comps.emplace_back(h.target().dim(v), 0);
            continue;
        }
        auto right_inverse = solve_linear(q.at(v), Matrix::identity(d));
        if (!right_inverse)
            throw InvalidParameters("factor_through_quotient: map is not surjective");
        comps.push_back(h.at(v) * *right_inverse);
    }
    ModuleMap b(q.target(), h.target(), std::move(comps));
    if ((b * q).components() != h.components())
        throw InvalidParameters("factor_through_quotient: map does not vanish on the kernel");
    return b;
}

Quotient quotient_by(const Submodule& s) { return quotient_by(s.inclusion.target(), s.inclusion.components()); }

std::vector<Matrix> image_bases(const ModuleMap& f)
{
    std::vector<Matrix> out;
    for (std::size_t v = 0; v < f.components().size(); ++v) {
        Matrix c = column_space(f.at(v));
        out.push_back(c.cols() ? c : Matrix(f.target().dim(v), 0));
    }
    return out;
}

Submodule image(const ModuleMap& f) { return submodule_from_bases(f.target(), image_bases(f)); }

Submodule kernel(const ModuleMap& f)
{
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < f.components().size(); ++v) {
        Matrix k = f.at(v).rows() ? bq::kernel(f.at(v)) : Matrix::identity(f.source().dim(v));
        bases.push_back(k.cols() ? k : Matrix(f.source().dim(v), 0));
    }
    return submodule_from_bases(f.source(), bases);
}

Quotient cokernel(const ModuleMap& f) { return quotient_by(f.target(), image_bases(f)); }

KernelCokernel kernel_cokernel(const ModuleMap& f) { return {kernel(f), cokernel(f)}; }

static std::vector<Matrix> radical_bases(const Representation& m, const std::vector<Matrix>& from)
{
    const Quiver& q = m.algebra()->quiver();
    std::vector<Matrix> out(q.vertex_count());
    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = Matrix(m.dim(v), 0);
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& arr = q.arrows()[k];
        if (from[arr.source].cols() == 0)
            continue;
        out[arr.target] = Matrix::hstack(out[arr.target], m.arrow_map(k) * from[arr.source]);
    }
    for (std::size_t v = 0; v < out.size(); ++v) {
        Matrix c = out[v].cols() ? column_space(out[v]) : out[v];
        out[v] = c.cols() ? c : Matrix(m.dim(v), 0);
    }
    return out;
}

Submodule radical(const Representation& m) { return radical_power(m, 1); }

Submodule radical_power(const Representation& m, std::size_t k)
{
    std::vector<Matrix> cur;
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
        cur.push_back(Matrix::identity(m.dim(v)));
    for (std::size_t i = 0; i < k; ++i)
        cur = radical_bases(m, cur);
    return submodule_from_bases(m, cur);
}

Submodule socle(const Representation& m)
{
    const Quiver& q = m.algebra()->quiver();
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        Matrix stacked(0, m.dim(v));
        for (std::size_t k = 0; k < q.arrow_count(); ++k)
            if (q.arrows()[k].source == v)
                stacked = stacked.rows() ? Matrix::vstack(stacked, m.arrow_map(k)) : m.arrow_map(k);
        Matrix ker = stacked.rows() ? kernel(stacked) : Matrix::identity(m.dim(v));
        bases.push_back(ker.cols() ? ker : Matrix(m.dim(v), 0));
    }
    return submodule_from_bases(m, bases);
}

Quotient top(const Representation& m) { return quotient_by(radical(m)); }

std::vector<std::size_t> top_dims(const Representation& m)
{
    auto r = radical_bases(m, [&] {
        std::vector<Matrix> id;
        for (std::size_t v = 0; v < m.vertex_count(); ++v)
            id.push_back(Matrix::identity(m.dim(v)));
        return id;
    }());
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
        out.push_back(m.dim(v) - r[v].cols());
    return out;
}

std::vector<std::size_t> socle_dims(const Representation& m) { return socle(m).module.dims(); }

std::size_t loewy_length(const Representation& m)
{
    std::vector<Matrix> cur;
    std::size_t total = 0;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        cur.push_back(Matrix::identity(m.dim(v)));
        total += m.dim(v);
    }
    std::size_t k = 0;
    while (total > 0) {
        cur = radical_bases(m, cur);
        total = 0;
        for (const auto& c : cur)
            total += c.cols();
        ++k;
    }
    return k;
}

std::vector<Scalar> corner_coordinates(const Algebra& a, std::size_t u, std::size_t w, const SparseVec& x)
{
    const auto& idx = a.corner(u, w);
    std::vector<Scalar> out(idx.size());
    for (const auto& [b, c] : x) {
        auto it = std::lower_bound(idx.begin(), idx.end(), b);
        if (it == idx.end() || *it != b)
            throw InternalInconsistency("algebra element outside the expected corner");
        out[static_cast<std::size_t>(it - idx.begin())] += c;
    }
    return out;
}

Representation projective(const AlgebraPtr& a, std::size_t v)
{
    const Quiver& q = a->quiver();
    std::vector<std::size_t> dims;
    for (std::size_t w = 0; w < q.vertex_count(); ++w)
        dims.push_back(a->corner(v, w).size());
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& arr = q.arrows()[k];
        const auto& src = a->corner(v, arr.source);
        Matrix m(dims[arr.target], src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            auto col = corner_coordinates(*a, v, arr.target, a->product(src[j], a->arrow_element(k)));
            for (std::size_t i = 0; i < col.size(); ++i)
                m(i, j) = col[i];
        }
        maps.push_back(std::move(m));
    }
    return Representation(a, dims, maps, "P(" + q.vertices()[v] + ")");
}

Representation injective(const AlgebraPtr& a, std::size_t v)
{
    return dualize(projective(opposite(a), v)).renamed("I(" + a->quiver().vertices()[v] + ")");
}

Representation simple(const AlgebraPtr& a, std::size_t v)
{
    const Quiver& q = a->quiver();
    std::vector<std::size_t> dims(q.vertex_count(), 0);
    dims[v] = 1;
    std::vector<Matrix> maps;
    for (const auto& arr : q.arrows())
        maps.emplace_back(dims[arr.target], dims[arr.source]);
    return Representation(a, dims, maps, "S(" + q.vertices()[v] + ")");
}

Representation projective_truncation(const AlgebraPtr& a, std::size_t v, std::size_t k)
{
    const std::string& id = a->quiver().vertices()[v];
    return quotient_by(radical_power(projective(a, v), k))
        .module.renamed("e" + id + "A/e" + id + "J^" + std::to_string(k));
}

Representation path_ideal(const AlgebraPtr& a, const Path& p)
{
    std::vector<Scalar> x = a->reduce_path(p);
    SparseVec sx;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            sx.emplace_back(i, x[i]);
    Representation pu = projective(a, p.source);
    std::vector<Matrix> gens;
    for (std::size_t w = 0; w < a->vertex_count(); ++w)
        gens.push_back(w == p.target ? Matrix::column_vector(corner_coordinates(*a, p.source, w, sx))
                                     : Matrix(pu.dim(w), 0));
    return generated_submodule(pu, gens).module.renamed(path_to_string(a->quiver(), p) + "A");
}

Representation regular(const AlgebraPtr& a)
{
    std::vector<Representation> ps;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        ps.push_back(projective(a, v));
    return direct_sum_module(ps).renamed("A");
}

Representation dual_regular(const AlgebraPtr& a)
{
    std::vector<Representation> is;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        is.push_back(injective(a, v));
    return direct_sum_module(is).renamed("D(A)");
}

StructuralModules structural_modules(const AlgebraPtr& a)
{
    StructuralModules s;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        s.projectives.push_back(projective(a, v));
        s.injectives.push_back(injective(a, v));
        s.simples.push_back(simple(a, v));
    }
    return s;
}

// --- hom spaces ------------------------------------------------------------------

namespace {

struct HomSystem {
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    std::vector<SparseRow> rows;
};

HomSystem hom_system(const Representation& m, const Representation& n)
{
    if (!same_algebra(m, n))
        throw InvalidParameters("hom space between modules over different algebras");
    const Quiver& q = m.algebra()->quiver();
    HomSystem s;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        s.offset.push_back(s.unknowns);
        s.unknowns += n.dim(v) * m.dim(v);
    }
    // X_t A^M_a - A^N_a X_s = 0, entry (r, c).
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const Arrow& arr = q.arrows()[k];
        const std::size_t st = arr.source, tg = arr.target;
        const Matrix& am = m.arrow_map(k);
        const Matrix& an = n.arrow_map(k);
        for (std::size_t r = 0; r < n.dim(tg); ++r)
            for (std::size_t c = 0; c < m.dim(st); ++c) {
                SparseRow row;
                for (std::size_t j = 0; j < m.dim(tg); ++j)
                    if (sgn(am(j, c)) != 0)
                        row[s.offset[tg] + r * m.dim(tg) + j] += am(j, c);
                for (std::size_t j = 0; j < n.dim(st); ++j)
                    if (sgn(an(r, j)) != 0)
                        row[s.offset[st] + j * m.dim(st) + c] -= an(r, j);
                for (auto it = row.begin(); it != row.end();)
                    it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
                if (!row.empty())
                    s.rows.push_back(std::move(row));
            }
    }
    return s;
}

}  // namespace

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n)
{
    HomSystem s = hom_system(m, n);
    Matrix k = sparse_nullspace(s.rows, s.unknowns);
    std::vector<ModuleMap> out;
    const std::size_t nv = m.vertex_count();
    for (std::size_t j = 0; j < k.cols(); ++j) {
        std::vector<Matrix> comps;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix x(n.dim(v), m.dim(v));
            for (std::size_t r = 0; r < n.dim(v); ++r)
                for (std::size_t c = 0; c < m.dim(v); ++c)
                    x(r, c) = k(s.offset[v] + r * m.dim(v) + c, j);
            comps.push_back(std::move(x));
        }
        out.emplace_back(m, n, std::move(comps));
    }
    return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n)
{
    HomSystem s = hom_system(m, n);
    SparseEchelon ech(s.unknowns);
    for (auto& r : s.rows)
        ech.insert(std::move(r));
    return s.unknowns - ech.rank();
}

Submodule trace_submodule(const std::vector<Representation>& generators, const Representation& m)
{
    const std::size_t n = m.vertex_count();
    std::vector<Matrix> span(n);
    for (std::size_t v = 0; v < n; ++v)
        span[v] = Matrix(m.dim(v), 0);
    for (const auto& g : generators)
        for (const auto& f : hom_space(g, m))
            for (std::size_t v = 0; v < n; ++v)
                if (f.at(v).cols())
                    span[v] = Matrix::hstack(span[v], f.at(v));
    for (std::size_t v = 0; v < n; ++v) {
        Matrix c = span[v].cols() ? column_space(span[v]) : span[v];
        span[v] = c.cols() ? c : Matrix(m.dim(v), 0);
    }
    return submodule_from_bases(m, span);
}

// --- duality ----------------------------------------------------------------------

// "D(...)" with the outer parentheses matching each other.
static bool wrapped_in_dual(const std::string& s)
{
    if (s.size() < 4 || !s.starts_with("D(") || s.back() != ')')
        return false;
    int depth = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
        if (depth == 0 && i + 1 < s.size())
            return false;
    }
    return depth == 0;
}

Representation dualize(const Representation& m)
{
    AlgebraPtr op = opposite(m.algebra());
    std::vector<Matrix> maps;
    for (const auto& x : m.arrow_maps())
        maps.push_back(x.transpose());
    std::string name = m.name();
    if (wrapped_in_dual(name))
        name = name.substr(2, name.size() - 3);
    else if (!name.empty())
        name = "D(" + name + ")";
    return Representation(op, m.dims(), maps, name);
}

ModuleMap dualize(const ModuleMap& f)
{
    std::vector<Matrix> comps;
    for (const auto& c : f.components())
        comps.push_back(c.transpose());
    return ModuleMap(dualize(f.target()), dualize(f.source()), std::move(comps));
}

}  // namespace bq
