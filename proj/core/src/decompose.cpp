#include "bq/decompose.hpp"

#include "bq/errors.hpp"
#include "bq/linalg.hpp"
#include "bq/random.hpp"

namespace bq {

std::vector<Representation> DecompositionResult::summands() const
{
    std::vector<Representation> out;
    for (const auto& p : parts)
        for (std::size_t k = 0; k < p.multiplicity; ++k)
            out.push_back(p.module);
    return out;
}

std::size_t DecompositionResult::summand_count() const
{
    std::size_t n = 0;
    for (const auto& p : parts)
        n += p.multiplicity;
    return n;
}

namespace {

Scalar trace_of_product(const ModuleMap& f, const ModuleMap& g)
{
    Scalar t = 0;
    for (std::size_t v = 0; v < f.components().size(); ++v) {
        const Matrix& a = f.at(v);
        const Matrix& b = g.at(v);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (sgn(a(i, k)) != 0 && sgn(b(k, i)) != 0)
                    t += a(i, k) * b(k, i);
    }
    return t;
}

// Rank of the trace form on End(m); End(m)/rad has this dimension when the
// residue algebra is the base field.
std::size_t trace_form_rank(const std::vector<ModuleMap>& basis)
{
    const std::size_t e = basis.size();
    Matrix g(e, e);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = i; j < e; ++j)
            g(i, j) = g(j, i) = trace_of_product(basis[i], basis[j]);
    return rank(g);
}

ModuleMap combination(const std::vector<ModuleMap>& basis, const std::vector<Scalar>& w)
{
    ModuleMap f = ModuleMap::zero(basis.front().source(), basis.front().target());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (sgn(w[k]) != 0)
            f = f + w[k] * basis[k];
    return f;
}

ModuleMap polynomial_of(const ModuleMap& f, const poly::Poly& p)
{
    std::vector<Matrix> comps;
    for (const auto& c : f.components())
        comps.push_back(poly::evaluate(p, c));
    return ModuleMap(f.source(), f.target(), std::move(comps));
}

bool all_zero(const std::vector<Scalar>& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

// Looks for p(f) giving a nontrivial Fitting splitting.
std::optional<ModuleMap> splitting_map(const ModuleMap& f)
{
    auto mu = minimal_polynomial(f.total());
    for (const auto& r : poly::rational_roots(mu)) {
        unsigned mult = poly::multiplicity(mu, r);
        if (static_cast<int>(mult) == poly::degree(mu))
            continue;
        return polynomial_of(f, poly::power(poly::Poly{-r, Scalar(1)}, mult));
    }
    return std::nullopt;
}

bool nilpotent_or_invertible(const ModuleMap& f)
{
    auto mu = minimal_polynomial(f.total());
    return sgn(mu.front()) != 0 || poly::multiplicity(mu, Scalar(0)) == static_cast<unsigned>(poly::degree(mu));
}

// Recursive splitting; appends (summand, inclusion into the original) pairs.
void split_into(const Representation& m, const ModuleMap& into_original, const DecomposeOptions& opt,
                SmallIntRng& rng, std::vector<std::pair<Representation, ModuleMap>>& out)
{
    if (m.is_zero())
        return;
    auto basis = hom_space(m, m);
    if (trace_form_rank(basis) == 1) {
        out.emplace_back(m, into_original);
        return;
    }
    std::optional<ModuleMap> g;
    bool all_local_like = true;
    for (const auto& f : basis) {
        if ((g = splitting_map(f)))
            break;
        all_local_like = all_local_like && nilpotent_or_invertible(f);
    }
    for (std::size_t t = 0; !g && t < opt.budget; ++t) {
        std::vector<Scalar> w(basis.size());
        for (auto& x : w)
            x = rng.next(-3, 3);
        if (all_zero(w))
            continue;
        ModuleMap f = combination(basis, w);
        if ((g = splitting_map(f)))
            break;
        all_local_like = all_local_like && nilpotent_or_invertible(f);
    }
    if (!g) {
        if (all_local_like) {
            // Residue algebra larger than the base field; every sampled
            // element is nilpotent or invertible.
            out.emplace_back(m, into_original);
            return;
        }
        throw DecompositionInconclusive("Fitting splitting stalled on a module of dimension " +
                                        std::to_string(m.total_dim()) + " within the search budget");
    }
    Submodule k = kernel(*g);
    Submodule i = image(*g);
    split_into(k.module, into_original * k.inclusion, opt, rng, out);
    split_into(i.module, into_original * i.inclusion, opt, rng, out);
}

}  // namespace

bool has_local_endomorphism_ring(const Representation& m)
{
    if (m.is_zero())
        return false;
    return trace_form_rank(hom_space(m, m)) == 1;
}

DecompositionResult decompose(const Representation& m, DecomposeOptions opt)
{
    DecompositionResult res;
    if (m.is_zero())
        return res;
    SmallIntRng rng(opt.seed);
    std::vector<std::pair<Representation, ModuleMap>> pieces;
    split_into(m, ModuleMap::identity(m), opt, rng, pieces);

    // Projections from the inverse of the assembled inclusion.
    const std::size_t n = m.vertex_count();
    std::vector<Matrix> assembled(n);
    for (std::size_t v = 0; v < n; ++v) {
        assembled[v] = Matrix(m.dim(v), 0);
        for (const auto& [s, inc] : pieces)
            assembled[v] = Matrix::hstack(assembled[v], inc.at(v));
    }
    std::vector<Matrix> inv(n);
    for (std::size_t v = 0; v < n; ++v)
        inv[v] = m.dim(v) ? inverse(assembled[v]) : Matrix(0, 0);
    std::vector<std::size_t> offset(n, 0);
    std::vector<ModuleMap> projections;
    for (const auto& [s, inc] : pieces) {
        std::vector<Matrix> comps;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> rows;
            for (std::size_t k = 0; k < s.dim(v); ++k)
                rows.push_back(offset[v] + k);
            comps.push_back(m.dim(v) ? inv[v].rows_subset(rows) : Matrix(0, 0));
            offset[v] += s.dim(v);
        }
        projections.emplace_back(m, s, std::move(comps));
    }

    // Group isomorphic summands.
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& [s, inc] = pieces[k];
        bool placed = false;
        for (auto& part : res.parts) {
            IsoResult iso = iso_test(part.module, s, opt);
            if (iso.kind == IsoResult::Kind::inconclusive)
                throw DecompositionInconclusive("could not decide isomorphism between two summands");
            if (iso.kind == IsoResult::Kind::iso) {
                // Re-express the copy through the representative.
                const ModuleMap& phi = *iso.map;  // part.module -> s
                part.inclusions.push_back(inc * phi);
                ModuleMap phi_inv = [&] {
                    std::vector<Matrix> c;
                    for (const auto& x : phi.components())
                        c.push_back(x.rows() ? inverse(x) : Matrix(0, 0));
                    return ModuleMap(s, part.module, std::move(c));
                }();
                part.projections.push_back(phi_inv * projections[k]);
                ++part.multiplicity;
                placed = true;
                break;
            }
        }
        if (!placed)
            res.parts.push_back({s, 1, {inc}, {projections[k]}});
    }

    // Certificate: the split maps reassemble the identity.
    ModuleMap sum = ModuleMap::zero(m, m);
    for (const auto& part : res.parts)
        for (std::size_t c = 0; c < part.multiplicity; ++c)
            sum = sum + part.inclusions[c] * part.projections[c];
    if (sum.components() != ModuleMap::identity(m).components())
        throw InternalInconsistency("decomposition certificate does not reassemble the identity");
    return res;
}

IsoResult iso_test(const Representation& m, const Representation& n, DecomposeOptions opt)
{
    if (!same_algebra(m, n))
        throw InvalidParameters("iso_test across different algebras");
    if (m.dims() != n.dims())
        return {IsoResult::Kind::not_iso, std::nullopt, "dimension vector"};
    if (m.is_zero())
        return {IsoResult::Kind::iso, ModuleMap::zero(m, n), "zero modules"};
    if (m.key() == n.key()) {
        std::vector<Matrix> c;
        for (std::size_t v = 0; v < m.vertex_count(); ++v)
            c.push_back(Matrix::identity(m.dim(v)));
        return {IsoResult::Kind::iso, ModuleMap(m, n, std::move(c)), "identical"};
    }
    const std::size_t emm = hom_dim(m, m), enn = hom_dim(n, n);
    if (emm != enn || hom_dim(n, m) != emm)
        return {IsoResult::Kind::not_iso, std::nullopt, "hom dimensions"};
    if (top_dims(m) != top_dims(n))
        return {IsoResult::Kind::not_iso, std::nullopt, "top"};
    if (socle_dims(m) != socle_dims(n))
        return {IsoResult::Kind::not_iso, std::nullopt, "socle"};
    auto basis = hom_space(m, n);
    if (basis.size() != emm)
        return {IsoResult::Kind::not_iso, std::nullopt, "hom dimensions"};
    for (const auto& f : basis)
        if (f.is_isomorphism())
            return {IsoResult::Kind::iso, f, "basis map"};
    auto back = hom_space(n, m);
    if (trace_form_rank(hom_space(m, m)) == 1) {
        // End(m) local with residue field K: g f is invertible iff its trace
        // is nonzero, so the pairing decides.
        for (const auto& f : basis)
            for (const auto& g : back)
                if (sgn(trace_of_product(g, f)) != 0)
                    return {IsoResult::Kind::iso, f, "split by composition"};
        return {IsoResult::Kind::not_iso, std::nullopt, "compositions lie in the radical of End"};
    }
    SmallIntRng rng(opt.seed);
    for (std::size_t t = 0; t < opt.budget; ++t) {
        std::vector<Scalar> w(basis.size());
        for (auto& x : w)
            x = rng.next(-3, 3);
        if (all_zero(w))
            continue;
        ModuleMap f = combination(basis, w);
        if (f.is_isomorphism())
            return {IsoResult::Kind::iso, f, "combination"};
    }
    return {IsoResult::Kind::inconclusive, std::nullopt, "no invertible map found within the search budget"};
}

bool isomorphic(const Representation& m, const Representation& n, DecomposeOptions opt)
{
    IsoResult r = iso_test(m, n, opt);
    if (r.kind == IsoResult::Kind::inconclusive)
        throw DecompositionInconclusive("isomorphism test inconclusive: " + r.reason);
    return r.kind == IsoResult::Kind::iso;
}

bool has_summand(const DecompositionResult& m, const Representation& x, DecomposeOptions opt)
{
    for (const auto& p : m.parts)
        if (isomorphic(p.module, x, opt))
            return true;
    return false;
}

}  // namespace bq
