#include "bq/homology.hpp"

#include <algorithm>

#include "bq/errors.hpp"
#include "bq/linalg.hpp"

namespace bq {

Representation projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices)
{
    if (vertices.empty())
        return Representation::zero(a);
    std::vector<Representation> parts;
    for (auto v : vertices)
        parts.push_back(projective(a, v));
    return parts.size() == 1 ? parts.front() : direct_sum_module(parts);
}

Representation injective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices)
{
    if (vertices.empty())
        return Representation::zero(a);
    std::vector<Representation> parts;
    for (auto v : vertices)
        parts.push_back(injective(a, v));
    return parts.size() == 1 ? parts.front() : direct_sum_module(parts);
}

namespace {

SparseVec multiply_sparse(const Algebra& a, const SparseVec& x, std::size_t b)
{
    std::map<std::size_t, Scalar> acc;
    for (const auto& [i, c] : x)
        for (const auto& [k, d] : a.product(i, b))
            acc[k] += c * d;
    SparseVec out;
    for (auto& [k, c] : acc)
        if (sgn(c) != 0)
            out.emplace_back(k, c);
    return out;
}

std::size_t corner_offset(const Algebra& a, const std::vector<std::size_t>& summands, std::size_t s, std::size_t w)
{
    std::size_t off = 0;
    for (std::size_t t = 0; t < s; ++t)
        off += a.corner(summands[t], w).size();
    return off;
}

std::string wrap(const std::string& op, const Representation& m)
{
    return op + "(" + (m.name().empty() ? std::string("M") : m.name()) + ")";
}

}  // namespace

ModuleMap map_between_projectives(const AlgebraPtr& a, const std::vector<std::size_t>& src,
                                  const std::vector<std::size_t>& tgt,
                                  const std::vector<std::vector<SparseVec>>& images)
{
    Representation source = projective_sum(a, src);
    Representation target = projective_sum(a, tgt);
    std::vector<Matrix> comps;
    for (std::size_t w = 0; w < a->vertex_count(); ++w) {
        Matrix m(target.dim(w), source.dim(w));
        std::size_t col = 0;
        for (std::size_t s = 0; s < src.size(); ++s)
            for (auto b : a->corner(src[s], w)) {
                std::size_t row = 0;
                for (std::size_t r = 0; r < tgt.size(); ++r) {
                    auto prod = multiply_sparse(*a, images[s][r], b);
                    auto coords = corner_coordinates(*a, tgt[r], w, prod);
                    for (std::size_t i = 0; i < coords.size(); ++i)
                        m(row + i, col) = coords[i];
                    row += coords.size();
                }
                ++col;
            }
        comps.push_back(std::move(m));
    }
    return ModuleMap(source, target, std::move(comps));
}

std::vector<std::vector<SparseVec>> generator_images(const ModuleMap& f, const std::vector<std::size_t>& src,
                                                     const std::vector<std::size_t>& tgt)
{
    const Algebra& a = *f.source().algebra();
    std::vector<std::vector<SparseVec>> out(src.size(), std::vector<SparseVec>(tgt.size()));
    for (std::size_t s = 0; s < src.size(); ++s) {
        const std::size_t v = src[s];
        const auto& own = a.corner(v, v);
        std::size_t pos = static_cast<std::size_t>(std::find(own.begin(), own.end(), a.idempotent(v)) - own.begin());
        auto col = f.at(v).column(corner_offset(a, src, s, v) + pos);
        std::size_t row = 0;
        for (std::size_t r = 0; r < tgt.size(); ++r) {
            const auto& idx = a.corner(tgt[r], v);
            for (std::size_t i = 0; i < idx.size(); ++i)
                if (sgn(col[row + i]) != 0)
                    out[s][r].emplace_back(idx[i], col[row + i]);
            row += idx.size();
        }
    }
    return out;
}

Cover projective_cover(const Representation& m)
{
    if (m.is_zero())
        throw ZeroModule("projective cover of the zero module");
    const AlgebraPtr& a = m.algebra();
    const std::size_t n = a->vertex_count();
    Submodule rad = radical(m);
    std::vector<std::size_t> vertices;
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t v = 0; v < n; ++v) {
        if (m.dim(v) == 0)
            continue;
        Matrix id = Matrix::identity(m.dim(v));
        for (auto c : extending_columns(rad.inclusion.at(v), id)) {
            vertices.push_back(v);
            gens.push_back(id.column(c));
        }
    }
    Representation source = projective_sum(a, vertices);
    std::vector<Matrix> comps;
    for (std::size_t w = 0; w < n; ++w) {
        Matrix c(m.dim(w), source.dim(w));
        std::size_t col = 0;
        for (std::size_t s = 0; s < vertices.size(); ++s)
            for (auto b : a->corner(vertices[s], w)) {
                auto img = m.act_basis(b).apply(gens[s]);
                for (std::size_t i = 0; i < img.size(); ++i)
                    c(i, col) = img[i];
                ++col;
            }
        comps.push_back(std::move(c));
    }
    ModuleMap map(source, m, std::move(comps));
    if (!map.is_surjective())
        throw InternalInconsistency("projective cover is not surjective");
    return {map, vertices};
}

Envelope injective_envelope(const Representation& m)
{
    if (m.is_zero())
        throw ZeroModule("injective envelope of the zero module");
    Cover c = projective_cover(dualize(m));
    ModuleMap d = dualize(c.map);
    Representation target = injective_sum(m.algebra(), c.vertices);
    ModuleMap map(m, target, d.components());
    return {map, c.vertices};
}

ModuleMap Resolution::differential(std::size_t k) const
{
    if (k == 0 || k >= steps.size())
        throw InvalidParameters("differential index out of range");
    if (side == Side::projective)
        return steps[k - 1].link * steps[k].map;
    return steps[k].map * steps[k - 1].link;
}

namespace {

void extend_projective(Resolution& res, std::size_t upto)
{
    while (!res.terminated && res.steps.size() < upto) {
        const Representation& cur = res.syzygy(res.steps.size());
        if (cur.is_zero()) {
            res.terminated = true;
            break;
        }
        Cover c = projective_cover(cur);
        Submodule k = kernel(c.map);
        std::size_t idx = res.steps.size() + 1;
        Representation next = k.module.renamed(wrap("Omega^" + std::to_string(idx), res.module));
        ModuleMap link(next, c.map.source(), k.inclusion.components());
        res.steps.push_back({c.vertices, c.map.source(), c.map, next, link});
        if (next.is_zero())
            res.terminated = true;
    }
    res.bound = std::max(res.bound, upto);
}

Resolution dual_resolution(const Resolution& p, const Representation& m)
{
    Resolution r;
    r.side = Side::injective;
    r.module = m;
    r.terminated = p.terminated;
    r.bound = p.bound;
    const AlgebraPtr& a = m.algebra();
    Representation prev = m;
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
        const auto& s = p.steps[k];
        Representation term = injective_sum(a, s.vertices);
        Representation next =
            dualize(s.next).renamed(wrap("Omega^-" + std::to_string(k + 1), m));
        ModuleMap map(prev, term, dualize(s.map).components());
        ModuleMap link(term, next, dualize(s.link).components());
        r.steps.push_back({s.vertices, term, map, next, link});
        prev = next;
    }
    return r;
}

}  // namespace

Resolution Context::projective_resolution(const Representation& m, std::size_t upto)
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    const std::string key = "P|" + m.key();
    auto it = memo_.find(key);
    if (it == memo_.end()) {
        Resolution r;
        r.side = Side::projective;
        r.module = m;
        it = memo_.emplace(key, std::move(r)).first;
    }
    extend_projective(it->second, upto);
    Resolution out = it->second;
    out.module = m;
    return out;
}

Resolution Context::injective_resolution(const Representation& m, std::size_t upto)
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    const std::string key = "I|" + m.key();
    auto it = memo_.find(key);
    if (it == memo_.end() || (!it->second.terminated && it->second.steps.size() < upto)) {
        Resolution dual = projective_resolution(dualize(m), upto);
        Resolution r = dual_resolution(dual, m);
        if (it == memo_.end())
            it = memo_.emplace(key, std::move(r)).first;
        else
            it->second = std::move(r);
    }
    Resolution out = it->second;
    out.module = m;
    return out;
}

Representation Context::syzygy(const Representation& m, std::size_t k)
{
    if (k == 0)
        return m;
    Resolution r = projective_resolution(m, k);
    return r.steps.size() >= k ? r.syzygy(k) : Representation::zero(m.algebra());
}

Representation Context::cosyzygy(const Representation& m, std::size_t k)
{
    if (k == 0)
        return m;
    Resolution r = injective_resolution(m, k);
    return r.steps.size() >= k ? r.syzygy(k) : Representation::zero(m.algebra());
}

Resolution min_projective_resolution(const Representation& m, std::size_t upto)
{
    Resolution r;
    r.side = Side::projective;
    r.module = m;
    extend_projective(r, upto);
    return r;
}

Resolution min_injective_resolution(const Representation& m, std::size_t upto)
{
    return dual_resolution(min_projective_resolution(dualize(m), upto), m);
}

std::size_t ext_dimension(Context& ctx, const Representation& m, const Representation& n, std::size_t i)
{
    if (i == 0)
        return hom_dim(m, n);
    Resolution r = ctx.projective_resolution(m, i);
    if (r.steps.size() < i)
        return 0;
    const auto& step = r.steps[i - 1];
    const Representation& x = r.syzygy(i - 1);
    std::size_t from_cover = 0;
    for (auto v : step.vertices)
        from_cover += n.dim(v);
    std::size_t h_next = step.next.is_zero() ? 0 : hom_dim(step.next, n);
    // 0 -> Hom(X,N) -> Hom(P,N) -> Hom(ΩX,N) -> Ext^1(X,N) -> 0
    return h_next + hom_dim(x, n) - from_cover;
}

std::size_t ext_dimension_injective(Context& ctx, const Representation& m, const Representation& n, std::size_t i)
{
    if (i == 0)
        return hom_dim(m, n);
    Resolution r = ctx.injective_resolution(n, i);
    if (r.steps.size() < i)
        return 0;
    const auto& step = r.steps[i - 1];
    const Representation& y = r.syzygy(i - 1);
    std::size_t into_envelope = 0;
    for (auto v : step.vertices)
        into_envelope += m.dim(v);
    std::size_t h_next = step.next.is_zero() ? 0 : hom_dim(m, step.next);
    return h_next + hom_dim(m, y) - into_envelope;
}

ExtResult ext(Context& ctx, const Representation& m, const Representation& n, std::size_t i)
{
    ExtResult e;
    e.degree = i;
    e.projective_side = ext_dimension(ctx, m, n, i);
    e.injective_side = ext_dimension_injective(ctx, m, n, i);
    if (e.projective_side != e.injective_side)
        throw InternalInconsistency("Ext^" + std::to_string(i) + " differs between the two resolutions");
    e.dimension = e.projective_side;
    return e;
}

namespace {

std::vector<Scalar> flatten(const ModuleMap& f)
{
    std::vector<Scalar> out;
    for (const auto& c : f.components())
        out.insert(out.end(), c.data().begin(), c.data().end());
    return out;
}

Matrix as_columns(const std::vector<ModuleMap>& maps, std::size_t len)
{
    Matrix m(len, maps.size());
    for (std::size_t j = 0; j < maps.size(); ++j) {
        auto v = flatten(maps[j]);
        for (std::size_t i = 0; i < len; ++i)
            m(i, j) = v[i];
    }
    return m;
}

}  // namespace

Ext1Classes ext1_classes(const Representation& m, const Representation& n)
{
    Ext1Classes out;
    out.cover = projective_cover(m);
    Submodule k = kernel(out.cover.map);
    out.syzygy_inclusion = k.inclusion;
    if (k.module.is_zero() || n.is_zero())
        return out;
    auto cocycles = hom_space(k.module, n);
    if (cocycles.empty())
        return out;
    std::vector<ModuleMap> restricted;
    for (const auto& g : hom_space(out.cover.map.source(), n))
        restricted.push_back(g * k.inclusion);
    std::size_t len = flatten(cocycles.front()).size();
    Matrix base = as_columns(restricted, len);
    Matrix cand = as_columns(cocycles, len);
    for (auto j : extending_columns(base, cand))
        out.cocycles.push_back(cocycles[j]);
    return out;
}

Extension extension_from_cocycle(const Ext1Classes& c, const ModuleMap& cocycle)
{
    const Representation& n = cocycle.target();
    const Representation& p0 = c.cover.map.source();
    DirectSum ds = direct_sum({n, p0});
    ModuleMap g = ds.injections[0] * cocycle - ds.injections[1] * c.syzygy_inclusion;
    Quotient q = cokernel(g);
    ModuleMap left = q.projection * ds.injections[0];
    ModuleMap right = factor_through_quotient(q.projection, c.cover.map * ds.projections[1]);
    return {q.module, left, right};
}

Representation ar_translate(const Representation& m)
{
    const AlgebraPtr& a = m.algebra();
    if (m.is_zero())
        return Representation::zero(a);
    Cover c0 = projective_cover(m);
    Submodule omega = kernel(c0.map);
    if (omega.module.is_zero())
        return Representation::zero(a).renamed(wrap("tau", m));
    Cover c1 = projective_cover(omega.module);
    ModuleMap d = omega.inclusion * c1.map;
    auto x = generator_images(d, c1.vertices, c0.vertices);  // x[r][s] ∈ e_{v_s} A e_{u_r}
    std::vector<std::vector<SparseVec>> transposed(c0.vertices.size(), std::vector<SparseVec>(c1.vertices.size()));
    for (std::size_t r = 0; r < c1.vertices.size(); ++r)
        for (std::size_t s = 0; s < c0.vertices.size(); ++s)
            transposed[s][r] = x[r][s];
    AlgebraPtr op = opposite(a);
    ModuleMap f = map_between_projectives(op, c0.vertices, c1.vertices, transposed);
    Representation tr = cokernel(f).module;
    Representation t = dualize(tr);
    return t.renamed(wrap("tau", m));
}

Representation ar_translate_inverse(const Representation& m)
{
    return dualize(ar_translate(dualize(m))).renamed(wrap("tau^-", m));
}

namespace {

std::optional<Periodicity> find_period(Context& ctx, const Representation& m, std::size_t bound, bool projective_side)
{
    std::vector<Representation> seen{m};
    for (std::size_t k = 1; k <= bound; ++k) {
        Resolution r = projective_side ? ctx.projective_resolution(m, k) : ctx.injective_resolution(m, k);
        if (r.steps.size() < k || r.syzygy(k).is_zero())
            return std::nullopt;
        const Representation& cur = r.syzygy(k);
        for (std::size_t j = 0; j < k; ++j) {
            if (seen[j].dims() != cur.dims())
                continue;
            IsoResult iso = iso_test(seen[j], cur, ctx.decompose_options());
            if (iso.kind == IsoResult::Kind::iso)
                return Periodicity{j, k - j, *iso.map};
        }
        seen.push_back(cur);
    }
    return std::nullopt;
}

}  // namespace

std::optional<Periodicity> syzygy_periodicity(Context& ctx, const Representation& m, std::size_t bound)
{
    return find_period(ctx, m, bound, true);
}

std::optional<Periodicity> cosyzygy_periodicity(Context& ctx, const Representation& m, std::size_t bound)
{
    return find_period(ctx, m, bound, false);
}

bool is_generator_cogenerator(const Representation& m, DecomposeOptions opt)
{
    if (m.is_zero())
        return false;
    const AlgebraPtr& a = m.algebra();
    DecompositionResult d = decompose(m, opt);
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        if (!has_summand(d, projective(a, v), opt) || !has_summand(d, injective(a, v), opt))
            return false;
    return true;
}

DimValue mueller_domdim(Context& ctx, const Representation& m)
{
    if (!is_generator_cogenerator(m, ctx.decompose_options()))
        throw NotGeneratorCogenerator("module is not a generator-cogenerator");
    const std::size_t bound = ctx.bound();
    auto period = syzygy_periodicity(ctx, m, std::min<std::size_t>(bound, 16));
    for (std::size_t i = 1; i <= bound; ++i) {
        Resolution r = ctx.projective_resolution(m, i);
        if (r.steps.size() < i)
            return DimValue::at_least(bound + 1, "resolution terminated; all Ext^i(M,M) vanish");
        if (ext_dimension(ctx, m, m, i) != 0)
            return DimValue::exact(i + 1, "first nonvanishing Ext^" + std::to_string(i) + "(M,M)");
        // Ext^i(M,M) = Ext^1(Ω^{i-1}M, M) repeats with the syzygies.
        if (period && i >= period->onset + period->period + 1)
            return DimValue::at_least(bound + 1, "syzygies periodic from " + std::to_string(period->onset) +
                                                      " with period " + std::to_string(period->period) +
                                                      "; Ext^i(M,M) vanishes over a full period");
    }
    return DimValue::at_least(bound + 1, "Ext^i(M,M) = 0 for 1 <= i <= " + std::to_string(bound));
}

std::size_t gendo_gorenstein_check(Context& ctx, const Representation& n)
{
    const AlgebraPtr& a = n.algebra();
    if (n.is_zero())
        throw NotApplicable("the zero module adds nothing to the generator A");
    try {
        symmetric_form(*a, ctx.seed());
    } catch (const NotSymmetric& e) {
        throw NotApplicable(std::string("algebra is not certified symmetric: ") + e.what());
    }
    Representation m = direct_sum_module({regular(a), n});
    std::optional<std::size_t> first;
    for (std::size_t i = 1; i <= ctx.bound() && !first; ++i) {
        Resolution r = ctx.projective_resolution(m, i);
        if (r.steps.size() < i)
            break;
        if (ext_dimension(ctx, m, m, i) != 0)
            first = i;
    }
    if (!first)
        throw NotApplicable("Ext^i(A+N, A+N) vanishes up to the bound");
    // inf = s + 1 and the test is Ω^{s+2}(N) ≅ N with s + 1 = *first.
    const std::size_t shift = *first + 1;
    Representation w = ctx.syzygy(n, shift);
    IsoResult iso = iso_test(w, n, ctx.decompose_options());
    if (iso.kind != IsoResult::Kind::iso)
        throw NotApplicable("Omega^" + std::to_string(shift) + "(N) is not isomorphic to N" +
                            (iso.kind == IsoResult::Kind::inconclusive ? " (inconclusive)" : ""));
    return shift;
}

}  // namespace bq
