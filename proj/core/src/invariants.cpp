#include "bq/invariants.hpp"

#include <algorithm>

#include "bq/errors.hpp"

namespace bq {

namespace {

struct Scan {
    bool terminated = false;
    std::size_t length = 0;  // number of terms when terminated
    std::optional<Periodicity> period;
};

// Walks Ω^k (or Ω^{-k}) up to the bound, stopping at zero or at the first repeat.
Scan scan(Context& ctx, const Representation& m, bool projective_side)
{
    Scan s;
    std::vector<Representation> seen{m};
    for (std::size_t k = 1; k <= ctx.bound(); ++k) {
        Resolution r = projective_side ? ctx.projective_resolution(m, k) : ctx.injective_resolution(m, k);
        if (r.steps.size() < k) {
            s.terminated = true;
            s.length = r.steps.size();
            return s;
        }
        const Representation& cur = r.syzygy(k);
        if (cur.is_zero()) {
            s.terminated = true;
            s.length = k;
            return s;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (seen[j].dims() != cur.dims())
                continue;
            IsoResult iso = iso_test(seen[j], cur, ctx.decompose_options());
            if (iso.kind == IsoResult::Kind::iso) {
                s.period = Periodicity{j, k - j, *iso.map};
                return s;
            }
        }
        seen.push_back(cur);
    }
    return s;
}

std::string period_note(const Periodicity& p, const char* what)
{
    return std::string(what) + " periodic from step " + std::to_string(p.onset) + " with period " +
           std::to_string(p.period);
}

DimValue resolution_length(Context& ctx, const Representation& m, bool projective_side)
{
    if (m.is_zero())
        return DimValue::exact(0, "zero module");
    Scan s = scan(ctx, m, projective_side);
    if (s.terminated)
        return DimValue::exact(s.length - 1, "resolution terminated");
    if (s.period)
        return DimValue::infinite(period_note(*s.period, projective_side ? "syzygies" : "cosyzygies"));
    return DimValue::at_least(ctx.bound(), "nonzero up to the bound " + std::to_string(ctx.bound()));
}

DimValue max_of(const std::vector<DimValue>& vals)
{
    std::size_t mx = 0;
    bool bounded = false;
    for (const auto& v : vals) {
        if (v.is_infinite())
            return v;
        mx = std::max(mx, v.value);
        bounded = bounded || v.kind == DimValue::Kind::at_least;
    }
    return bounded ? DimValue::at_least(mx, "some term only bounded below") : DimValue::exact(mx, "maximum of terminated resolutions");
}

DimValue min_of(const std::vector<DimValue>& vals)
{
    std::optional<DimValue> exact, lower;
    for (const auto& v : vals) {
        if (v.is_exact() && (!exact || v.value < exact->value))
            exact = v;
        if (v.kind == DimValue::Kind::at_least && (!lower || v.value < lower->value))
            lower = v;
    }
    if (exact && (!lower || exact->value <= lower->value))
        return *exact;
    if (lower)
        return *lower;
    return vals.empty() ? DimValue::infinite("empty") : vals.front();
}

bool only_projective_injective(const Algebra& a, const std::vector<std::size_t>& vertices, bool projective_terms)
{
    for (auto v : vertices)
        if (projective_terms ? !a.projective_is_injective(v) : !a.injective_is_projective(v))
            return false;
    return true;
}

}  // namespace

DimValue dominant_dimension(Context& ctx, const Representation& m)
{
    if (m.is_zero())
        return DimValue::infinite("zero module");
    const Algebra& a = *m.algebra();
    if (a.selfinjective())
        return DimValue::infinite("self-injective algebra, every injective term is projective");
    std::optional<Periodicity> period;
    bool period_checked = false;
    for (std::size_t k = 0; k < ctx.bound(); ++k) {
        Resolution r = ctx.injective_resolution(m, k + 1);
        if (r.steps.size() <= k)
            return DimValue::infinite("injective resolution terminated with projective terms");
        if (!only_projective_injective(a, r.steps[k].vertices, false))
            return DimValue::exact(k, "I_" + std::to_string(k) + " not projective");
        if (!period_checked && k + 1 >= 8) {
            period_checked = true;
            period = cosyzygy_periodicity(ctx, m, ctx.bound());
        }
        if (period && k + 1 >= period->onset + period->period)
            return DimValue::infinite(period_note(*period, "cosyzygies") + ", all terms projective");
    }
    return DimValue::at_least(ctx.bound(), "first " + std::to_string(ctx.bound()) + " terms projective");
}

DimValue codominant_dimension(Context& ctx, const Representation& m) { return dominant_dimension(ctx, dualize(m)); }

DimValue algebra_dominant_dimension(Context& ctx, const AlgebraPtr& a)
{
    std::vector<DimValue> vals;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        vals.push_back(dominant_dimension(ctx, projective(a, v)));
    return min_of(vals);
}

DimValue projective_dimension(Context& ctx, const Representation& m) { return resolution_length(ctx, m, true); }

DimValue injective_dimension(Context& ctx, const Representation& m) { return resolution_length(ctx, m, false); }

DimValue global_dimension(Context& ctx, const AlgebraPtr& a)
{
    if (a->selfinjective() && !a->semisimple())
        return DimValue::infinite("self-injective, not semisimple");
    std::vector<DimValue> vals;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        vals.push_back(projective_dimension(ctx, simple(a, v)));
        if (vals.back().is_infinite()) {
            vals.back().certificate = "S(" + a->quiver().vertices()[v] + "): " + vals.back().certificate;
            return vals.back();
        }
    }
    return max_of(vals);
}

GorensteinDimensions gorenstein_dimension(Context& ctx, const AlgebraPtr& a)
{
    std::vector<DimValue> right, left;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        right.push_back(injective_dimension(ctx, projective(a, v)));
        left.push_back(projective_dimension(ctx, injective(a, v)));
    }
    GorensteinDimensions g{max_of(right), max_of(left), false};
    g.gorenstein = g.right.is_exact() && g.left.is_exact();
    if (g.gorenstein && g.right.value != g.left.value)
        throw InternalInconsistency("left and right self-injective dimensions are finite but differ");
    return g;
}

std::size_t certified_gorenstein_dimension(Context& ctx, const AlgebraPtr& a)
{
    GorensteinDimensions g = gorenstein_dimension(ctx, a);
    if (!g.gorenstein)
        throw NotGorensteinCertified("self-injective dimension not certified finite (right " + g.right.to_string() +
                                     ", left " + g.left.to_string() + ")");
    return g.value();
}

bool is_gorenstein_projective(Context& ctx, const Representation& m, std::size_t g)
{
    Representation a = regular(m.algebra());
    for (std::size_t i = 1; i <= g; ++i)
        if (ext_dimension(ctx, m, a, i) != 0)
            return false;
    return true;
}

bool is_gorenstein_projective(Context& ctx, const Representation& m)
{
    return is_gorenstein_projective(ctx, m, certified_gorenstein_dimension(ctx, m.algebra()));
}

bool is_gorenstein_injective(Context& ctx, const Representation& m, std::size_t g)
{
    return is_gorenstein_projective(ctx, dualize(m), g);
}

std::size_t gp_dimension(Context& ctx, const Representation& m, std::size_t g)
{
    Representation a = regular(m.algebra());
    std::size_t top = 0;
    for (std::size_t i = 1; i <= g; ++i)
        if (ext_dimension(ctx, m, a, i) != 0)
            top = i;
    for (std::size_t j = 0; j <= g; ++j) {
        Representation w = ctx.syzygy(m, j);
        if (w.is_zero() || is_gorenstein_projective(ctx, w, g)) {
            if (j != top)
                throw InternalInconsistency("Gorenstein projective dimension " + std::to_string(j) +
                                            " disagrees with the last nonvanishing Ext^i(M,A) at " +
                                            std::to_string(top));
            return j;
        }
    }
    throw InternalInconsistency("no Gorenstein projective syzygy within the Gorenstein dimension");
}

std::size_t gp_dimension(Context& ctx, const Representation& m)
{
    return gp_dimension(ctx, m, certified_gorenstein_dimension(ctx, m.algebra()));
}

std::size_t gi_dimension(Context& ctx, const Representation& m, std::size_t g)
{
    return gp_dimension(ctx, dualize(m), g);
}

std::size_t gi_dimension(Context& ctx, const Representation& m)
{
    return gi_dimension(ctx, m, certified_gorenstein_dimension(ctx, m.algebra()));
}

ProjInj minimal_faithful_projinj(Context& ctx, const AlgebraPtr& a)
{
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        Resolution r = ctx.injective_resolution(projective(a, v), 1);
        if (!only_projective_injective(*a, r.steps.front().vertices, false))
            throw DominantDimensionZero("injective envelope of P(" + a->quiver().vertices()[v] +
                                        ") is not projective");
    }
    ProjInj out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        if (a->projective_is_injective(v))
            out.vertices.push_back(v);
    out.module = projective_sum(a, out.vertices).renamed("eA");
    return out;
}

ProjInj minimal_faithful_projinj_left(Context& ctx, const AlgebraPtr& a)
{
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        Resolution r = ctx.projective_resolution(injective(a, v), 1);
        if (!only_projective_injective(*a, r.steps.front().vertices, true))
            throw DominantDimensionZero("projective cover of I(" + a->quiver().vertices()[v] +
                                        ") is not injective");
    }
    ProjInj out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        if (a->injective_is_projective(v))
            out.vertices.push_back(v);
    out.module = injective_sum(a, out.vertices).renamed("D(Af)");
    return out;
}

namespace {

Representation drop_summands(const Representation& m, DecomposeOptions opt, bool projective_side, const char* tag)
{
    if (m.is_zero())
        return m;
    DecompositionResult d = decompose(m, opt);
    std::vector<Representation> keep;
    for (const auto& s : d.summands()) {
        bool drop = projective_side ? projective_cover(s).map.is_isomorphism()
                                    : injective_envelope(s).map.is_isomorphism();
        if (!drop)
            keep.push_back(s);
    }
    std::string name = std::string(tag) + "(" + m.name() + ")";
    if (keep.empty())
        return Representation::zero(m.algebra()).renamed(name);
    return (keep.size() == 1 ? keep.front() : direct_sum_module(keep)).renamed(name);
}

}  // namespace

Representation nonprojective_part(const Representation& m, DecomposeOptions opt)
{
    return drop_summands(m, opt, true, "nonproj");
}

Representation noninjective_part(const Representation& m, DecomposeOptions opt)
{
    return drop_summands(m, opt, false, "noninj");
}

void add_unique(std::vector<Representation>& set, const Representation& m)
{
    if (m.is_zero())
        return;
    for (const auto& x : set)
        if (x.key() == m.key())
            return;
    set.push_back(m);
}

std::vector<Representation> base_test_set(Context& ctx, const AlgebraPtr& a, std::size_t depth)
{
    std::vector<Representation> out;
    auto s = structural_modules(a);
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        add_unique(out, s.projectives[v]);
        add_unique(out, s.injectives[v]);
        add_unique(out, s.simples[v]);
        const std::string& id = a->quiver().vertices()[v];
        add_unique(out, radical(s.projectives[v]).module.renamed("rad P(" + id + ")"));
        add_unique(out, quotient_by(socle(s.projectives[v])).module.renamed("P(" + id + ")/soc"));
        std::size_t ll = a->projective_loewy_length(v);
        for (std::size_t k = 1; k < ll; ++k)
            add_unique(out, projective_truncation(a, v, k));
    }
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        for (std::size_t k = 1; k <= depth; ++k) {
            add_unique(out, ctx.syzygy(s.simples[v], k));
            add_unique(out, ctx.cosyzygy(s.simples[v], k));
        }
    return out;
}

AuslanderGorenstein certify_auslander_gorenstein(Context& ctx, const AlgebraPtr& a)
{
    DimValue d = algebra_dominant_dimension(ctx, a);
    GorensteinDimensions g = gorenstein_dimension(ctx, a);
    if (!g.gorenstein || !d.is_exact() || d.value != g.value() || d.value < 2)
        throw NotAuslanderGorenstein("dominant dimension " + d.to_string() + ", Gorenstein dimension " +
                                     g.right.to_string() + "/" + g.left.to_string());
    return {d.value};
}

DomGprojReport verify_dom_gproj(Context& ctx, const AlgebraPtr& a, const std::vector<Representation>& testset)
{
    DomGprojReport rep;
    rep.r = certify_auslander_gorenstein(ctx, a).r;
    const std::size_t r = rep.r;
    rep.all_agree = true;
    for (const auto& m : testset) {
        if (m.is_zero())
            continue;
        DomGprojRow row;
        row.module = m.name();
        row.domdim = dominant_dimension(ctx, m);
        row.codomdim = codominant_dimension(ctx, m);
        row.gp_dim = gp_dimension(ctx, m, r);
        row.gi_dim = gi_dimension(ctx, m, r);
        row.agree = true;
        for (std::size_t j = 0; j <= r; ++j) {
            bool dom = row.domdim.at_least_known(r - j);
            bool codom = row.codomdim.at_least_known(r - j);
            if (dom != (row.gp_dim <= j) || codom != (row.gi_dim <= j))
                row.agree = false;
        }
        rep.all_agree = rep.all_agree && row.agree;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

InvariantReport analyze_algebra(Context& ctx, const AlgebraPtr& a)
{
    InvariantReport rep;
    rep.domdim = algebra_dominant_dimension(ctx, a);
    rep.domdim_left = algebra_dominant_dimension(ctx, opposite(a));
    rep.gldim = global_dimension(ctx, a);
    rep.gordim = gorenstein_dimension(ctx, a);
    try {
        rep.e = minimal_faithful_projinj(ctx, a);
        rep.f = minimal_faithful_projinj_left(ctx, a);
    } catch (const DominantDimensionZero&) {
    }
    return rep;
}

}  // namespace bq
