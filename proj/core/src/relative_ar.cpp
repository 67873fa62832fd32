#include "bq/relative_ar.hpp"

#include "bq/errors.hpp"
#include "bq/linalg.hpp"
#include "bq/stratify.hpp"

namespace bq {

namespace {

std::vector<Scalar> flatten(const ModuleMap& f)
{
    std::vector<Scalar> out;
    for (const auto& c : f.components())
        out.insert(out.end(), c.data().begin(), c.data().end());
    return out;
}

// Some s: m -> E with right * s = id.
bool has_section(const ModuleMap& right)
{
    auto homs = hom_space(right.target(), right.source());
    auto id = flatten(ModuleMap::identity(right.target()));
    if (homs.empty())
        return id.empty();
    Matrix a(id.size(), homs.size());
    for (std::size_t c = 0; c < homs.size(); ++c) {
        auto v = flatten(right * homs[c]);
        for (std::size_t r = 0; r < id.size(); ++r)
            a(r, c) = v[r];
    }
    return solve_linear(a, Matrix::column_vector(id)).has_value();
}

}  // namespace

OmegaApproximation omega_approximation(Context& ctx, const Representation& m, std::size_t n)
{
    if (nonprojective_part(m, ctx.decompose_options()).is_zero())
        throw ProjectiveInput(m.name() + " is projective");
    OmegaApproximation out;
    out.core = ctx.syzygy(ctx.cosyzygy(m, n), n);
    if (!out.core.is_zero())
        out.summands = decompose(out.core, ctx.decompose_options()).summands();
    out.projective_part = projective_cover(m).map.source();
    return out;
}

RelativeARResult relative_ar_translate(Context& ctx, const Representation& m, std::size_t level)
{
    DecomposeOptions opt = ctx.decompose_options();
    if (m.is_zero() || !has_local_endomorphism_ring(m))
        throw InvalidParameters(m.name() + " is not indecomposable");
    DimValue d = dominant_dimension(ctx, m);
    if (!d.at_least_known(level))
        throw NotInSubcategory(m.name() + " has dominant dimension " + d.to_string() + " < " + std::to_string(level));
    RelativeARResult r;
    r.input = m;
    r.level = level;
    Representation tau = ar_translate(m);
    if (tau.is_zero())
        throw ExtProjective(m.name() + " is projective");
    Representation core = ctx.syzygy(ctx.cosyzygy(tau, level), level);
    std::vector<Representation> hits;
    for (const auto& y : basic_summands(core, opt))
        if (ext_dimension(ctx, m, y, 1) != 0)
            hits.push_back(y);
    if (hits.empty())
        throw ExtProjective(m.name() + " is Ext-projective in Dom_" + std::to_string(level));
    if (hits.size() > 1) {
        std::string names;
        for (const auto& y : hits)
            names += (names.empty() ? "" : ", ") + y.name();
        throw UniquenessViolation(std::to_string(hits.size()) + " summands of the approximation of tau(" + m.name() +
                                  ") pair with it: " + names);
    }
    r.translate = hits.front().renamed("tau_" + std::to_string(level) + "(" + m.name() + ")");
    r.ext_dim = ext_dimension(ctx, m, r.translate, 1);
    return r;
}

RelativeARResult relative_ar_sequence(Context& ctx, const Representation& m, std::size_t level)
{
    RelativeARResult r = relative_ar_translate(ctx, m, level);
    if (r.ext_dim != 1)
        return r;
    Ext1Classes c = ext1_classes(m, r.translate);
    if (c.cocycles.size() != 1)
        throw InternalInconsistency("Ext^1 dimension disagrees with the cocycle basis");
    Extension e = extension_from_cocycle(c, c.cocycles.front());
    r.determinate = true;
    r.middle = e.middle;
    r.middle_summands = decompose(e.middle, ctx.decompose_options()).summands();
    r.nonsplit = !has_section(e.right);
    r.ends_in_subcategory = dominant_dimension(ctx, m).at_least_known(level) &&
                            dominant_dimension(ctx, r.translate).at_least_known(level);
    return r;
}

}  // namespace bq
