#include "bq/stratify.hpp"

#include <algorithm>
#include <numeric>

#include "bq/endomorphism.hpp"
#include "bq/errors.hpp"
#include "bq/linalg.hpp"

namespace bq {

const char* family_name(Family f)
{
    switch (f) {
    case Family::standard:
        return "Delta";
    case Family::proper_standard:
        return "Deltabar";
    case Family::costandard:
        return "Nabla";
    default:
        return "Nablabar";
    }
}

std::size_t StratData::position(std::size_t v) const
{
    auto it = std::find(order.begin(), order.end(), v);
    if (it == order.end())
        throw InvalidParameters("vertex not in order");
    return static_cast<std::size_t>(it - order.begin());
}

const std::vector<Representation>& StratData::family(Family f) const
{
    switch (f) {
    case Family::standard:
        return delta;
    case Family::proper_standard:
        return delta_bar;
    case Family::costandard:
        return nabla;
    default:
        return nabla_bar;
    }
}

std::vector<std::string> StratData::order_ids() const
{
    std::vector<std::string> out;
    for (auto v : order)
        out.push_back(algebra->quiver().vertices()[v]);
    return out;
}

std::vector<std::size_t> order_from_ids(const Algebra& a, const std::vector<std::string>& ids)
{
    std::vector<std::size_t> out;
    for (const auto& id : ids)
        out.push_back(a.quiver().vertex_index(id));
    std::vector<std::size_t> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i)
            throw InvalidParameters("order must list every vertex exactly once");
    if (sorted.size() != a.vertex_count())
        throw InvalidParameters("order must list every vertex exactly once");
    return out;
}

namespace {

std::vector<Matrix> empty_generators(const Representation& m)
{
    std::vector<Matrix> g;
    for (std::size_t w = 0; w < m.vertex_count(); ++w)
        g.push_back(Matrix(m.dim(w), 0));
    return g;
}

// P(v) modulo the submodule generated by P(v)_w for higher w, and by the
// radical part of P(v)_v when `bar`.
Representation standard_quotient(const AlgebraPtr& a, const std::vector<std::size_t>& order, std::size_t v,
                                 bool bar, const std::string& name)
{
    Representation p = projective(a, v);
    std::vector<Matrix> gens = empty_generators(p);
    auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
    for (std::size_t q = pos + 1; q < order.size(); ++q)
        gens[order[q]] = Matrix::identity(p.dim(order[q]));
    if (bar) {
        const auto& corner = a->corner(v, v);
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < corner.size(); ++c)
            if (corner[c] != a->idempotent(v))
                cols.push_back(c);
        gens[v] = Matrix::identity(p.dim(v)).columns(cols);
    }
    return quotient_by(generated_submodule(p, gens)).module.renamed(name);
}

std::vector<Representation> standards(const AlgebraPtr& a, const std::vector<std::size_t>& order, bool bar,
                                      const std::string& prefix)
{
    std::vector<Representation> out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        out.push_back(standard_quotient(a, order, v, bar, prefix + "(" + a->quiver().vertices()[v] + ")"));
    return out;
}

FiltrationResult filter_by(const Representation& m, const std::vector<Representation>& fam,
                           const std::vector<std::size_t>& order, bool bar)
{
    FiltrationResult r;
    r.multiplicities.assign(m.vertex_count(), 0);
    Representation x = m;
    for (std::size_t p = order.size(); p-- > 0;) {
        const std::size_t v = order[p];
        if (x.dim(v) == 0)
            continue;
        std::vector<Matrix> gens = empty_generators(x);
        gens[v] = Matrix::identity(x.dim(v));
        Submodule u = generated_submodule(x, gens);
        const std::size_t k = bar ? u.module.dim(v) : top_dims(u.module)[v];
        if (u.module.total_dim() != k * fam[v].total_dim())
            return r;
        r.multiplicities[v] = k;
        x = quotient_by(u).module;
    }
    std::vector<std::size_t> dims(m.vertex_count(), 0);
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
        for (std::size_t w = 0; w < m.vertex_count(); ++w)
            dims[w] += r.multiplicities[v] * fam[v].dim(w);
    if (dims != m.dims())
        throw InternalInconsistency("filtration multiplicities do not reproduce the dimension vector");
    r.filtered = true;
    return r;
}

}  // namespace

StratData standard_modules(const AlgebraPtr& a, const std::vector<std::size_t>& order)
{
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(a->vertex_count());
    std::iota(iota.begin(), iota.end(), 0);
    if (sorted != iota)
        throw InvalidParameters("order must list every vertex exactly once");
    StratData s;
    s.algebra = a;
    s.order = order;
    s.delta = standards(a, order, false, "Delta");
    s.delta_bar = standards(a, order, true, "Deltabar");
    AlgebraPtr op = opposite(a);
    s.op_delta = standards(op, order, false, "Delta^op");
    s.op_delta_bar = standards(op, order, true, "Deltabar^op");
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        const std::string& id = a->quiver().vertices()[v];
        s.nabla.push_back(dualize(s.op_delta[v]).renamed("Nabla(" + id + ")"));
        s.nabla_bar.push_back(dualize(s.op_delta_bar[v]).renamed("Nablabar(" + id + ")"));
    }
    return s;
}

FiltrationResult filtration_test(const Representation& m, Family f, const StratData& s)
{
    switch (f) {
    case Family::standard:
        return filter_by(m, s.delta, s.order, false);
    case Family::proper_standard:
        return filter_by(m, s.delta_bar, s.order, true);
    case Family::costandard:
        return filter_by(dualize(m), s.op_delta, s.order, false);
    default:
        return filter_by(dualize(m), s.op_delta_bar, s.order, true);
    }
}

StratData classify_stratification(Context& ctx, const AlgebraPtr& a, const std::vector<std::size_t>& order)
{
    StratData s = standard_modules(a, order);
    Representation reg = regular(a);
    Representation reg_op = regular(opposite(a));
    s.regular_in_f_delta = filter_by(reg, s.delta, order, false).filtered;
    s.regular_in_f_delta_bar = filter_by(reg, s.delta_bar, order, true).filtered;
    s.op_regular_in_f_delta = filter_by(reg_op, s.op_delta, order, false).filtered;
    s.op_regular_in_f_delta_bar = filter_by(reg_op, s.op_delta_bar, order, true).filtered;
    s.standardly_stratified = s.regular_in_f_delta_bar;
    s.properly_stratified = s.regular_in_f_delta_bar && s.op_regular_in_f_delta_bar;
    s.schurian = true;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        s.schurian = s.schurian && s.delta[v].dim(v) == 1;
    if (s.standardly_stratified) {
        s.gldim = global_dimension(ctx, a);
        s.quasi_hereditary = s.gldim->is_exact();
    }
    s.classified = true;
    return s;
}

std::vector<StratData> search_orders(Context& ctx, const AlgebraPtr& a)
{
    if (a->vertex_count() > 8)
        throw TooManyVertices("order search is limited to 8 vertices, got " + std::to_string(a->vertex_count()));
    std::vector<std::size_t> order(a->vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::vector<StratData> out;
    do {
        out.push_back(classify_stratification(ctx, a, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

void check_duality_assertion(const Algebra& a)
{
    Matrix c = a.cartan();
    if (c != c.transpose())
        throw PreconditionFailed("duality asserted but the Cartan matrix of " + a.name() + " is not symmetric");
}

std::vector<Representation> basic_summands(const Representation& m, DecomposeOptions opt)
{
    std::vector<Representation> out;
    if (m.is_zero())
        return out;
    for (const auto& p : decompose(m, opt).parts)
        out.push_back(p.module);
    return out;
}

namespace {

bool iso_to_some(const Representation& x, const std::vector<Representation>& list, DecomposeOptions opt)
{
    for (const auto& y : list)
        if (x.dims() == y.dims() && isomorphic(x, y, opt))
            return true;
    return false;
}

// Union of summand lists up to isomorphism.
void merge_basic(std::vector<Representation>& into, const std::vector<Representation>& more, DecomposeOptions opt)
{
    for (const auto& x : more)
        if (!iso_to_some(x, into, opt))
            into.push_back(x);
}

bool same_basic(const std::vector<Representation>& a, const std::vector<Representation>& b, DecomposeOptions opt)
{
    if (a.size() != b.size())
        return false;
    for (const auto& x : a)
        if (!iso_to_some(x, b, opt))
            return false;
    return true;
}

Representation sum_of(const AlgebraPtr& a, const std::vector<Representation>& parts, const std::string& name)
{
    if (parts.empty())
        return Representation::zero(a).renamed(name);
    return direct_sum_module(parts).renamed(name);
}

// Ext^k(t, t) = 0 for 1 <= k <= n.
bool self_orthogonal(Context& ctx, const Representation& t, std::size_t n)
{
    for (std::size_t k = 1; k <= n; ++k)
        if (ext_dimension(ctx, t, t, k) != 0)
            return false;
    return true;
}

void certify_tilting(Context& ctx, const StratData& s, TiltingModule& t)
{
    const auto& a = s.algebra;
    if (t.summands.size() != a->vertex_count())
        throw CertificateFailure("characteristic tilting candidate has " + std::to_string(t.summands.size()) +
                                 " summands for " + std::to_string(a->vertex_count()) + " vertices");
    for (const auto& x : t.summands) {
        if (!filtration_test(x, Family::standard, s).filtered)
            throw CertificateFailure(x.name() + " is not in F(Delta)");
        if (!filtration_test(x, Family::proper_costandard, s).filtered)
            throw CertificateFailure(x.name() + " is not in F(Nablabar)");
    }
    t.projdim = projective_dimension(ctx, t.module);
    t.injdim = injective_dimension(ctx, t.module);
    if (!t.projdim.is_exact())
        throw CertificateFailure("projective dimension of the tilting candidate is " + t.projdim.to_string());
    if (!self_orthogonal(ctx, t.module, t.projdim.value))
        throw CertificateFailure("tilting candidate is not self-orthogonal");
}

bool regular_in_f_delta(const StratData& s)
{
    return s.classified ? s.regular_in_f_delta : filter_by(regular(s.algebra), s.delta, s.order, false).filtered;
}

}  // namespace

bool in_add(const Representation& m, const std::vector<Representation>& t_summands, DecomposeOptions opt)
{
    for (const auto& x : basic_summands(m, opt))
        if (!iso_to_some(x, t_summands, opt))
            return false;
    return true;
}

TiltingModule characteristic_tilting_by_extensions(Context& ctx, const StratData& s)
{
    if (!regular_in_f_delta(s))
        throw NotStratified("A is not filtered by standard modules for this order");
    const auto& a = s.algebra;
    DecomposeOptions opt = ctx.decompose_options();
    TiltingModule t;
    t.route = "universal extensions";
    for (std::size_t p = 0; p < s.order.size(); ++p) {
        const std::size_t i = s.order[p];
        Representation y = s.delta[i];
        for (std::size_t q = p; q-- > 0;) {
            const Representation& dj = s.delta[s.order[q]];
            for (;;) {
                Ext1Classes c = ext1_classes(dj, y);
                if (c.cocycles.empty())
                    break;
                y = extension_from_cocycle(c, c.cocycles.front()).middle;
            }
        }
        const std::string name = "T(" + a->quiver().vertices()[i] + ")";
        auto parts = basic_summands(y, opt);
        if (parts.size() == 1)
            parts.front() = parts.front().renamed(name);
        merge_basic(t.summands, parts, opt);
    }
    t.module = sum_of(a, t.summands, "T");
    certify_tilting(ctx, s, t);
    return t;
}

Representation cosyzygy_tilting_candidate(Context& ctx, const AlgebraPtr& a, std::size_t i,
                                          std::vector<Representation>* summands)
{
    ProjInj e = minimal_faithful_projinj(ctx, a);
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        if (std::find(e.vertices.begin(), e.vertices.end(), v) == e.vertices.end())
            rest.push_back(v);
    DecomposeOptions opt = ctx.decompose_options();
    std::vector<Representation> parts;
    for (auto v : e.vertices)
        parts.push_back(projective(a, v));
    Representation omega = ctx.cosyzygy(projective_sum(a, rest).renamed("(1-e)A"), i);
    merge_basic(parts, basic_summands(omega, opt), opt);
    if (summands)
        *summands = parts;
    return sum_of(a, parts, "eA+Omega^-" + std::to_string(i) + "((1-e)A)");
}

std::optional<TiltingModule> characteristic_tilting_from_cosyzygies(Context& ctx, const StratData& s)
{
    const std::size_t r = certify_auslander_gorenstein(ctx, s.algebra).r;
    for (std::size_t i = 0; i <= r; ++i) {
        TiltingModule t;
        t.route = "cosyzygy";
        t.cosyzygy_degree = i;
        t.module = cosyzygy_tilting_candidate(ctx, s.algebra, i, &t.summands);
        bool ok = t.summands.size() == s.algebra->vertex_count();
        for (const auto& x : t.summands)
            ok = ok && filtration_test(x, Family::standard, s).filtered &&
                 filtration_test(x, Family::proper_costandard, s).filtered;
        if (!ok)
            continue;
        certify_tilting(ctx, s, t);
        return t;
    }
    return std::nullopt;
}

TiltingModule characteristic_tilting(Context& ctx, const StratData& s)
{
    if (!regular_in_f_delta(s))
        throw NotStratified("A is not filtered by standard modules for this order");
    try {
        if (auto t = characteristic_tilting_from_cosyzygies(ctx, s))
            return *t;
    } catch (const NotAuslanderGorenstein&) {
    } catch (const DominantDimensionZero&) {
    }
    return characteristic_tilting_by_extensions(ctx, s);
}

TiltingModule characteristic_cotilting(Context& ctx, const StratData& s)
{
    StratData so = standard_modules(opposite(s.algebra), s.order);
    TiltingModule to = characteristic_tilting(ctx, so);
    TiltingModule c;
    c.route = to.route;
    c.cosyzygy_degree = to.cosyzygy_degree;
    for (const auto& x : to.summands)
        c.summands.push_back(dualize(x).renamed("D(" + x.name() + ")"));
    c.module = sum_of(s.algebra, c.summands, "C");
    c.projdim = projective_dimension(ctx, c.module);
    c.injdim = injective_dimension(ctx, c.module);
    return c;
}

namespace {

std::vector<Scalar> flatten(const ModuleMap& f)
{
    std::vector<Scalar> out;
    for (const auto& c : f.components())
        out.insert(out.end(), c.data().begin(), c.data().end());
    return out;
}

Matrix columns_of(const std::vector<std::vector<Scalar>>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    return m;
}

// Minimal left add(T)-approximation of x: for each summand t a basis of
// Hom(x,t) modulo the maps factoring through radical maps between summands.
ModuleMap left_approximation(const Representation& x, const std::vector<Representation>& summands)
{
    const std::size_t n = summands.size();
    std::vector<std::vector<ModuleMap>> homs(n);
    for (std::size_t j = 0; j < n; ++j)
        homs[j] = hom_space(x, summands[j]);
    std::vector<ModuleMap> maps;
    std::vector<Representation> targets;
    for (std::size_t j = 0; j < n; ++j) {
        if (homs[j].empty())
            continue;
        const std::size_t len = flatten(homs[j].front()).size();
        std::vector<std::vector<Scalar>> rad;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<ModuleMap> rij = i == j ? radical_endomorphisms(summands[j]) : hom_space(summands[i], summands[j]);
            for (const auto& g : rij)
                for (const auto& h : homs[i])
                    rad.push_back(flatten(g * h));
        }
        std::vector<std::vector<Scalar>> all;
        for (const auto& h : homs[j])
            all.push_back(flatten(h));
        for (auto c : extending_columns(columns_of(rad, len), columns_of(all, len))) {
            maps.push_back(homs[j][c]);
            targets.push_back(summands[j]);
        }
    }
    if (maps.empty())
        return ModuleMap::zero(x, Representation::zero(x.algebra()));
    DirectSum d = direct_sum(targets);
    ModuleMap f = d.injections[0] * maps[0];
    for (std::size_t k = 1; k < maps.size(); ++k)
        f = f + d.injections[k] * maps[k];
    return f;
}

// Length of an add(T)-coresolution of the regular module within `limit`
// steps, or an explanation of the failure.
std::optional<std::size_t> coresolve_regular(const AlgebraPtr& a, const std::vector<Representation>& summands,
                                             std::size_t limit, DecomposeOptions opt, std::string& why)
{
    Representation x = regular(a);
    for (std::size_t s = 0; s <= limit; ++s) {
        if (in_add(x, summands, opt))
            return s;
        ModuleMap f = left_approximation(x, summands);
        if (!f.is_injective()) {
            why = s == 0 ? "A is not cogenerated by T" : "cokernel at step " + std::to_string(s) + " not cogenerated";
            return std::nullopt;
        }
        x = cokernel(f).module;
    }
    why = "no add(T)-coresolution of A within " + std::to_string(limit) + " steps";
    return std::nullopt;
}

}  // namespace

TiltingReport verify_tilting(Context& ctx, const Representation& t)
{
    const AlgebraPtr& a = t.algebra();
    DecomposeOptions opt = ctx.decompose_options();
    TiltingReport rep;
    rep.projdim = projective_dimension(ctx, t);
    if (!rep.projdim.is_exact())
        throw NotTilting("projective dimension is " + rep.projdim.to_string());
    if (!self_orthogonal(ctx, t, rep.projdim.value))
        throw NotTilting("Ext^k(T,T) != 0 for some 1 <= k <= projdim");
    rep.self_orthogonal = true;
    std::vector<Representation> summands = basic_summands(t, opt);
    std::string why;
    auto len = coresolve_regular(a, summands, rep.projdim.value, opt, why);
    if (!len)
        throw NotTilting(why);
    rep.coresolution_length = *len;

    rep.injdim = injective_dimension(ctx, t);
    if (!rep.injdim.is_exact()) {
        rep.cotilting_failure = "injective dimension is " + rep.injdim.to_string();
    } else if (!self_orthogonal(ctx, t, rep.injdim.value)) {
        rep.cotilting_failure = "Ext^k(T,T) != 0 for some 1 <= k <= injdim";
    } else {
        std::vector<Representation> dual;
        for (const auto& x : summands)
            dual.push_back(dualize(x));
        std::string dwhy;
        if (coresolve_regular(opposite(a), dual, rep.injdim.value, opt, dwhy))
            rep.cotilting = true;
        else
            rep.cotilting_failure = "D(A) has no add(T)-resolution: " + dwhy;
    }
    if (!rep.cotilting) {
        bool gorenstein = false;
        try {
            certified_gorenstein_dimension(ctx, a);
            gorenstein = true;
        } catch (const NotGorensteinCertified&) {
        }
        if (gorenstein)
            throw InternalInconsistency("tilting module over a Gorenstein algebra is not cotilting: " +
                                        rep.cotilting_failure);
    }
    return rep;
}

bool perp_membership(Context& ctx, const Representation& m, const Representation& t, PerpSide side, std::size_t depth)
{
    for (std::size_t k = 1; k <= depth; ++k) {
        std::size_t d = side == PerpSide::left ? ext_dimension(ctx, m, t, k) : ext_dimension(ctx, t, m, k);
        if (d != 0)
            return false;
    }
    return true;
}

std::string CategoryRef::label() const
{
    const std::string n = std::to_string(k);
    switch (cat) {
    case Category::f_delta:
        return "F(Delta)";
    case Category::f_delta_bar:
        return "F(Deltabar)";
    case Category::f_nabla:
        return "F(Nabla)";
    case Category::f_nabla_bar:
        return "F(Nablabar)";
    case Category::dom:
        return "Dom_" + n;
    case Category::codom:
        return "Codom_" + n;
    case Category::proj:
        return "Proj_" + n;
    case Category::inj:
        return "Inj_" + n;
    case Category::gproj:
        return "GProj_" + n;
    case Category::ginj:
        return "GInj_" + n;
    case Category::left_perp_t:
        return "perp(T)";
    default:
        return "(T)perp";
    }
}

bool is_member(const CategoryContext& c, const Representation& m, const CategoryRef& cat)
{
    Context& ctx = *c.ctx;
    auto need_strat = [&]() -> const StratData& {
        if (!c.strat)
            throw PreconditionFailed(cat.label() + " needs stratification data");
        return *c.strat;
    };
    auto need_g = [&] {
        if (!c.gorenstein_dimension)
            throw NotGorensteinCertified(cat.label() + " needs a certified Gorenstein dimension");
        return *c.gorenstein_dimension;
    };
    auto need_t = [&] {
        if (!c.tilting)
            throw PreconditionFailed(cat.label() + " needs a tilting module");
        return *c.tilting;
    };
    auto at_most = [&](const DimValue& d) { return d.is_exact() && d.value <= cat.k; };
    switch (cat.cat) {
    case Category::f_delta:
        return filtration_test(m, Family::standard, need_strat()).filtered;
    case Category::f_delta_bar:
        return filtration_test(m, Family::proper_standard, need_strat()).filtered;
    case Category::f_nabla:
        return filtration_test(m, Family::costandard, need_strat()).filtered;
    case Category::f_nabla_bar:
        return filtration_test(m, Family::proper_costandard, need_strat()).filtered;
    case Category::dom:
        return dominant_dimension(ctx, m).at_least_known(cat.k);
    case Category::codom:
        return codominant_dimension(ctx, m).at_least_known(cat.k);
    case Category::proj:
        return at_most(projective_dimension(ctx, m));
    case Category::inj:
        return at_most(injective_dimension(ctx, m));
    case Category::gproj:
        return gp_dimension(ctx, m, need_g()) <= cat.k;
    case Category::ginj:
        return gi_dimension(ctx, m, need_g()) <= cat.k;
    case Category::left_perp_t:
        return perp_membership(ctx, m, need_t(), PerpSide::left, c.perp_depth);
    default:
        return perp_membership(ctx, m, need_t(), PerpSide::right, c.perp_depth);
    }
}

CategoryComparison compare_categories(const CategoryContext& c, const std::vector<Representation>& testset,
                                      const CategoryRef& a, const CategoryRef& b)
{
    CategoryComparison out;
    out.left = a.label();
    out.right = b.label();
    for (const auto& m : testset) {
        ++out.checked;
        if (is_member(c, m, a) != is_member(c, m, b))
            out.mismatches.push_back(m.name());
    }
    return out;
}

CategoryComparison compare_inclusion(const CategoryContext& c, const std::vector<Representation>& testset,
                                     const CategoryRef& a, const CategoryRef& b)
{
    CategoryComparison out;
    out.left = a.label();
    out.right = b.label();
    for (const auto& m : testset) {
        ++out.checked;
        if (is_member(c, m, a) && !is_member(c, m, b))
            out.mismatches.push_back(m.name());
    }
    return out;
}

std::vector<Representation> canonical_test_set(Context& ctx, const StratData& s, std::size_t depth,
                                               const std::vector<Representation>& extra)
{
    std::vector<Representation> out = base_test_set(ctx, s.algebra, depth);
    for (const auto* fam : {&s.delta, &s.delta_bar, &s.nabla, &s.nabla_bar})
        for (const auto& m : *fam)
            add_unique(out, m);
    for (const auto& m : extra)
        add_unique(out, m);
    return out;
}

MainEquivalenceReport verify_main_equivalences(Context& ctx, const StratData& s, const std::vector<Representation>& testset)
{
    MainEquivalenceReport rep;
    try {
        rep.r = certify_auslander_gorenstein(ctx, s.algebra).r;
    } catch (const NotAuslanderGorenstein& e) {
        throw NotApplicable(std::string("not Auslander-Gorenstein: ") + e.what());
    }
    if (!regular_in_f_delta(s))
        throw NotApplicable("A is not filtered by standard modules for this order");
    TiltingModule t = characteristic_tilting_by_extensions(ctx, s);
    if (t.projdim.value > rep.r)
        throw NotApplicable("characteristic tilting module has projective dimension above the Gorenstein dimension");
    rep.i = t.projdim.value;
    const std::size_t r = rep.r, i = rep.i;
    DecomposeOptions opt = ctx.decompose_options();

    std::vector<Representation> cand;
    cosyzygy_tilting_candidate(ctx, s.algebra, i, &cand);
    rep.tilting_is_cosyzygy = same_basic(t.summands, cand, opt);

    rep.standard_dimensions = true;
    for (std::size_t v = 0; v < s.algebra->vertex_count(); ++v)
        rep.standard_dimensions = rep.standard_dimensions &&
                                  dominant_dimension(ctx, s.delta[v]).at_least_known(r - i) &&
                                  codominant_dimension(ctx, s.nabla_bar[v]).at_least_known(i);

    CategoryContext c{&ctx, &s, r, std::nullopt, 0};
    std::vector<Representation> ts = testset;
    for (const auto& d : s.delta)
        add_unique(ts, d);
    for (const auto& d : s.nabla_bar)
        add_unique(ts, d);
    auto inc1 = compare_inclusion(c, ts, {Category::f_delta}, {Category::dom, r - i});
    auto inc2 = compare_inclusion(c, ts, {Category::f_nabla_bar}, {Category::codom, i});
    rep.inclusions = inc1.equal() && inc2.equal();
    auto eq1 = compare_categories(c, ts, {Category::proj, i}, {Category::f_delta});
    auto eq2 = compare_categories(c, ts, {Category::codom, i}, {Category::f_nabla_bar});
    rep.equalities = eq1.equal() && eq2.equal();
    rep.comparisons = {inc1, inc2, eq1, eq2};
    return rep;
}

bool DualityIdentityReport::all_hold() const
{
    bool ok = gordim_is_2m && tilting_is_cotilting;
    for (const auto& c : comparisons)
        ok = ok && c.equal();
    return ok;
}

DualityIdentityReport verify_duality_identities(Context& ctx, const StratData& s, const std::vector<Representation>& testset)
{
    if (!s.classified || !s.properly_stratified)
        throw NotApplicable("not properly stratified for this order");
    if (!s.duality_asserted)
        throw NotApplicable("no duality asserted");
    check_duality_assertion(*s.algebra);
    DualityIdentityReport rep;
    try {
        rep.gordim = certify_auslander_gorenstein(ctx, s.algebra).r;
    } catch (const NotAuslanderGorenstein& e) {
        throw NotApplicable(std::string("not Auslander-Gorenstein: ") + e.what());
    }
    DecomposeOptions opt = ctx.decompose_options();
    TiltingModule t = characteristic_tilting(ctx, s);
    TiltingModule c = characteristic_cotilting(ctx, s);
    rep.tilting_is_cotilting = same_basic(t.summands, c.summands, opt);
    if (!rep.tilting_is_cotilting)
        throw NotApplicable("characteristic tilting and cotilting modules differ");
    rep.m = t.projdim.value;
    rep.gordim_is_2m = rep.gordim == 2 * rep.m;
    const std::size_t m = rep.m;
    CategoryContext cc{&ctx, &s, rep.gordim, std::nullopt, 0};
    rep.comparisons = {
        compare_categories(cc, testset, {Category::f_delta_bar}, {Category::dom, m}),
        compare_categories(cc, testset, {Category::dom, m}, {Category::gproj, m}),
        compare_categories(cc, testset, {Category::f_delta}, {Category::proj, m}),
        compare_categories(cc, testset, {Category::f_nabla_bar}, {Category::codom, m}),
        compare_categories(cc, testset, {Category::codom, m}, {Category::ginj, m}),
        compare_categories(cc, testset, {Category::f_nabla}, {Category::inj, m}),
    };
    return rep;
}

GorensteinTiltingConsistency gorenstein_tilting_consistency(Context& ctx, const StratData& s)
{
    GorensteinTiltingConsistency out;
    out.properly_stratified = s.classified && s.properly_stratified;
    if (!out.properly_stratified)
        return out;
    out.gorenstein = gorenstein_dimension(ctx, s.algebra).gorenstein;
    TiltingModule t = characteristic_tilting(ctx, s);
    TiltingModule c = characteristic_cotilting(ctx, s);
    out.tilting_is_cotilting = same_basic(t.summands, c.summands, ctx.decompose_options());
    return out;
}

}  // namespace bq
