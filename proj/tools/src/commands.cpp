#include "bqcli/commands.hpp"

#include <algorithm>

#include "bq/errors.hpp"
#include "bq/relative_ar.hpp"
#include "bq/stratify.hpp"

namespace bq::cli {

namespace {

const std::string& vid(const Algebra& a, std::size_t v) { return a.quiver().vertices()[v]; }

std::optional<std::size_t> single_vertex(const std::vector<std::size_t>& dims)
{
    std::optional<std::size_t> out;
    for (std::size_t v = 0; v < dims.size(); ++v) {
        if (dims[v] == 0)
            continue;
        if (dims[v] > 1 || out)
            return std::nullopt;
        out = v;
    }
    return out;
}

std::string indecomposable_label(const Representation& m)
{
    const auto& a = m.algebra();
    if (auto v = single_vertex(top_dims(m))) {
        const std::string& id = vid(*a, *v);
        const std::size_t k = m.total_dim();
        const std::size_t full = projective(a, *v).total_dim();
        if (k == 1)
            return "S(" + id + ")";
        if (k == full && isomorphic(m, projective(a, *v)))
            return "P(" + id + ")";
        if (k < full && isomorphic(m, projective_truncation(a, *v, k)))
            return "trunc(" + id + ", " + std::to_string(k) + ")";
    }
    if (auto w = single_vertex(socle_dims(m)))
        if (m.total_dim() == injective(m.algebra(), *w).total_dim() && isomorphic(m, injective(m.algebra(), *w)))
            return "I(" + vid(*a, *w) + ")";
    return m.name();
}

Json dims_json(const Representation& m) { return Json(m.dims()); }

Json ids_json(const Algebra& a, const std::vector<std::size_t>& vs)
{
    Json j = Json::array();
    for (auto v : vs)
        j.push_back(vid(a, v));
    return j;
}

Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(to_string(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

Json modules_json(const std::vector<Representation>& ms)
{
    Json j = Json::array();
    for (const auto& m : ms)
        j.push_back(module_json(m));
    return j;
}

Json error_json(const Error& e)
{
    Json j;
    j["kind"] = e.kind();
    j["message"] = e.what();
    return j;
}

std::vector<std::size_t> resolve_order(const LoadedAlgebra& la, const RunOptions& o)
{
    const auto& ids = o.order.empty() ? la.spec.order : o.order;
    return order_from_ids(*la.algebra, ids);
}

bool explicit_order(const LoadedAlgebra& la, const RunOptions& o) { return !o.order.empty() || !la.spec.order.empty(); }

Json strat_row(const StratData& s)
{
    Json j;
    j["order"] = s.order_ids();
    j["regular_in_f_delta"] = s.regular_in_f_delta;
    j["standardly_stratified"] = s.standardly_stratified;
    j["properly_stratified"] = s.properly_stratified;
    j["quasi_hereditary"] = s.quasi_hereditary;
    j["schurian"] = s.schurian;
    j["gldim"] = s.gldim ? dim_json(*s.gldim) : Json(nullptr);
    return j;
}

Json strat_detail(const StratData& s)
{
    const auto& a = *s.algebra;
    Json j = Json::array();
    for (std::size_t p = s.order.size(); p-- > 0;) {
        const std::size_t v = s.order[p];
        Json row;
        row["vertex"] = vid(a, v);
        row["delta"] = dims_json(s.delta[v]);
        row["delta_bar"] = dims_json(s.delta_bar[v]);
        row["nabla"] = dims_json(s.nabla[v]);
        row["nabla_bar"] = dims_json(s.nabla_bar[v]);
        j.push_back(row);
    }
    return j;
}

Json tilting_json(const TiltingModule& t)
{
    Json j;
    j["route"] = t.route;
    j["cosyzygy_degree"] = t.cosyzygy_degree ? Json(*t.cosyzygy_degree) : Json(nullptr);
    j["projdim"] = dim_json(t.projdim);
    j["injdim"] = dim_json(t.injdim);
    j["summands"] = modules_json(t.summands);
    return j;
}

Json comparisons_json(const std::vector<CategoryComparison>& cs)
{
    Json j = Json::array();
    for (const auto& c : cs) {
        Json r;
        r["left"] = c.left;
        r["right"] = c.right;
        r["checked"] = c.checked;
        r["equal"] = c.equal();
        r["mismatches"] = c.mismatches;
        j.push_back(r);
    }
    return j;
}

std::vector<Representation> default_modules(const LoadedAlgebra& la, bool nonprojective_indecomposables)
{
    const auto& a = la.algebra;
    std::vector<Representation> out;
    if (nonprojective_indecomposables && la.spec.construction == Construction::kupisch && !la.endo) {
        for (std::size_t v = 0; v < a->vertex_count(); ++v)
            for (std::size_t k = 1; k < projective(a, v).total_dim(); ++k)
                out.push_back(projective_truncation(a, v, k));
        return out;
    }
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        out.push_back(simple(a, v));
    return out;
}

std::vector<Representation> requested_modules(const LoadedAlgebra& la, const RunOptions& o, bool nonprojective)
{
    if (o.modules.empty())
        return default_modules(la, nonprojective);
    std::vector<Representation> out;
    for (const auto& e : o.modules)
        out.push_back(build_module(la.algebra, e));
    return out;
}

Json resolution_json(const Resolution& r)
{
    const auto& a = *r.module.algebra();
    Json terms = Json::array();
    for (const auto& s : r.steps)
        terms.push_back(ids_json(a, s.vertices));
    Json j;
    j["terms"] = terms;
    j["terminated"] = r.terminated;
    return j;
}

}  // namespace

std::string module_label(const Representation& m)
{
    if (m.is_zero())
        return "0";
    if (has_local_endomorphism_ring(m))
        return indecomposable_label(m);
    std::vector<std::string> parts;
    for (const auto& s : decompose(m).summands())
        parts.push_back(indecomposable_label(s));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? " + " : "") + parts[i];
    return out;
}

Json module_json(const Representation& m)
{
    Json j;
    j["label"] = module_label(m);
    j["dims"] = dims_json(m);
    return j;
}

Json input_echo(const LoadedAlgebra& la)
{
    Json j;
    j["name"] = la.spec.name;
    j["construction"] = construction_name(la.spec.construction);
    j["endo_of"] = la.spec.endo_of ? Json(print_module_expr(*la.spec.endo_of)) : Json(nullptr);
    j["spec"] = print_algebra_spec(la.spec);
    return j;
}

Json run_analyze(const LoadedAlgebra& la, const RunOptions& o)
{
    Context ctx(o.bound, o.seed);
    const auto& a = la.algebra;
    Json r = report_header("analyze", o.bound, o.seed);
    r["input"] = input_echo(la);

    Json alg;
    alg["name"] = a->name();
    alg["dimension"] = a->dimension();
    alg["vertices"] = a->quiver().vertices();
    alg["arrow_count"] = a->quiver().arrow_count();
    alg["loewy_length"] = a->loewy_length();
    alg["connected"] = a->connected();
    alg["selfinjective"] = a->selfinjective();
    alg["symmetric"] = is_certified_symmetric(*a, o.seed);
    alg["cartan"] = matrix_json(a->cartan());
    r["algebra"] = alg;

    if (la.endo) {
        Json e;
        e["base"] = la.base->name();
        e["summands"] = modules_json(la.endo->summands);
        r["endomorphism"] = e;
    }

    auto inv = analyze_algebra(ctx, a);
    Json d;
    d["domdim"] = dim_json(inv.domdim);
    d["domdim_left"] = dim_json(inv.domdim_left);
    d["gldim"] = dim_json(inv.gldim);
    Json g;
    g["right"] = dim_json(inv.gordim.right);
    g["left"] = dim_json(inv.gordim.left);
    g["gorenstein"] = inv.gordim.gorenstein;
    d["gordim"] = g;
    d["projective_injective_vertices"] = inv.e ? ids_json(*a, inv.e->vertices) : Json(nullptr);
    r["invariants"] = d;
    return r;
}

Json run_resolve(const LoadedAlgebra& la, const RunOptions& o)
{
    Context ctx(o.bound, o.seed);
    Json r = report_header("resolve", o.bound, o.seed);
    r["input"] = input_echo(la);
    r["steps"] = o.steps;
    Json rows = Json::array();
    for (const auto& m : requested_modules(la, o, false)) {
        Json row = module_json(m);
        row["projective_resolution"] = resolution_json(ctx.projective_resolution(m, o.steps));
        row["injective_resolution"] = resolution_json(ctx.injective_resolution(m, o.steps));
        row["projdim"] = dim_json(projective_dimension(ctx, m));
        row["injdim"] = dim_json(injective_dimension(ctx, m));
        row["domdim"] = dim_json(dominant_dimension(ctx, m));
        row["codomdim"] = dim_json(codominant_dimension(ctx, m));
        rows.push_back(row);
    }
    r["modules"] = rows;
    return r;
}

Json run_stratify(const LoadedAlgebra& la, const RunOptions& o)
{
    Context ctx(o.bound, o.seed);
    Json r = report_header("stratify", o.bound, o.seed);
    r["input"] = input_echo(la);
    std::vector<StratData> all;
    const bool single = !o.all_orders && explicit_order(la, o);
    if (single)
        all.push_back(classify_stratification(ctx, la.algebra, resolve_order(la, o)));
    else
        all = search_orders(ctx, la.algebra);
    r["mode"] = single ? "single order" : "all orders";

    Json rows = Json::array();
    std::size_t ss = 0, ps = 0, qh = 0;
    for (const auto& s : all) {
        rows.push_back(strat_row(s));
        ss += s.standardly_stratified;
        ps += s.properly_stratified;
        qh += s.quasi_hereditary;
    }
    r["orders"] = rows;
    Json sum;
    sum["orders_checked"] = all.size();
    sum["standardly_stratified"] = ss;
    sum["properly_stratified"] = ps;
    sum["quasi_hereditary"] = qh;
    r["summary"] = sum;
    if (single)
        r["standard_modules"] = strat_detail(all.front());
    return r;
}

Json run_tilting(const LoadedAlgebra& la, const RunOptions& o)
{
    Context ctx(o.bound, o.seed);
    Json r = report_header("tilting", o.bound, o.seed);
    r["input"] = input_echo(la);

    std::optional<StratData> chosen;
    if (explicit_order(la, o)) {
        chosen = classify_stratification(ctx, la.algebra, resolve_order(la, o));
    } else {
        for (auto& s : search_orders(ctx, la.algebra))
            if (s.regular_in_f_delta) {
                chosen = std::move(s);
                break;
            }
        if (!chosen)
            throw NotStratified("the regular module has no standard filtration for any order");
    }
    StratData& s = *chosen;
    s.duality_asserted = la.spec.duality_asserted;
    r["stratification"] = strat_row(s);

    auto t = characteristic_tilting(ctx, s);
    r["tilting"] = tilting_json(t);
    auto rep = verify_tilting(ctx, t.module);
    Json v;
    v["projdim"] = dim_json(rep.projdim);
    v["self_orthogonal"] = rep.self_orthogonal;
    v["coresolution_length"] = rep.coresolution_length;
    v["cotilting"] = rep.cotilting;
    v["injdim"] = dim_json(rep.injdim);
    v["cotilting_failure"] = rep.cotilting_failure;
    r["verification"] = v;

    auto c = characteristic_cotilting(ctx, s);
    r["cotilting"] = tilting_json(c);
    r["tilting_equals_cotilting"] = in_add(t.module, c.summands) && in_add(c.module, t.summands);

    const auto ts = canonical_test_set(ctx, s, 2, t.summands);
    r["test_set_size"] = ts.size();
    try {
        auto m = verify_main_equivalences(ctx, s, ts);
        Json j;
        j["applicable"] = true;
        j["r"] = m.r;
        j["i"] = m.i;
        j["tilting_is_cosyzygy"] = m.tilting_is_cosyzygy;
        j["standard_dimensions"] = m.standard_dimensions;
        j["inclusions"] = m.inclusions;
        j["equalities"] = m.equalities;
        j["consistent"] = m.consistent();
        j["comparisons"] = comparisons_json(m.comparisons);
        r["main_equivalences"] = j;
    } catch (const NotApplicable& e) {
        r["main_equivalences"] = {{"applicable", false}, {"reason", e.what()}};
    }
    if (s.duality_asserted) {
        try {
            auto d = verify_duality_identities(ctx, s, ts);
            Json j;
            j["applicable"] = true;
            j["m"] = d.m;
            j["gordim"] = d.gordim;
            j["gordim_is_2m"] = d.gordim_is_2m;
            j["tilting_is_cotilting"] = d.tilting_is_cotilting;
            j["all_hold"] = d.all_hold();
            j["comparisons"] = comparisons_json(d.comparisons);
            r["duality_identities"] = j;
        } catch (const Error& e) {
            r["duality_identities"] = {{"applicable", false}, {"reason", std::string(e.kind()) + ": " + e.what()}};
        }
    }
    auto g = gorenstein_tilting_consistency(ctx, s);
    r["gorenstein_consistency"] = {{"properly_stratified", g.properly_stratified},
                                   {"gorenstein", g.gorenstein},
                                   {"tilting_is_cotilting", g.tilting_is_cotilting},
                                   {"consistent", g.consistent()}};
    return r;
}

Json run_relar(const LoadedAlgebra& la, const RunOptions& o)
{
    Context ctx(o.bound, o.seed);
    Json r = report_header("relar", o.bound, o.seed);
    r["input"] = input_echo(la);
    r["level"] = o.level;
    Json rows = Json::array();
    for (const auto& m : requested_modules(la, o, true)) {
        Json row = module_json(m);
        try {
            auto s = relative_ar_sequence(ctx, m, o.level);
            row["status"] = "ok";
            row["translate"] = module_json(s.translate);
            row["ext_dim"] = s.ext_dim;
            row["determinate"] = s.determinate;
            if (s.middle) {
                const std::string mid = module_label(*s.middle);
                row["middle"] = module_json(*s.middle);
                row["middle_summands"] = modules_json(s.middle_summands);
                row["sequence"] = "0 -> " + module_label(s.translate) + " -> " + mid + " -> " + module_label(m) + " -> 0";
                row["nonsplit"] = s.nonsplit;
                row["ends_in_subcategory"] = s.ends_in_subcategory;
            } else {
                row["middle"] = nullptr;
            }
        } catch (const Error& e) {
            row["status"] = "error";
            row["error"] = error_json(e);
        }
        rows.push_back(row);
    }
    r["sequences"] = rows;
    return r;
}

}  // namespace bq::cli
