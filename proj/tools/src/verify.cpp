#include "bqcli/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "bq/endomorphism.hpp"
#include "bq/errors.hpp"
#include "bq/families.hpp"
#include "bq/linalg.hpp"
#include "bq/random.hpp"
#include "bq/relative_ar.hpp"
#include "bq/stratify.hpp"
#include "bqcli/commands.hpp"

namespace bq::cli {

bool VerifyResult::passed() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<const Check*> VerifyResult::failures() const
{
    std::vector<const Check*> out;
    for (const auto& c : checks)
        if (!c.pass)
            out.push_back(&c);
    return out;
}

namespace {

class Checker {
public:
    explicit Checker(std::vector<Check>& out) : out_(out) {}

    void same(const std::string& name, const std::string& expected, const std::string& actual)
    {
        out_.push_back({name, expected, actual, expected == actual});
    }
    void dim(const std::string& name, const DimValue& expected, const DimValue& actual)
    {
        out_.push_back({name, expected.to_string(), actual.to_string() + " (" + actual.certificate + ")",
                        expected == actual});
    }
    void num(const std::string& name, std::size_t expected, std::size_t actual)
    {
        same(name, std::to_string(expected), std::to_string(actual));
    }
    void truth(const std::string& name, bool actual, bool expected = true)
    {
        same(name, expected ? "true" : "false", actual ? "true" : "false");
    }
    void categories(const std::string& name, const CategoryComparison& c, std::size_t expected_checked = 0)
    {
        std::string actual = c.equal() ? "equal" : "differ on";
        for (const auto& m : c.mismatches)
            actual += " " + m;
        actual += " (" + std::to_string(c.checked) + " modules)";
        bool ok = c.equal() && (expected_checked == 0 || c.checked == expected_checked);
        std::string expected = "equal";
        if (expected_checked)
            expected += " (" + std::to_string(expected_checked) + " modules)";
        out_.push_back({name, expected, actual, ok});
    }
    /// A battery: every one of `total` instances must hold, and there must be some.
    void battery(const std::string& name, std::size_t held, std::size_t total, std::size_t at_least = 1)
    {
        out_.push_back({name, "all of at least " + std::to_string(at_least) + " instances hold",
                        std::to_string(held) + "/" + std::to_string(total) + " hold",
                        held == total && total >= at_least});
    }
    /// Runs f, recording a failing check when it throws.
    void guarded(const std::string& name, const std::function<void()>& f)
    {
        try {
            f();
        } catch (const Error& e) {
            out_.push_back({name, "completes", std::string(e.kind()) + ": " + e.what(), false});
        } catch (const std::exception& e) {
            out_.push_back({name, "completes", std::string("exception: ") + e.what(), false});
        }
    }

private:
    std::vector<Check>& out_;
};

AlgebraPtr nak(std::vector<std::size_t> e) { return nakayama_from_kupisch({std::move(e), KupischShape::cyclic}); }

AlgebraPtr chain_223(std::size_t n)
{
    std::vector<std::size_t> k(n, 2);
    k.back() = 3;
    return nak(k);
}

AlgebraPtr b_ones(std::size_t n) { return bnlambda_family(n, std::vector<int>(n - 2, 1)); }

std::vector<std::size_t> identity_order(std::size_t n)
{
    std::vector<std::size_t> o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

// [1, 2, ..., n-1, 0]
std::vector<std::size_t> shifted_order(std::size_t n)
{
    std::vector<std::size_t> o;
    for (std::size_t i = 1; i < n; ++i)
        o.push_back(i);
    o.push_back(0);
    return o;
}

std::vector<Representation> nakayama_indecomposables(const AlgebraPtr& a)
{
    std::vector<Representation> out;
    for (std::size_t i = 0; i < a->vertex_count(); ++i)
        for (std::size_t k = 1; k <= projective(a, i).total_dim(); ++k)
            out.push_back(projective_truncation(a, i, k));
    return out;
}

Representation trunc(const AlgebraPtr& a, std::size_t i, std::size_t k) { return projective_truncation(a, i, k); }

std::string labels(const std::vector<Representation>& ms)
{
    std::vector<std::string> ls;
    for (const auto& m : ms)
        ls.push_back(module_label(m));
    std::sort(ls.begin(), ls.end());
    std::string out;
    for (std::size_t i = 0; i < ls.size(); ++i)
        out += (i ? " + " : "") + ls[i];
    return out;
}

CategoryContext category_context(Context& ctx, const StratData& s, std::optional<std::size_t> gordim = std::nullopt)
{
    CategoryContext c;
    c.ctx = &ctx;
    c.strat = &s;
    c.gorenstein_dimension = gordim;
    return c;
}

std::string tag(const std::string& prefix, std::size_t n) { return prefix + "=" + std::to_string(n) + ": "; }

// ---------------------------------------------------------------- criteria

void chain_223_instance(Checker& c, Context& ctx, std::size_t n)
{
    const std::string t = tag("n", n);
    auto a = chain_223(n);
    c.dim(t + "gldim", DimValue::exact(n), global_dimension(ctx, a));
    c.dim(t + "domdim", DimValue::exact(n), algebra_dominant_dimension(ctx, a));
    auto s = classify_stratification(ctx, a, shifted_order(n));
    c.truth(t + "quasi-hereditary at order " + [&] {
        std::string o;
        for (const auto& id : s.order_ids())
            o += (o.empty() ? "" : ",") + id;
        return "[" + o + "]";
    }(), s.quasi_hereditary);
    auto ind = nakayama_indecomposables(a);
    c.num(t + "indecomposables e_iA/e_iJ^k", a->dimension(), ind.size());
    auto cc = category_context(ctx, s);
    c.categories(t + "F(Delta) = Dom_1", compare_categories(cc, ind, {Category::f_delta}, {Category::dom, 1}),
                 ind.size());
    c.categories(t + "F(Nabla) = Codom_" + std::to_string(n - 1),
                 compare_categories(cc, ind, {Category::f_nabla}, {Category::codom, n - 1}), ind.size());
}

void criterion_kupisch_455(Checker& c, Context& ctx)
{
    auto a = nak({4, 5, 5});
    auto g = gorenstein_dimension(ctx, a);
    c.truth("Gorenstein certified", g.gorenstein);
    c.dim("Gorenstein dimension (injdim A_A)", DimValue::exact(2), g.right);
    c.dim("Gorenstein dimension (injdim of the left regular module)", DimValue::exact(2), g.left);
    c.dim("domdim", DimValue::exact(2), algebra_dominant_dimension(ctx, a));
    auto gl = global_dimension(ctx, a);
    c.dim("gldim", DimValue::infinite(""), gl);
    c.truth("gldim certificate is a syzygy periodicity", gl.certificate.find("period") != std::string::npos);
    auto all = search_orders(ctx, a);
    c.num("orders checked", 6, all.size());
    std::size_t ss = 0;
    for (const auto& s : all)
        ss += s.standardly_stratified;
    c.num("standardly stratified orders", 0, ss);
    auto ind = nakayama_indecomposables(a);
    c.num("indecomposables", 14, ind.size());
    auto rep = verify_dom_gproj(ctx, a, ind);
    c.num("r = domdim = Gordim", 2, rep.r);
    c.num("rows checked", 14, rep.rows.size());
    c.truth("domdim and Gorenstein projective dimension agree on all rows", rep.all_agree);
}

void criterion_kupisch_344(Checker& c, Context& ctx)
{
    auto a = nak({3, 4, 4});
    c.dim("gldim", DimValue::exact(4), global_dimension(ctx, a));
    c.dim("domdim", DimValue::exact(4), algebra_dominant_dimension(ctx, a));
    auto all = search_orders(ctx, a);
    c.num("orders checked", 6, all.size());
    std::size_t qh = 0;
    for (const auto& s : all)
        qh += s.quasi_hereditary;
    c.num("quasi-hereditary orders", 0, qh);
}

void criterion_klein(Checker& c, Context& ctx)
{
    auto k = klein_four_like();
    auto xa = path_ideal(k, make_path(k->quiver(), {"x"}));
    auto om2 = ctx.syzygy(xa, 2);
    auto iso = iso_test(om2, xa);
    bool certified = iso.kind == IsoResult::Kind::iso && iso.map && iso.map->is_isomorphism() &&
                     iso.map->source().key() == om2.key() && iso.map->target().key() == xa.key();
    c.truth("Omega^2(xA) isomorphic to xA, with a checked isomorphism", certified);
    c.num("gendo_gorenstein_check(xA)", 2, gendo_gorenstein_check(ctx, xa));
    auto m = direct_sum_module({regular(k), xa});
    c.dim("mueller_domdim(A + xA)", DimValue::exact(2), mueller_domdim(ctx, m));

    auto e = endomorphism_algebra({regular(k), xa});
    auto b = e.algebra;
    std::size_t sum = 0;
    for (const auto& x : e.summands)
        for (const auto& y : e.summands)
            sum += hom_dim(x, y);
    c.num("hom-space dimension sum over A + xA", 10, sum);
    c.num("dim End(A + xA)", sum, b->dimension());

    auto s = classify_stratification(ctx, b, {0, 1});
    auto g = gorenstein_tilting_consistency(ctx, s);
    c.truth("End(A + xA) properly stratified", g.properly_stratified);
    c.truth("Gorenstein", g.gorenstein);
    c.truth("tilting = cotilting", g.tilting_is_cotilting);
    c.truth("Gorenstein iff tilting = cotilting", g.consistent());
    const std::size_t gd = certified_gorenstein_dimension(ctx, b);
    auto cc = category_context(ctx, s, gd);
    auto ts = canonical_test_set(ctx, s, 2);
    c.categories("F(Deltabar) = Dom_1", compare_categories(cc, ts, {Category::f_delta_bar}, {Category::dom, 1}));
    c.categories("Dom_1 = GProj_1", compare_categories(cc, ts, {Category::dom, 1}, {Category::gproj, 1}));
}

void relar_d1(Checker& c, Context& ctx)
{
    auto a = nak({2, 3});
    auto r = relative_ar_sequence(ctx, simple(a, 1), 1);
    c.same("d=1: translate of S(1)", "P(0)", module_label(r.translate));
    c.truth("d=1: translate isomorphic to e_0A", isomorphic(r.translate, projective(a, 0)));
    c.num("d=1: dim Ext^1", 1, r.ext_dim);
    c.same("d=1: middle term", "P(1)", r.middle ? module_label(*r.middle) : "undetermined");
    c.truth("d=1: middle isomorphic to e_1A", r.middle && isomorphic(*r.middle, projective(a, 1)));
    c.truth("d=1: non-split", r.nonsplit);
    c.truth("d=1: end terms in Dom_1", r.ends_in_subcategory);
}

void relar_d2(Checker& c, Context& ctx)
{
    auto a = nak({4, 5});
    struct Case {
        std::string name;
        Representation m, tau;
        std::vector<Representation> middle;
    };
    std::vector<Case> cases{
        {"d=2 first family, k=1", trunc(a, 0, 2), trunc(a, 1, 3), {trunc(a, 1, 1), trunc(a, 0, 4)}},
        {"d=2 second family, k=1", trunc(a, 1, 3), trunc(a, 0, 4), {trunc(a, 1, 5), trunc(a, 0, 2)}},
    };
    for (const auto& k : cases) {
        auto r = relative_ar_sequence(ctx, k.m, 1);
        c.same(k.name + ": translate", module_label(k.tau), module_label(r.translate));
        c.truth(k.name + ": translate isomorphic", isomorphic(r.translate, k.tau));
        c.same(k.name + ": middle summands", labels(k.middle), r.determinate ? labels(r.middle_summands) : "undetermined");
        c.truth(k.name + ": middle isomorphic", r.middle && isomorphic(*r.middle, direct_sum_module(k.middle)));
        c.truth(k.name + ": non-split", r.nonsplit);
        c.truth(k.name + ": end terms in Dom_1", r.ends_in_subcategory);
    }
}

void relar_parity(Checker& c, Context& ctx)
{
    for (std::size_t d : {1u, 2u, 3u}) {
        auto a = nak({2 * d, 2 * d + 1});
        std::size_t held = 0, total = 0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t k = 1; k <= projective(a, i).total_dim(); ++k) {
                ++total;
                held += dominant_dimension(ctx, trunc(a, i, k)).at_least_known(1) == (i % 2 == k % 2);
            }
        c.battery(tag("d", d) + "domdim(e_iA/e_iJ^k) >= 1 iff i = k mod 2", held, total, 4 * d + 1);
    }
}

void criterion_b3_lambda0(Checker& c, Context& ctx)
{
    c.dim("domdim B(3,(0))", DimValue::exact(0), algebra_dominant_dimension(ctx, bnlambda_family(3, {0})));
}

void b_ones_instance(Checker& c, Context& ctx, std::size_t n)
{
    const std::string t = tag("n", n);
    const std::size_t r = 2 * n - 2;
    auto a = b_ones(n);
    c.dim(t + "domdim", DimValue::exact(r), algebra_dominant_dimension(ctx, a));
    auto gl = global_dimension(ctx, a);
    c.dim(t + "gldim", DimValue::exact(r), gl);

    auto sym = symmetric_chain_family(n);
    auto sn = simple(sym, n - 1);
    std::string exts;
    bool vanish = true;
    for (std::size_t i = 1; i <= r; ++i) {
        std::size_t e = ext_dimension(ctx, sn, sn, i);
        exts += (i > 1 ? "," : "") + std::to_string(e);
        vanish = vanish && e == 0;
    }
    c.truth(t + "Ext^i(S_n, S_n) = 0 over the symmetric chain for 1 <= i <= " + std::to_string(r) + " [" + exts + "]",
            vanish);
    c.truth(t + "Ext^" + std::to_string(r + 1) + "(S_n, S_n) != 0", ext_dimension(ctx, sn, sn, r + 1) != 0);

    auto s = classify_stratification(ctx, a, identity_order(n));
    c.truth(t + "quasi-hereditary at the identity order", s.quasi_hereditary);
    auto tm = characteristic_tilting(ctx, s);
    auto e = minimal_faithful_projinj(ctx, a).module;
    auto expected = basic_summands(direct_sum_module({e, simple(a, 0)}));
    c.same(t + "T = eA + S_1", labels(expected), labels(tm.summands));
    c.truth(t + "T and eA + S_1 have the same additive closure",
            in_add(tm.module, expected) && in_add(direct_sum_module(expected), tm.summands));
    c.dim(t + "projdim T", DimValue::exact(n - 1), tm.projdim);
    auto ts = canonical_test_set(ctx, s, 2, tm.summands);
    auto cc = category_context(ctx, s);
    c.categories(t + "F(Delta) = Dom_" + std::to_string(n - 1),
                 compare_categories(cc, ts, {Category::f_delta}, {Category::dom, n - 1}));
    c.categories(t + "Dom_" + std::to_string(n - 1) + " = Proj_" + std::to_string(n - 1),
                 compare_categories(cc, ts, {Category::dom, n - 1}, {Category::proj, n - 1}));
    c.truth(t + "gldim = 2 projdim T", gl.is_exact() && tm.projdim.is_exact() && gl.value == 2 * tm.projdim.value);
}

void endo_instance(Checker& c, Context& ctx, std::size_t n)
{
    const std::string t = tag("n", n);
    auto a = symmetric_chain_family(n - 1);
    const std::string v = std::to_string(n - 1);
    auto b = endo_quiver_construction(a, {v});
    c.num(t + "dim B = dim A + 3", a->dimension() + 3, b->dimension());
    auto m = regular_plus_simples(a, {v});
    c.num(t + "dim B = dim End(A + S) computed from hom spaces", endomorphism_algebra_of(m).algebra->dimension(),
          b->dimension());
    auto mu = mueller_domdim(ctx, m);
    c.dim(t + "algebra_dominant_dimension(B) = mueller_domdim(A + S)", mu, algebra_dominant_dimension(ctx, b));
}

// ---------------------------------------------------------------- property suites

std::vector<AlgebraPtr> battery_algebras()
{
    return {nak({2, 3}), nak({2, 2, 3}), nak({3, 4, 4}), nak({4, 5, 5}), bnlambda_family(3, {0}),
            bnlambda_family(3, {1}), symmetric_chain_family(2), klein_four_like()};
}

std::vector<Representation> small_test_set(const AlgebraPtr& a)
{
    auto s = structural_modules(a);
    std::vector<Representation> out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        out.push_back(s.simples[v]);
        out.push_back(s.projectives[v]);
        out.push_back(s.injectives[v]);
        out.push_back(radical(s.projectives[v]).module);
    }
    return out;
}

Matrix random_matrix(SmallIntRng& rng, std::size_t r, std::size_t c)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rng.next(-3, 3);
    return m;
}

void exact_core_battery(Checker& c, unsigned seed)
{
    SmallIntRng rng(seed);
    std::size_t held = 0, total = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + static_cast<std::size_t>(rng.next(0, 5));
        std::size_t n = 1 + static_cast<std::size_t>(rng.next(0, 5));
        Matrix m = random_matrix(rng, r, n);
        auto rb = rank_and_bases(m);
        Matrix x0 = random_matrix(rng, n, 1);
        Matrix b = m * x0;
        auto x = solve_linear(m, b);
        bool ok = rb.rank + rb.kernel_basis.cols() == n && (m * rb.kernel_basis).is_zero() &&
                  rank(m) == rank(m.transpose()) && rb.image_basis.cols() == rb.rank &&
                  rank(Matrix::hstack(m, rb.image_basis)) == rb.rank && x && m * *x == b;
        ++total;
        held += ok;
    }
    c.battery("exact core: rank-nullity, kernels, rank of transpose, solve reproduces b", held, total, 200);
}

// Ext^l(N, S_v) != 0 iff P(v) is a summand of P_l in the minimal projective resolution.
void top_of_resolution_battery(Checker& c, Context& ctx)
{
    std::size_t held = 0, total = 0;
    for (const auto& a : battery_algebras()) {
        auto simples = structural_modules(a).simples;
        for (const auto& m : small_test_set(a)) {
            auto r = ctx.projective_resolution(m, 7);
            for (std::size_t l = 0; l <= 6; ++l)
                for (std::size_t v = 0; v < a->vertex_count(); ++v) {
                    bool in_term = l < r.length() && std::count(r.steps[l].vertices.begin(),
                                                                r.steps[l].vertices.end(), v) > 0;
                    ++total;
                    held += (ext_dimension(ctx, m, simples[v], l) != 0) == in_term;
                }
        }
    }
    c.battery("Ext^l(N, S) != 0 iff S is a quotient of P_l, l <= 6", held, total, 500);
}

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

std::optional<std::size_t> value_of(const DimValue& d)
{
    if (d.is_infinite())
        return kInf;
    if (d.is_exact())
        return d.value;
    return std::nullopt;
}

// domdim(Y_m) >= min_j {domdim(Y_j) + j} - m + 1 over j = -1..m-1 for an exact
// sequence 0 -> Y_{-1} -> Y_0 -> ... -> Y_m -> 0 with ys[0] = Y_{-1};
// nullopt when a lower bound leaves it undecided.
std::optional<bool> long_exact_inequality(Context& ctx, const std::vector<Representation>& ys)
{
    const long m = static_cast<long>(ys.size()) - 2;
    auto last = value_of(dominant_dimension(ctx, ys.back()));
    if (!last)
        return std::nullopt;
    long rhs = std::numeric_limits<long>::max();
    for (long j = -1; j <= m - 1; ++j) {
        auto d = value_of(dominant_dimension(ctx, ys[static_cast<std::size_t>(j + 1)]));
        if (!d)
            return std::nullopt;
        rhs = std::min(rhs, *d >= kInf ? static_cast<long>(kInf) : static_cast<long>(*d) + j);
    }
    if (rhs >= static_cast<long>(kInf))
        return *last >= kInf;
    long lhs = *last >= kInf ? static_cast<long>(kInf) : static_cast<long>(*last);
    return lhs >= rhs - m + 1;
}

void long_exact_battery(Checker& c, Context& ctx)
{
    std::size_t held = 0, total = 0;
    auto record = [&](const std::vector<Representation>& ys) {
        if (auto h = long_exact_inequality(ctx, ys)) {
            ++total;
            held += *h;
        }
    };
    for (const auto& a : battery_algebras()) {
        for (const auto& n : base_test_set(ctx, a, 1)) {
            for (std::size_t len = 1; len <= 3; ++len) {
                Resolution pr = ctx.projective_resolution(n, len);
                if (pr.length() >= len) {
                    std::vector<Representation> ys{pr.syzygy(len)};
                    for (std::size_t k = len; k-- > 0;)
                        ys.push_back(pr.steps[k].term);
                    ys.push_back(n);
                    record(ys);
                }
                Resolution ir = ctx.injective_resolution(n, len);
                if (ir.length() >= len) {
                    std::vector<Representation> ys{n};
                    for (std::size_t k = 0; k < len; ++k)
                        ys.push_back(ir.steps[k].term);
                    ys.push_back(ir.syzygy(len));
                    record(ys);
                }
            }
        }
        auto s = structural_modules(a);
        for (std::size_t u = 0; u < a->vertex_count(); ++u)
            for (std::size_t v = 0; v < a->vertex_count(); ++v) {
                auto cl = ext1_classes(s.simples[u], s.simples[v]);
                for (const auto& z : cl.cocycles)
                    record({s.simples[v], extension_from_cocycle(cl, z).middle, s.simples[u]});
            }
    }
    c.battery("domdim inequality along long exact sequences", held, total, 100);
}

void ext_two_sided_battery(Checker& c, Context& ctx)
{
    std::size_t held = 0, total = 0;
    for (const auto& a : battery_algebras()) {
        auto ts = small_test_set(a);
        for (const auto& p : ts)
            for (const auto& q : ts)
                for (std::size_t i = 1; i <= 6; ++i) {
                    auto e = ext(ctx, p, q, i);
                    ++total;
                    held += e.projective_side == e.injective_side;
                }
    }
    c.battery("Ext from projective and injective resolutions agree, degrees 1..6", held, total, 1000);
}

std::vector<AlgebraPtr> auslander_gorenstein_examples()
{
    return {nak({2, 2, 3}), nak({4, 5, 5}), nak({3, 4, 4}), nak({2, 3}), bnlambda_family(3, {1})};
}

// Modules of domdim >= i agree with Ω^i Ω^{-i} of themselves up to projectives.
void syzygy_identity_battery(Checker& c, Context& ctx)
{
    std::size_t held = 0, total = 0;
    for (const auto& a : auslander_gorenstein_examples()) {
        DimValue dd = algebra_dominant_dimension(ctx, a);
        if (!dd.is_exact())
            continue;
        auto tests = base_test_set(ctx, a, 2);
        for (std::size_t i = 1; i <= dd.value; ++i)
            for (const auto& m : tests) {
                if (!dominant_dimension(ctx, m).at_least_known(i))
                    continue;
                auto lhs = nonprojective_part(m);
                auto rhs = nonprojective_part(ctx.syzygy(ctx.cosyzygy(m, i), i));
                ++total;
                held += lhs.dims() == rhs.dims() && (lhs.is_zero() || isomorphic(lhs, rhs));
            }
    }
    c.battery("nonprojective part of Omega^i Omega^-i M is that of M when domdim M >= i", held, total, 50);
}

// (projdim, injdim, domdim, codomdim) = (i, r-i, r-i, i) on add(Ω^{-i}(A)).
void quadruple_battery(Checker& c, Context& ctx)
{
    std::size_t held = 0, total = 0;
    for (const auto& a : auslander_gorenstein_examples()) {
        const std::size_t r = certify_auslander_gorenstein(ctx, a).r;
        for (std::size_t i = 0; i <= r; ++i) {
            std::vector<Representation> parts;
            if (i == 0) {
                for (std::size_t v = 0; v < a->vertex_count(); ++v)
                    if (!a->projective_is_injective(v))
                        parts.push_back(projective(a, v));
            } else {
                parts = decompose(ctx.cosyzygy(regular(a), i), ctx.decompose_options()).summands();
            }
            for (const auto& x : parts) {
                ++total;
                held += projective_dimension(ctx, x).is(i) && injective_dimension(ctx, x).is(r - i) &&
                        dominant_dimension(ctx, x).is(r - i) && codominant_dimension(ctx, x).is(i);
            }
        }
    }
    c.battery("(projdim, injdim, domdim, codomdim) = (i, r-i, r-i, i) on add Omega^-i(A)", held, total, 20);
}

// Gordim = 2 projdim T on properly stratified Gorenstein examples with a
// simple-preserving duality (Cartan symmetric) and T = C.
void tilting_gordim_battery(Checker& c, Context& ctx)
{
    std::vector<AlgebraPtr> algebras{b_ones(2), b_ones(3), b_ones(4), chain_223(3), nak({2, 3}), nak({3, 4, 4})};
    {
        auto k = klein_four_like();
        algebras.push_back(endomorphism_algebra({regular(k), path_ideal(k, make_path(k->quiver(), {"x"}))}).algebra);
    }
    std::size_t held = 0, total = 0;
    for (const auto& a : algebras) {
        try {
            check_duality_assertion(*a);
        } catch (const PreconditionFailed&) {
            continue;
        }
        auto g = gorenstein_dimension(ctx, a);
        if (!g.gorenstein)
            continue;
        for (const auto& s : search_orders(ctx, a)) {
            if (!s.properly_stratified || !s.regular_in_f_delta)
                continue;
            auto t = characteristic_tilting(ctx, s);
            auto co = characteristic_cotilting(ctx, s);
            if (!in_add(t.module, co.summands) || !in_add(co.module, t.summands))
                continue;
            ++total;
            held += t.projdim.is_exact() && g.value() == 2 * t.projdim.value;
        }
    }
    c.battery("Gordim = 2 projdim T when T = C", held, total, 4);
}

void properties(Checker& c, Context& ctx, unsigned seed)
{
    c.guarded("exact core", [&] { exact_core_battery(c, seed); });
    c.guarded("resolution tops", [&] { top_of_resolution_battery(c, ctx); });
    c.guarded("long exact sequences", [&] { long_exact_battery(c, ctx); });
    c.guarded("two-sided Ext", [&] { ext_two_sided_battery(c, ctx); });
    c.guarded("syzygy identity", [&] { syzygy_identity_battery(c, ctx); });
    c.guarded("dimension quadruple", [&] { quadruple_battery(c, ctx); });
    c.guarded("tilting and Gorenstein dimension", [&] { tilting_gordim_battery(c, ctx); });
}

// ---------------------------------------------------------------- registry

struct Entry {
    std::size_t criterion;
    std::string title;
    std::function<void(Checker&, Context&, unsigned)> run;
};

const std::map<std::string, Entry>& registry()
{
    static const std::map<std::string, Entry> r = [] {
        std::map<std::string, Entry> m;
        const std::string t1 = "Kupisch [2,...,2,3]: gldim = domdim = n, quasi-hereditary, F(Delta) = Dom_1, "
                               "F(Nabla) = Codom_{n-1}";
        m["ex3.1"] = {1, t1 + ", n = 3, 4, 5", [](Checker& c, Context& ctx, unsigned) {
                          for (std::size_t n : {3u, 4u, 5u})
                              chain_223_instance(c, ctx, n);
                      }};
        for (std::size_t n : {3u, 4u, 5u})
            m["ex3.1-n" + std::to_string(n)] = {1, t1 + ", n = " + std::to_string(n),
                                                [n](Checker& c, Context& ctx, unsigned) { chain_223_instance(c, ctx, n); }};
        m["ex3.2"] = {2, "Kupisch [4,5,5]: Gordim = domdim = 2, gldim infinite, never standardly stratified",
                      [](Checker& c, Context& ctx, unsigned) { criterion_kupisch_455(c, ctx); }};
        m["ex3.3"] = {3, "Kupisch [3,4,4]: gldim = domdim = 4, never quasi-hereditary",
                      [](Checker& c, Context& ctx, unsigned) { criterion_kupisch_344(c, ctx); }};
        m["ex3.5"] = {4, "Klein-four-like algebra and End(A + xA)",
                      [](Checker& c, Context& ctx, unsigned) { criterion_klein(c, ctx); }};
        m["ex3.6"] = {5, "relative AR sequences over Kupisch [2d, 2d+1]", [](Checker& c, Context& ctx, unsigned) {
                          relar_d1(c, ctx);
                          relar_d2(c, ctx);
                          relar_parity(c, ctx);
                      }};
        m["prop4.4-B3lambda0"] = {6, "B(3,(0)) has dominant dimension 0",
                                  [](Checker& c, Context& ctx, unsigned) { criterion_b3_lambda0(c, ctx); }};
        const std::string t7 = "B(n,1,...,1): domdim = gldim = 2n-2, T = eA + S_1 of projdim n-1";
        m["thm4.7"] = {7, t7 + ", n = 2, 3, 4", [](Checker& c, Context& ctx, unsigned) {
                           for (std::size_t n : {2u, 3u, 4u})
                               b_ones_instance(c, ctx, n);
                       }};
        for (std::size_t n : {2u, 3u, 4u})
            m["thm4.7-n" + std::to_string(n)] = {7, t7 + ", n = " + std::to_string(n),
                                                 [n](Checker& c, Context& ctx, unsigned) { b_ones_instance(c, ctx, n); }};
        m["lemma4.3"] = {8, "quiver construction for A + S over symmetric chains, n = 3, 4",
                         [](Checker& c, Context& ctx, unsigned) {
                             for (std::size_t n : {3u, 4u})
                                 endo_instance(c, ctx, n);
                         }};
        m["properties"] = {9, "property suites", [](Checker& c, Context& ctx, unsigned seed) { properties(c, ctx, seed); }};
        return m;
    }();
    return r;
}

}  // namespace

const std::vector<std::string>& verify_ids()
{
    static const std::vector<std::string> ids{"ex3.1", "ex3.2", "ex3.3", "ex3.5", "ex3.6",
                                              "prop4.4-B3lambda0", "thm4.7", "lemma4.3", "properties"};
    return ids;
}

std::vector<std::string> all_verify_ids()
{
    std::vector<std::string> out;
    for (const auto& [id, e] : registry())
        out.push_back(id);
    return out;
}

VerifyResult verify_paper_example(const std::string& id, std::size_t bound, unsigned seed)
{
    auto it = registry().find(id);
    if (it == registry().end())
        throw UnknownExampleId("unknown example id '" + id + "'");
    VerifyResult r;
    r.id = id;
    r.criterion = it->second.criterion;
    r.title = it->second.title;
    Context ctx(bound, seed);
    Checker c(r.checks);
    c.guarded("pipeline", [&] { it->second.run(c, ctx, seed); });
    return r;
}

Json verify_json(const VerifyResult& r)
{
    Json j;
    j["id"] = r.id;
    j["criterion"] = r.criterion;
    j["title"] = r.title;
    j["pass"] = r.passed();
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["checks"] = checks;
    return j;
}

}  // namespace bq::cli
