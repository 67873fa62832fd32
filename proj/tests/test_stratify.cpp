#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "bq/errors.hpp"
#include "bq/families.hpp"
#include "bq/stratify.hpp"

using namespace bq;

namespace {

AlgebraPtr nak(std::vector<std::size_t> e) { return nakayama_from_kupisch({std::move(e), KupischShape::cyclic}); }

AlgebraPtr chain_223(std::size_t n)
{
    std::vector<std::size_t> k(n, 2);
    k.back() = 3;
    return nak(k);
}

std::vector<std::size_t> shifted_order(std::size_t n)
{
    std::vector<std::size_t> o;
    for (std::size_t i = 1; i < n; ++i)
        o.push_back(i);
    o.push_back(0);
    return o;
}

std::vector<std::size_t> identity_order(std::size_t n)
{
    std::vector<std::size_t> o(n);
    std::iota(o.begin(), o.end(), 0);
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

AlgebraPtr b_ones(std::size_t n) { return bnlambda_family(n, std::vector<int>(n - 2, 1)); }

std::vector<std::size_t> dims_of(const Representation& m) { return m.dims(); }

// Ext^1(m, ∇̄(v)) = 0 for every v.
bool ext_orthogonal_to_nabla_bar(Context& ctx, const Representation& m, const StratData& s)
{
    for (const auto& nb : s.nabla_bar)
        if (ext_dimension(ctx, m, nb, 1) != 0)
            return false;
    return true;
}

// Ext^1(Δ̄(v), m) = 0 for every v.
bool ext_orthogonal_from_delta_bar(Context& ctx, const Representation& m, const StratData& s)
{
    for (const auto& db : s.delta_bar)
        if (ext_dimension(ctx, db, m, 1) != 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("standard modules of [2,2,3] at order [1,2,0]")
{
    Context ctx;
    auto a = chain_223(3);
    auto s = classify_stratification(ctx, a, shifted_order(3));
    CHECK(s.order_ids() == std::vector<std::string>{"1", "2", "0"});
    CHECK(dims_of(s.delta[0]) == std::vector<std::size_t>{1, 1, 0});
    CHECK(isomorphic(s.delta[0], projective(a, 0)));
    CHECK(isomorphic(s.delta[1], simple(a, 1)));
    CHECK(isomorphic(s.delta[2], simple(a, 2)));
    CHECK(isomorphic(s.nabla[0], injective(a, 0)));
    CHECK(s.delta[0].name() == "Delta(0)");
    CHECK(s.nabla_bar[2].name() == "Nablabar(2)");
    CHECK(s.regular_in_f_delta);
    CHECK(s.standardly_stratified);
    CHECK(s.properly_stratified);
    CHECK(s.quasi_hereditary);
    CHECK(s.schurian);
    CHECK(s.gldim->is(3));
    auto f = filtration_test(regular(a), Family::standard, s);
    REQUIRE(f.filtered);
    // P(0) = Δ(0), P(1) has layers Δ(2), Δ(1), P(2) has layers Δ(0), Δ(2)
    CHECK(f.multiplicities == std::vector<std::size_t>{2, 1, 2});
}

TEST_CASE("order parsing")
{
    auto a = chain_223(3);
    CHECK(order_from_ids(*a, {"1", "2", "0"}) == std::vector<std::size_t>{1, 2, 0});
    CHECK_THROWS_AS(order_from_ids(*a, {"1", "1", "0"}), InvalidParameters);
    CHECK_THROWS_AS(order_from_ids(*a, {"1", "2"}), InvalidParameters);
    CHECK_THROWS_AS(order_from_ids(*a, {"1", "2", "x"}), InvalidParameters);
    CHECK_THROWS_AS(standard_modules(a, {0, 0, 1}), InvalidParameters);
}

TEST_CASE("filtration multiplicities reproduce dimension vectors")
{
    Context ctx;
    for (const auto& a : {chain_223(3), chain_223(4), nak({3, 4, 4}), b_ones(3), bnlambda_family(3, {0}),
                          klein_four_like()}) {
        for (const auto& s : search_orders(ctx, a)) {
            for (Family fam : {Family::standard, Family::proper_standard}) {
                auto f = filtration_test(regular(a), fam, s);
                if (!f.filtered)
                    continue;
                std::vector<std::size_t> total(a->vertex_count(), 0);
                for (std::size_t v = 0; v < a->vertex_count(); ++v)
                    for (std::size_t w = 0; w < a->vertex_count(); ++w)
                        total[w] += f.multiplicities[v] * s.family(fam)[v].dim(w);
                CHECK(total == regular(a).dims());
                CHECK(std::accumulate(f.multiplicities.begin(), f.multiplicities.end(), std::size_t{0}) >=
                      a->vertex_count());
            }
        }
    }
}

TEST_CASE("standard modules surject onto proper standard modules")
{
    Context ctx;
    for (const auto& a : {chain_223(3), nak({4, 5, 5}), b_ones(3), klein_four_like(), symmetric_chain_family(2)}) {
        for (const auto& s : search_orders(ctx, a)) {
            for (std::size_t v = 0; v < a->vertex_count(); ++v) {
                CHECK(s.delta_bar[v].dim(v) == 1);
                CHECK(top_dims(s.delta[v])[v] == 1);
                bool surj = false;
                for (const auto& f : hom_space(s.delta[v], s.delta_bar[v]))
                    surj = surj || f.is_surjective();
                CHECK(surj);
                // ∇̄(v) ⊆ ∇(v): both have simple socle S(v)
                CHECK(socle_dims(s.nabla[v])[v] == 1);
                CHECK(s.nabla_bar[v].dim(v) == 1);
            }
        }
    }
}

TEST_CASE("families of filtrations are closed under the duality")
{
    Context ctx;
    auto a = chain_223(4);
    auto so = classify_stratification(ctx, opposite(a), shifted_order(4));
    auto s = classify_stratification(ctx, a, shifted_order(4));
    for (const auto& m : nakayama_indecomposables(a)) {
        CHECK(filtration_test(m, Family::costandard, s).filtered ==
              filtration_test(dualize(m), Family::standard, so).filtered);
        CHECK(filtration_test(m, Family::proper_costandard, s).filtered ==
              filtration_test(dualize(m), Family::proper_standard, so).filtered);
    }
}

TEST_CASE("two-sided filtration of the regular module")
{
    // A ∈ F(Δ) exactly when A^op ∈ F(Δ̄^op), for every order.
    Context ctx;
    for (const auto& a : {chain_223(3), nak({2, 3}), nak({3, 4, 4}), nak({4, 5, 5}), nak({3, 3}), b_ones(3),
                          bnlambda_family(3, {0}), bnlambda_family(2, {}), symmetric_chain_family(2),
                          klein_four_like()}) {
        for (const auto& s : search_orders(ctx, a)) {
            CHECK(s.regular_in_f_delta == s.op_regular_in_f_delta_bar);
            CHECK(s.op_regular_in_f_delta == s.regular_in_f_delta_bar);
            if (s.quasi_hereditary) {
                CHECK(s.regular_in_f_delta);
                CHECK(s.schurian);
            }
        }
    }
}

TEST_CASE("filtration by standard modules matches Ext-orthogonality")
{
    Context ctx;
    for (const auto& a : {chain_223(3), chain_223(4), nak({2, 3}), b_ones(3)}) {
        for (const auto& s : search_orders(ctx, a)) {
            if (!s.regular_in_f_delta)
                continue;
            for (const auto& m : base_test_set(ctx, a, 2)) {
                CHECK(filtration_test(m, Family::standard, s).filtered == ext_orthogonal_to_nabla_bar(ctx, m, s));
                CHECK(filtration_test(m, Family::proper_costandard, s).filtered ==
                      ext_orthogonal_from_delta_bar(ctx, m, s));
            }
        }
    }
}

TEST_CASE("Kupisch [4,5,5] is not standardly stratified")
{
    Context ctx;
    auto all = search_orders(ctx, nak({4, 5, 5}));
    CHECK(all.size() == 6);
    for (const auto& s : all) {
        CHECK_FALSE(s.standardly_stratified);
        CHECK_FALSE(s.quasi_hereditary);
    }
}

TEST_CASE("Kupisch [3,4,4] is not quasi-hereditary")
{
    Context ctx;
    auto all = search_orders(ctx, nak({3, 4, 4}));
    CHECK(all.size() == 6);
    for (const auto& s : all)
        CHECK_FALSE(s.quasi_hereditary);
}

TEST_CASE("order search limit")
{
    Context ctx;
    CHECK_THROWS_AS(search_orders(ctx, nak(std::vector<std::size_t>(9, 2))), TooManyVertices);
}

TEST_CASE("characteristic tilting module for [2,...,2,3]")
{
    Context ctx;
    for (std::size_t n : {3u, 4u, 5u}) {
        auto a = chain_223(n);
        auto s = classify_stratification(ctx, a, shifted_order(n));
        auto t = characteristic_tilting(ctx, s);
        auto te = characteristic_tilting_by_extensions(ctx, s);
        CHECK(t.summands.size() == n);
        CHECK(t.projdim.is(n - 1));
        CHECK(te.projdim.is(n - 1));
        CHECK(in_add(t.module, te.summands));
        CHECK(in_add(te.module, t.summands));
        auto rep = verify_tilting(ctx, t.module);
        CHECK(rep.self_orthogonal);
        CHECK(rep.projdim.is(n - 1));
        CHECK(rep.coresolution_length <= n - 1);
        // add T = F(Δ) ∩ F(∇)
        for (const auto& m : nakayama_indecomposables(a)) {
            bool both = filtration_test(m, Family::standard, s).filtered &&
                        filtration_test(m, Family::costandard, s).filtered;
            CHECK(both == in_add(m, t.summands));
        }
    }
}

TEST_CASE("characteristic tilting module for B(n,1,...,1)")
{
    Context ctx;
    for (std::size_t n : {2u, 3u, 4u}) {
        auto a = b_ones(n);
        auto s = classify_stratification(ctx, a, identity_order(n));
        REQUIRE(s.quasi_hereditary);
        CHECK(s.gldim->is(2 * n - 2));
        auto t = characteristic_tilting(ctx, s);
        CHECK(t.projdim.is(n - 1));
        std::vector<Representation> expected;
        for (std::size_t v = 0; v + 1 < n; ++v)
            expected.push_back(projective(a, v));
        expected.push_back(simple(a, 0));
        CHECK(in_add(t.module, expected));
        CHECK(in_add(direct_sum_module(expected), t.summands));
        CHECK(s.gldim->value == 2 * t.projdim.value);
        auto te = characteristic_tilting_by_extensions(ctx, s);
        CHECK(in_add(te.module, expected));
    }
}

TEST_CASE("characteristic tilting needs a standard filtration")
{
    Context ctx;
    auto s = classify_stratification(ctx, nak({4, 5, 5}), {0, 1, 2});
    CHECK_THROWS_AS(characteristic_tilting(ctx, s), NotStratified);
    CHECK_THROWS_AS(characteristic_tilting_by_extensions(ctx, s), NotStratified);
}

TEST_CASE("characteristic cotilting module")
{
    Context ctx;
    auto a = chain_223(3);
    auto s = classify_stratification(ctx, a, shifted_order(3));
    auto c = characteristic_cotilting(ctx, s);
    CHECK(c.summands.size() == 3);
    for (const auto& m : nakayama_indecomposables(a)) {
        bool both = filtration_test(m, Family::proper_standard, s).filtered &&
                    filtration_test(m, Family::costandard, s).filtered;
        CHECK(both == in_add(m, c.summands));
    }
    CHECK(c.injdim.is(1));
}

TEST_CASE("tilting verification")
{
    Context ctx;
    SUBCASE("regular module")
    {
        for (const auto& a : {chain_223(3), nak({4, 5, 5}), b_ones(3)}) {
            auto rep = verify_tilting(ctx, regular(a));
            CHECK(rep.projdim.is(0));
            CHECK(rep.coresolution_length == 0);
        }
    }
    SUBCASE("dual of the regular module over [2,2,3]")
    {
        auto a = chain_223(3);
        auto rep = verify_tilting(ctx, dual_regular(a));
        CHECK(rep.projdim.is(3));
        CHECK(rep.cotilting);
        CHECK(rep.injdim.is(0));
    }
    SUBCASE("failures")
    {
        auto a = chain_223(3);
        CHECK_THROWS_AS(verify_tilting(ctx, projective(a, 0)), NotTilting);
        // infinite projective dimension with a periodic syzygy
        CHECK_THROWS_AS(verify_tilting(ctx, simple(nak({4, 5, 5}), 0)), NotTilting);
        // finite projdim, self-orthogonal, but missing a summand
        auto b = b_ones(3);
        CHECK_THROWS_AS(verify_tilting(ctx, direct_sum_module({projective(b, 0), simple(b, 0)})), NotTilting);
    }
}

TEST_CASE("perpendicular categories of the characteristic tilting module")
{
    // F(Δ) = ⊥T and F(∇) = T⊥ for quasi-hereditary algebras.
    Context ctx;
    for (const auto& [a, order] : std::vector<std::pair<AlgebraPtr, std::vector<std::size_t>>>{
             {chain_223(3), shifted_order(3)}, {chain_223(4), shifted_order(4)}, {b_ones(3), identity_order(3)}}) {
        auto s = classify_stratification(ctx, a, order);
        auto t = characteristic_tilting(ctx, s);
        CategoryContext c{&ctx, &s, std::nullopt, t.module, s.gldim->value};
        auto ts = canonical_test_set(ctx, s, 2);
        CHECK(compare_categories(c, ts, {Category::f_delta}, {Category::left_perp_t}).equal());
        CHECK(compare_categories(c, ts, {Category::f_nabla}, {Category::right_perp_t}).equal());
    }
}

TEST_CASE("category comparisons for Kupisch [2,...,2,3]")
{
    Context ctx;
    for (std::size_t n : {3u, 4u, 5u}) {
        auto a = chain_223(n);
        auto s = classify_stratification(ctx, a, shifted_order(n));
        CategoryContext c{&ctx, &s};
        auto ind = nakayama_indecomposables(a);
        auto d = compare_categories(c, ind, {Category::f_delta}, {Category::dom, 1});
        CHECK(d.checked == a->dimension());
        CHECK(d.equal());
        CHECK(compare_categories(c, ind, {Category::f_nabla}, {Category::codom, n - 1}).equal());
        CHECK(compare_categories(c, ind, {Category::f_delta}, {Category::proj, n - 1}).equal());
        CHECK_FALSE(compare_categories(c, ind, {Category::f_delta}, {Category::dom, 2}).equal());
    }
    CHECK(CategoryRef{Category::dom, 3}.label() == "Dom_3");
    CHECK(CategoryRef{Category::f_nabla_bar}.label() == "F(Nablabar)");
}

TEST_CASE("main equivalences")
{
    Context ctx;
    SUBCASE("Kupisch [2,...,2,3]")
    {
        for (std::size_t n : {3u, 4u}) {
            auto a = chain_223(n);
            auto s = classify_stratification(ctx, a, shifted_order(n));
            auto rep = verify_main_equivalences(ctx, s, nakayama_indecomposables(a));
            CHECK(rep.r == n);
            CHECK(rep.i == n - 1);
            CHECK(rep.consistent());
            CHECK(rep.tilting_is_cosyzygy);
            CHECK(rep.equalities);
        }
    }
    SUBCASE("B(n,1,...,1)")
    {
        for (std::size_t n : {2u, 3u}) {
            auto a = b_ones(n);
            auto s = classify_stratification(ctx, a, identity_order(n));
            auto rep = verify_main_equivalences(ctx, s, canonical_test_set(ctx, s, 2));
            CHECK(rep.r == 2 * n - 2);
            CHECK(rep.i == n - 1);
            CHECK(rep.consistent());
            CHECK(rep.tilting_is_cosyzygy);
        }
    }
    SUBCASE("not applicable")
    {
        auto s = classify_stratification(ctx, nak({4, 5, 5}), {0, 1, 2});
        CHECK_THROWS_AS(verify_main_equivalences(ctx, s, {}), NotApplicable);
        auto s2 = classify_stratification(ctx, nak({2, 3}), {1, 0});
        if (!s2.regular_in_f_delta)
            CHECK_THROWS_AS(verify_main_equivalences(ctx, s2, {}), NotApplicable);
    }
}

TEST_CASE("duality identities")
{
    Context ctx;
    SUBCASE("B(n,1,...,1) with asserted duality")
    {
        for (std::size_t n : {2u, 3u}) {
            auto a = b_ones(n);
            auto s = classify_stratification(ctx, a, identity_order(n));
            s.duality_asserted = true;
            auto rep = verify_duality_identities(ctx, s, canonical_test_set(ctx, s, 2));
            CHECK(rep.m == n - 1);
            CHECK(rep.gordim == 2 * n - 2);
            CHECK(rep.all_hold());
        }
    }
    SUBCASE("preconditions")
    {
        auto a = chain_223(3);
        auto s = classify_stratification(ctx, a, shifted_order(3));
        CHECK_THROWS_AS(verify_duality_identities(ctx, s, {}), NotApplicable);
        s.duality_asserted = true;
        CHECK_THROWS_AS(verify_duality_identities(ctx, s, {}), PreconditionFailed);
        CHECK_THROWS_AS(check_duality_assertion(*a), PreconditionFailed);
        CHECK_NOTHROW(check_duality_assertion(*b_ones(3)));
    }
}

TEST_CASE("Gorenstein agrees with tilting equal to cotilting")
{
    Context ctx;
    std::size_t properly = 0;
    for (const auto& a : {chain_223(3), chain_223(4), nak({2, 3}), b_ones(2), b_ones(3), nak({3, 4, 4})}) {
        for (const auto& s : search_orders(ctx, a)) {
            if (!s.properly_stratified || !s.regular_in_f_delta || !s.op_regular_in_f_delta)
                continue;
            ++properly;
            auto g = gorenstein_tilting_consistency(ctx, s);
            CHECK(g.consistent());
        }
    }
    CHECK(properly > 0);
}

TEST_CASE("Gorenstein dimension is twice the tilting projective dimension")
{
    // On properly stratified Gorenstein examples with a duality and T = C.
    Context ctx;
    for (std::size_t n : {2u, 3u, 4u}) {
        auto a = b_ones(n);
        for (const auto& s : search_orders(ctx, a)) {
            if (!s.properly_stratified || !s.regular_in_f_delta)
                continue;
            auto t = characteristic_tilting(ctx, s);
            auto c = characteristic_cotilting(ctx, s);
            if (!in_add(t.module, c.summands) || !in_add(c.module, t.summands))
                continue;
            auto g = gorenstein_dimension(ctx, a);
            REQUIRE(g.gorenstein);
            CHECK(g.value() == 2 * t.projdim.value);
        }
    }
}

TEST_CASE("left perpendicular of the cosyzygy candidate over [4,5,5]")
{
    Context ctx;
    auto a = nak({4, 5, 5});
    auto t = cosyzygy_tilting_candidate(ctx, a, 1);
    auto rep = verify_tilting(ctx, t);
    CHECK(rep.projdim.is(1));
    CHECK(rep.cotilting);
    auto ind = nakayama_indecomposables(a);
    REQUIRE(ind.size() == 14);
    for (const auto& m : ind) {
        CHECK(perp_membership(ctx, m, t, PerpSide::left, 2) == dominant_dimension(ctx, m).at_least_known(1));
        CHECK(perp_membership(ctx, m, t, PerpSide::right, 2) == codominant_dimension(ctx, m).at_least_known(1));
    }
    for (const auto& x : basic_summands(t)) {
        CHECK(perp_membership(ctx, x, t, PerpSide::left, 4));
        CHECK(perp_membership(ctx, x, t, PerpSide::right, 4));
    }
    CHECK(perp_membership(ctx, projective(a, 0), t, PerpSide::left, 4));
}

TEST_CASE("self-injective algebra with a stratification")
{
    // Klein-four-like: one vertex, Δ = A, Δ̄ = S, the characteristic tilting module is A.
    Context ctx;
    auto a = klein_four_like();
    auto s = classify_stratification(ctx, a, {0});
    CHECK(s.regular_in_f_delta);
    CHECK(s.properly_stratified);
    CHECK_FALSE(s.quasi_hereditary);
    auto t = characteristic_tilting(ctx, s);
    CHECK(t.projdim.is(0));
    CHECK(isomorphic(t.module, regular(a)));
    auto rep = verify_tilting(ctx, t.module);
    CHECK(rep.cotilting);
}
