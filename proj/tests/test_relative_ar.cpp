#include "doctest.h"

#include "bq/errors.hpp"
#include "bq/families.hpp"
#include "bq/relative_ar.hpp"
#include "bq/stratify.hpp"

using namespace bq;

namespace {

AlgebraPtr nak(std::vector<std::size_t> e) { return nakayama_from_kupisch({std::move(e), KupischShape::cyclic}); }

Representation trunc(const AlgebraPtr& a, std::size_t i, std::size_t k) { return projective_truncation(a, i, k); }

// Multisets of summands agree up to isomorphism.
bool same_summands(std::vector<Representation> xs, const std::vector<Representation>& ys)
{
    if (xs.size() != ys.size())
        return false;
    for (const auto& y : ys) {
        bool found = false;
        for (std::size_t k = 0; k < xs.size() && !found; ++k)
            if (isomorphic(xs[k], y)) {
                xs.erase(xs.begin() + static_cast<long>(k));
                found = true;
            }
        if (!found)
            return false;
    }
    return true;
}

std::vector<Representation> nonprojective_indecomposables(const AlgebraPtr& a)
{
    std::vector<Representation> out;
    for (std::size_t i = 0; i < a->vertex_count(); ++i)
        for (std::size_t k = 1; k < projective(a, i).total_dim(); ++k)
            out.push_back(trunc(a, i, k));
    return out;
}

}  // namespace

TEST_CASE("omega approximation")
{
    Context ctx;
    SUBCASE("S_0 over [2,3]")
    {
        auto a = nak({2, 3});
        auto ap = omega_approximation(ctx, simple(a, 0), 1);
        REQUIRE(ap.summands.size() == 1);
        CHECK(isomorphic(ap.core, projective(a, 0)));
        CHECK(isomorphic(ap.projective_part, projective(a, 0)));
        CHECK(nonprojective_part(ap.core).is_zero());
    }
    SUBCASE("modules of dominant dimension at least n are fixed up to projectives")
    {
        for (const auto& a : {nak({4, 5}), nak({4, 5, 5}), nak({2, 2, 3})}) {
            for (const auto& m : nonprojective_indecomposables(a)) {
                for (std::size_t n : {1u, 2u}) {
                    auto ap = omega_approximation(ctx, m, n);
                    if (dominant_dimension(ctx, m).at_least_known(n))
                        CHECK(isomorphic(nonprojective_part(ap.core), nonprojective_part(m)));
                    auto om = nonprojective_part(ctx.syzygy(m, n));
                    if (om.is_zero())
                        continue;
                    auto again = omega_approximation(ctx, om, n);
                    CHECK(in_add(om, basic_summands(again.core)));
                }
            }
        }
    }
    SUBCASE("projective input")
    {
        auto a = nak({2, 3});
        CHECK_THROWS_AS(omega_approximation(ctx, projective(a, 1), 1), ProjectiveInput);
    }
}

TEST_CASE("relative AR sequence for S_1 over [2,3]")
{
    Context ctx;
    auto a = nak({2, 3});
    auto r = relative_ar_sequence(ctx, simple(a, 1), 1);
    CHECK(isomorphic(r.translate, projective(a, 0)));
    CHECK(r.ext_dim == 1);
    REQUIRE(r.determinate);
    CHECK(same_summands(r.middle_summands, {projective(a, 1)}));
    CHECK(r.nonsplit);
    CHECK(r.ends_in_subcategory);
}

TEST_CASE("relative AR sequences over [4,5]")
{
    Context ctx;
    auto a = nak({4, 5});
    SUBCASE("first family, k = 1")
    {
        auto r = relative_ar_sequence(ctx, trunc(a, 0, 2), 1);
        CHECK(isomorphic(r.translate, trunc(a, 1, 3)));
        REQUIRE(r.determinate);
        CHECK(same_summands(r.middle_summands, {trunc(a, 1, 1), trunc(a, 0, 4)}));
        CHECK(r.nonsplit);
        CHECK(r.ends_in_subcategory);
    }
    SUBCASE("second family, k = 1")
    {
        auto r = relative_ar_sequence(ctx, trunc(a, 1, 3), 1);
        CHECK(isomorphic(r.translate, trunc(a, 0, 4)));
        REQUIRE(r.determinate);
        CHECK(same_summands(r.middle_summands, {trunc(a, 1, 5), trunc(a, 0, 2)}));
        CHECK(r.nonsplit);
        CHECK(r.ends_in_subcategory);
    }
}

TEST_CASE("relative translate formula on [2d, 2d+1]")
{
    Context ctx;
    for (std::size_t d : {1u, 2u, 3u}) {
        auto a = nak({2 * d, 2 * d + 1});
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t k = 1; k <= projective(a, i).total_dim(); ++k) {
                auto m = trunc(a, i, k);
                bool in_dom1 = dominant_dimension(ctx, m).at_least_known(1);
                // parity rule
                CHECK(in_dom1 == (i % 2 == k % 2));
                if (!in_dom1) {
                    CHECK_THROWS_AS(relative_ar_translate(ctx, m, 1), NotInSubcategory);
                    continue;
                }
                if (k == projective(a, i).total_dim()) {
                    CHECK_THROWS_AS(relative_ar_translate(ctx, m, 1), ExtProjective);
                    continue;
                }
                const std::size_t j = k % 2 == 1 ? 0 : 1;  // 1 - k mod 2
                auto r = relative_ar_sequence(ctx, m, 1);
                CHECK(isomorphic(r.translate, trunc(a, j, 1 + k)));
                if (r.determinate) {
                    CHECK(r.nonsplit);
                    CHECK(r.ends_in_subcategory);
                } else {
                    CHECK(r.ext_dim > 1);
                    CHECK_FALSE(r.middle.has_value());
                }
            }
        }
    }
}

TEST_CASE("relative translate at level 0 is the AR translate")
{
    Context ctx;
    for (const auto& a : {nak({2, 3}), nak({4, 5}), nak({2, 2, 3}), nak({3, 4, 4})}) {
        for (const auto& m : nonprojective_indecomposables(a)) {
            auto r = relative_ar_sequence(ctx, m, 0);
            CHECK(isomorphic(r.translate, ar_translate(m)));
            CHECK(r.ext_dim >= 1);
            if (r.determinate)
                CHECK(r.nonsplit);
        }
    }
}

TEST_CASE("relative translate errors")
{
    Context ctx;
    auto a = nak({2, 3});
    CHECK_THROWS_AS(relative_ar_translate(ctx, projective(a, 1), 1), ExtProjective);
    CHECK_THROWS_AS(relative_ar_translate(ctx, direct_sum_module({simple(a, 0), simple(a, 1)}), 0),
                    InvalidParameters);
    CHECK_THROWS_AS(relative_ar_translate(ctx, simple(a, 0), 1), NotInSubcategory);
}
