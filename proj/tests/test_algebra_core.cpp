#include "doctest.h"

#include <map>

#include "bq/errors.hpp"
#include "bq/families.hpp"
#include "bq/linalg.hpp"

using namespace bq;

namespace {

// Independent dimension oracle: rank of the span of all u * r * v inside the
// dense space of paths of length <= L, for L past the Loewy length.
std::size_t dimension_oracle(const Quiver& q, const std::vector<Relation>& rels, std::size_t L)
{
    std::vector<Path> paths;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        paths.push_back(Path::trivial(v));
    for (std::size_t k = 0; k < paths.size(); ++k) {
        if (paths[k].length() == L)
            continue;
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
            if (q.arrows()[a].source == paths[k].target)
                paths.push_back(*concat(paths[k], Path{q.arrows()[a].source, q.arrows()[a].target, {a}}));
    }
    std::map<Path, std::size_t> idx;
    for (std::size_t k = 0; k < paths.size(); ++k)
        idx[paths[k]] = k;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : rels)
        for (const auto& u : paths)
            for (const auto& v : paths) {
                if (u.target != r.front().path.source || v.source != r.front().path.target ||
                    u.length() + v.length() + 2 > L)
                    continue;
                std::vector<Scalar> row(paths.size());
                bool any = false;
                for (const auto& t : r) {
                    auto w1 = concat(u, t.path);
                    if (!w1)
                        break;
                    auto w = concat(*w1, v);
                    if (!w)
                        break;
                    if (w->length() > L)
                        continue;
                    row[idx.at(*w)] += t.coeff;
                    any = true;
                }
                if (any)
                    rows.push_back(row);
            }
    // Paths of length exactly L count as zero (L is past the Loewy length).
    for (std::size_t k = 0; k < paths.size(); ++k)
        if (paths[k].length() == L) {
            std::vector<Scalar> row(paths.size());
            row[k] = 1;
            rows.push_back(row);
        }
    Matrix m(rows.size(), paths.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < paths.size(); ++j)
            m(i, j) = rows[i][j];
    return paths.size() - rank(m);
}

void check_structure(const Algebra& a)
{
    const std::size_t d = a.dimension();
    auto unit = [&](std::size_t i) {
        std::vector<Scalar> x(d);
        x[i] = 1;
        return x;
    };
    std::vector<Scalar> one(d);
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        one[v] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        CHECK(a.multiply(one, unit(i)) == unit(i));
        CHECK(a.multiply(unit(i), one) == unit(i));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                CHECK(a.multiply(a.multiply(unit(i), unit(j)), unit(k)) ==
                      a.multiply(unit(i), a.multiply(unit(j), unit(k))));
    }
    // Relations vanish.
    for (const auto& r : a.relations()) {
        std::vector<Scalar> s(d);
        for (const auto& t : r) {
            auto x = a.reduce_path(t.path);
            for (std::size_t i = 0; i < d; ++i)
                s[i] += t.coeff * x[i];
        }
        CHECK(s == std::vector<Scalar>(d));
    }
    // Loewy length is exact: some basis path of length N-1 survives, none of length N.
    std::size_t max_len = 0;
    for (const auto& p : a.basis())
        max_len = std::max(max_len, p.length());
    CHECK(max_len + 1 == a.loewy_length());
}

}  // namespace

TEST_CASE("linear A2 without relations")
{
    auto a = build_algebra(Quiver::from_ids({"v0", "v1"}, {{"a", "v0", "v1"}}), {});
    CHECK(a->dimension() == 3);
    CHECK(a->loewy_length() == 2);
    CHECK(a->connected());
    check_structure(*a);
    auto op = opposite(a);
    CHECK(op->quiver().arrows()[0].source == 1);
    CHECK(op->quiver().arrows()[0].target == 0);
    CHECK(op->dimension() == 3);
    auto q = quotient_by_idempotent_ideal(a, {1});
    CHECK(q->dimension() == 1);
    CHECK(q->quiver().vertices() == std::vector<std::string>{"v0"});
}

TEST_CASE("Nakayama algebras from Kupisch series")
{
    auto a = nakayama_from_kupisch({{2, 2, 3}});
    CHECK(a->dimension() == 7);
    CHECK(a->starting_at(2).size() == 3);
    check_structure(*a);
    CHECK(nakayama_from_kupisch({{4, 5, 5}})->dimension() == 14);
    auto b = nakayama_from_kupisch({{2, 3}});
    CHECK(b->dimension() == 5);
    CHECK(b->simple_socle_vertex(1) == 1u);
    for (auto k : std::vector<std::vector<std::size_t>>{{2, 2, 3}, {3, 4, 4}, {4, 5, 5}, {2, 3}, {6, 7}, {3, 3}}) {
        auto n = nakayama_from_kupisch({k});
        std::size_t s = 0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            s += k[i];
            CHECK(n->starting_at(i).size() == k[i]);
        }
        CHECK(n->dimension() == s);
    }
    auto lin = nakayama_from_kupisch({{3, 2, 1}, KupischShape::linear});
    CHECK(lin->dimension() == 6);
    auto lin2 = nakayama_from_kupisch({{2, 2, 1}, KupischShape::linear});
    CHECK(lin2->dimension() == 5);
    check_structure(*lin2);
    CHECK_THROWS_AS(nakayama_from_kupisch({{2, 4}}), InvalidSeries);
    CHECK_THROWS_AS(nakayama_from_kupisch({{1, 2}}), InvalidSeries);
    CHECK_THROWS_AS(nakayama_from_kupisch({{2, 2}, KupischShape::linear}), InvalidSeries);
}

TEST_CASE("B(n, lambda) family")
{
    auto b2 = bnlambda_family(2, {});
    CHECK(b2->dimension() == 5);
    auto b3 = bnlambda_family(3, {1});
    CHECK(b3->dimension() == 9);
    CHECK(b3->dimension() == dimension_oracle(b3->quiver(), b3->relations(), 4));
    check_structure(*b3);
    auto b30 = bnlambda_family(3, {0});
    CHECK(b30->dimension() == dimension_oracle(b30->quiver(), b30->relations(), 4));
    CHECK(bnlambda_family(4, {1, 1})->dimension() == 13);
    CHECK_THROWS_AS(bnlambda_family(3, {}), InvalidParameters);
    CHECK_THROWS_AS(bnlambda_family(3, {2}), InvalidParameters);
}

TEST_CASE("symmetric chain family")
{
    for (std::size_t m = 2; m <= 5; ++m) {
        auto a = symmetric_chain_family(m);
        CHECK(a->dimension() == 4 * m - 2);
        CHECK(a->loewy_length() == 3);
        CHECK(a->dimension() == dimension_oracle(a->quiver(), a->relations(), 4));
        CHECK(is_certified_symmetric(*a));
        CHECK(a->selfinjective());
        check_structure(*a);
    }
    // Socle of e_3 A over the three-vertex chain is spanned by b2*a2.
    auto a3 = symmetric_chain_family(3);
    Matrix soc = a3->projective_socle(2);
    REQUIRE(soc.cols() == 1);
    auto idx = a3->starting_at(2);
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (sgn(soc(k, 0)) != 0)
            CHECK(path_to_string(a3->quiver(), a3->basis_path(idx[k])) == "b2*a2");
}

TEST_CASE("Klein-four-like local algebra")
{
    auto a = klein_four_like();
    REQUIRE(a->dimension() == 4);
    std::vector<std::string> names;
    for (const auto& p : a->basis())
        names.push_back(path_to_string(a->quiver(), p));
    CHECK(names == std::vector<std::string>{"e_1", "x", "y", "x*y"});
    CHECK(a->loewy_length() == 3);
    check_structure(*a);
    auto f = symmetric_form(*a);
    // The witness is supported on the socle element xy.
    CHECK(sgn(f.coefficients[3]) != 0);
    CHECK(a->selfinjective());
}

TEST_CASE("opposite algebras")
{
    auto a = nakayama_from_kupisch({{2, 2, 3}});
    auto op = opposite(a);
    CHECK(op->dimension() == 7);
    CHECK(opposite(op).get() == a.get());
    for (std::size_t i = 0; i < a->dimension(); ++i)
        for (std::size_t j = 0; j < a->dimension(); ++j)
            CHECK(op->product(i, j) == a->product(j, i));
    check_structure(*op);
    // Reversed cyclic orientation: op arrow a_i goes i+1 -> i.
    CHECK(op->quiver().arrows()[0].source == 1);

    // Chain: the opposite presentation swaps the roles of a and b.
    auto s = symmetric_chain_family(3);
    auto so = opposite(s);
    for (const auto& arr : so->quiver().arrows()) {
        const auto& orig = s->quiver().arrows()[s->quiver().arrow_index(arr.id)];
        CHECK(arr.source == orig.target);
    }
    CHECK(so->cartan() == s->cartan().transpose());
}

TEST_CASE("quotients by idempotent ideals")
{
    auto a = nakayama_from_kupisch({{2, 2, 3}});
    auto q = quotient_by_idempotent_ideal(a, {0});
    CHECK(q->dimension() == 3);
    std::vector<std::string> names;
    for (const auto& p : q->basis())
        names.push_back(path_to_string(q->quiver(), p));
    CHECK(names == std::vector<std::string>{"e_1", "e_2", "a1"});
    // Killing vertex 2 of the two-vertex chain leaves the field at vertex 1.
    auto s = symmetric_chain_family(2);
    CHECK(quotient_by_idempotent_ideal(s, {1})->dimension() == 1);
    CHECK_THROWS_AS(quotient_by_idempotent_ideal(a, {0, 1, 2}), QuotientCollapse);
    CHECK_THROWS_AS(quotient_by_idempotent_ideal(a, {}), InvalidParameters);
}

TEST_CASE("symmetric form detection")
{
    CHECK_THROWS_AS(symmetric_form(*nakayama_from_kupisch({{2, 2, 3}})), NotSymmetric);
    CHECK_NOTHROW(symmetric_form(*symmetric_chain_family(3)));
    CHECK(is_certified_symmetric(*nakayama_from_kupisch({{3, 3}})));
    // Selfinjective but not symmetric: Nakayama [2,2] has Nakayama permutation swapping vertices.
    auto n22 = nakayama_from_kupisch({{2, 2}});
    CHECK(n22->selfinjective());
    CHECK_FALSE(is_certified_symmetric(*n22));
}

TEST_CASE("connectivity and guards")
{
    auto disc = build_algebra(Quiver::from_ids({"1", "2"}, {}), {});
    CHECK_FALSE(disc->connected());
    CHECK(disc->semisimple());
    // A free loop never closes.
    Quiver loop = Quiver::from_ids({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
    CHECK_THROWS_AS(build_algebra(loop, {{{Scalar(1), make_path(loop, {"x", "x"})}}}, 10), BoundExceeded);
    CHECK_THROWS_AS(make_path(loop, {"z"}), InvalidParameters);
    Quiver a2 = Quiver::from_ids({"1", "2"}, {{"a", "1", "2"}});
    CHECK_THROWS_AS(make_path(a2, {"a", "a"}), InvalidParameters);
}
