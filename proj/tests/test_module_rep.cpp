#include "doctest.h"

#include <algorithm>

#include "bq/decompose.hpp"
#include "bq/errors.hpp"
#include "bq/families.hpp"
#include "bq/linalg.hpp"
#include "bq/random.hpp"

using namespace bq;

namespace {

using Dims = std::vector<std::size_t>;

AlgebraPtr nak(std::vector<std::size_t> e, KupischShape s = KupischShape::cyclic)
{
    return nakayama_from_kupisch({std::move(e), s});
}

// Independent count of paths from u in a cyclic Nakayama algebra: lengths
// below the Kupisch entry, walking u, u+1, ...
Dims nakayama_projective_dims(const std::vector<std::size_t>& e, std::size_t u)
{
    Dims d(e.size(), 0);
    for (std::size_t len = 0; len < e[u]; ++len)
        ++d[(u + len) % e.size()];
    return d;
}

std::vector<Matrix> unit_generators(const Representation& m, std::size_t v, const std::vector<Scalar>& x)
{
    std::vector<Matrix> g;
    for (std::size_t w = 0; w < m.vertex_count(); ++w)
        g.push_back(w == v ? Matrix::column_vector(x) : Matrix(m.dim(w), 0));
    return g;
}

std::size_t element(const AlgebraPtr& a, const std::vector<std::string>& ids)
{
    return *a->basis_index(make_path(a->quiver(), ids));
}

// xA inside the regular module of the Klein-four-like algebra.
Representation klein_xA(const AlgebraPtr& k)
{
    Representation a = regular(k);
    std::vector<Scalar> x(k->dimension());
    x[element(k, {"x"})] = 1;
    return generated_submodule(a, unit_generators(a, 0, x)).module;
}

// Quotients of projectives and injectives by random cyclic submodules.
std::vector<Representation> module_battery(const AlgebraPtr& a, unsigned seed, std::size_t count)
{
    SmallIntRng rng(seed);
    auto s = structural_modules(a);
    std::vector<Representation> out;
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t v = static_cast<std::size_t>(rng.next(0, static_cast<long>(a->vertex_count()) - 1));
        Representation base = rng.next(0, 1) ? s.projectives[v] : s.injectives[v];
        std::size_t w = static_cast<std::size_t>(rng.next(0, static_cast<long>(a->vertex_count()) - 1));
        std::vector<Scalar> x(base.dim(w));
        for (auto& c : x)
            c = rng.next(-2, 2);
        if (base.dim(w) == 0) {
            out.push_back(base);
            continue;
        }
        out.push_back(quotient_by(generated_submodule(base, unit_generators(base, w, x))).module);
    }
    return out;
}

}  // namespace

TEST_CASE("structural modules over Nakayama [2,2,3]")
{
    auto a = nak({2, 2, 3});
    auto s = structural_modules(a);
    CHECK(s.projectives[0].dims() == Dims{1, 1, 0});
    CHECK(s.projectives[2].dims() == Dims{1, 1, 1});
    for (std::size_t u = 0; u < 3; ++u) {
        CHECK(s.projectives[u].dims() == nakayama_projective_dims({2, 2, 3}, u));
        Dims unit(3, 0);
        unit[u] = 1;
        CHECK(s.simples[u].dims() == unit);
        CHECK(top_dims(s.projectives[u]) == unit);
        CHECK(socle_dims(s.injectives[u]) == unit);
        CHECK(isomorphic(top(s.projectives[u]).module, s.simples[u]));
        CHECK(isomorphic(socle(s.injectives[u]).module, s.simples[u]));
    }
    CHECK(s.projectives[1].name() == "P(1)");
    CHECK(s.injectives[1].name() == "I(1)");
}

TEST_CASE("structural modules over several Nakayama series")
{
    for (auto e : std::vector<std::vector<std::size_t>>{{2, 3}, {3, 3, 3}, {2, 2, 2, 3}, {4, 3}}) {
        auto a = nak(e);
        for (std::size_t u = 0; u < e.size(); ++u)
            CHECK(projective(a, u).dims() == nakayama_projective_dims(e, u));
    }
}

TEST_CASE("hom spaces")
{
    auto a = nak({2, 2, 3});
    auto battery = module_battery(a, 0, 20);
    for (const auto& m : battery)
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(hom_dim(projective(a, i), m) == m.dim(i));
            CHECK(hom_space(projective(a, i), m).size() == m.dim(i));
        }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(hom_dim(simple(a, i), simple(a, j)) == (i == j ? 1u : 0u));

    auto k = klein_four_like();
    auto xa = klein_xA(k);
    CHECK(xa.total_dim() == 2);
    CHECK(hom_dim(xa, regular(k)) == 2);
}

TEST_CASE("hom dimension is additive over direct sums")
{
    for (auto a : {nak({2, 2, 3}), bnlambda_family(3, {1}), symmetric_chain_family(3)}) {
        auto battery = module_battery(a, 7, 12);
        SmallIntRng rng(3);
        for (std::size_t t = 0; t < 10; ++t) {
            const auto& m = battery[static_cast<std::size_t>(rng.next(0, 11))];
            const auto& m2 = battery[static_cast<std::size_t>(rng.next(0, 11))];
            const auto& n = battery[static_cast<std::size_t>(rng.next(0, 11))];
            auto sum = direct_sum_module({m, m2});
            CHECK(hom_dim(sum, n) == hom_dim(m, n) + hom_dim(m2, n));
            CHECK(hom_dim(n, sum) == hom_dim(n, m) + hom_dim(n, m2));
        }
    }
}

TEST_CASE("hom space elements are natural and independent")
{
    auto a = bnlambda_family(3, {0});
    auto battery = module_battery(a, 11, 8);
    for (const auto& m : battery)
        for (const auto& n : battery) {
            auto basis = hom_space(m, n);
            for (const auto& f : basis) {
                // The constructor re-checks naturality on each copy.
                ModuleMap again(f.source(), f.target(), f.components());
                CHECK(again.components() == f.components());
            }
            if (!basis.empty()) {
                std::vector<std::vector<Scalar>> rows;
                for (const auto& f : basis) {
                    std::vector<Scalar> r;
                    for (const auto& c : f.components())
                        r.insert(r.end(), c.data().begin(), c.data().end());
                    rows.push_back(std::move(r));
                }
                Matrix g(rows.size(), rows.front().size());
                for (std::size_t i = 0; i < rows.size(); ++i)
                    for (std::size_t j = 0; j < rows[i].size(); ++j)
                        g(i, j) = rows[i][j];
                CHECK(rank(g) == basis.size());
            }
        }
}

TEST_CASE("top, socle and radical")
{
    auto a = nak({2, 2, 3});
    auto p2 = projective(a, 2);
    CHECK(isomorphic(socle(p2).module, simple(a, 1)));

    auto b = nak({2, 3});
    auto e1 = projective(b, 1);
    CHECK(e1.total_dim() == 3);
    CHECK(isomorphic(socle(e1).module, simple(b, 1)));
    CHECK(isomorphic(top(e1).module, simple(b, 1)));
    CHECK(loewy_length(e1) == 3);
    CHECK(radical(e1).module.total_dim() == 2);
    CHECK(radical_power(e1, 2).module.total_dim() == 1);
    CHECK(radical_power(e1, 3).module.is_zero());

    for (std::size_t m = 2; m <= 5; ++m) {
        auto s = symmetric_chain_family(m);
        std::size_t last = m - 1;
        auto soc = socle(projective(s, last));
        CHECK(soc.module.total_dim() == 1);
        // Its image is spanned by b_{m-1} a_{m-1}, a loop at the last vertex.
        auto want = corner_coordinates(*s, last, last,
                                       SparseVec{{element(s, {"b" + std::to_string(m - 1), "a" + std::to_string(m - 1)}),
                                                  Scalar(1)}});
        Matrix col = soc.inclusion.at(last);
        CHECK(col.cols() == 1);
        CHECK(rank(Matrix::hstack(col, Matrix::column_vector(want))) == 1);
    }
}

TEST_CASE("trace submodules")
{
    auto a = nak({2, 2, 3});
    for (std::size_t i = 0; i < 3; ++i) {
        auto p = projective(a, i);
        CHECK(trace_submodule({p}, p).module.dims() == p.dims());
    }
    auto t = trace_submodule({projective(a, 1)}, projective(a, 0));
    CHECK(t.module.dims() == Dims{0, 1, 0});
    auto tt = trace_submodule({projective(a, 1)}, t.module);
    CHECK(tt.module.dims() == t.module.dims());
    // P(0) has no composition factor S(2).
    CHECK(trace_submodule({simple(a, 2)}, projective(a, 0)).module.is_zero());
}

TEST_CASE("kernels and cokernels")
{
    auto a = nak({2, 2, 3});
    auto battery = module_battery(a, 5, 6);
    for (const auto& m : battery) {
        auto kc = kernel_cokernel(ModuleMap::identity(m));
        CHECK(kc.kernel.module.is_zero());
        CHECK(kc.cokernel.module.is_zero());
        for (const auto& n : battery) {
            auto z = kernel_cokernel(ModuleMap::zero(m, n));
            CHECK(z.kernel.module.dims() == m.dims());
            CHECK(z.cokernel.module.dims() == n.dims());
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        auto p = projective(a, i);
        auto to_simple = top(p).projection;
        auto k = kernel(to_simple);
        CHECK(k.module.dims() == radical(p).module.dims());
        CHECK(isomorphic(k.module, radical(p).module));
    }
    // Exactness at every vertex for random maps.
    for (const auto& m : battery)
        for (const auto& n : battery)
            for (const auto& f : hom_space(m, n)) {
                auto kc = kernel_cokernel(f);
                for (std::size_t v = 0; v < 3; ++v) {
                    CHECK((f.at(v) * kc.kernel.inclusion.at(v)).is_zero());
                    CHECK((kc.cokernel.projection.at(v) * f.at(v)).is_zero());
                    CHECK(kc.kernel.module.dim(v) + rank(f.at(v)) == m.dim(v));
                    CHECK(kc.cokernel.module.dim(v) + rank(f.at(v)) == n.dim(v));
                }
            }
}

TEST_CASE("duality")
{
    auto a = nak({2, 2, 3});
    auto op = opposite(a);
    for (std::size_t i = 0; i < 3; ++i) {
        auto ds = dualize(simple(a, i));
        CHECK(ds.algebra() == op);
        CHECK(isomorphic(ds, simple(op, i)));
        CHECK(isomorphic(dualize(projective(a, i)), injective(op, i)));
        auto back = dualize(ds);
        CHECK(back.algebra() == a);
        CHECK(back.key() == simple(a, i).key());
    }
    auto b = nak({2, 3});
    auto d = dualize(projective(b, 1));
    CHECK(d.total_dim() == 3);
    CHECK(d.name() == "D(P(1))");
    CHECK(dualize(d).name() == "P(1)");

    // D swaps kernels and cokernels.
    auto battery = module_battery(a, 9, 6);
    for (const auto& m : battery)
        for (const auto& n : battery)
            for (const auto& f : hom_space(m, n)) {
                auto df = dualize(f);
                CHECK(isomorphic(kernel(df).module, dualize(cokernel(f).module)));
                CHECK(isomorphic(cokernel(df).module, dualize(kernel(f).module)));
            }
}

TEST_CASE("decomposition")
{
    auto a = nak({2, 2, 3});
    for (std::size_t i = 0; i < 3; ++i) {
        auto p = projective(a, i);
        auto d = decompose(direct_sum_module({p, p}));
        REQUIRE(d.parts.size() == 1);
        CHECK(d.parts[0].multiplicity == 2);
        CHECK(isomorphic(d.parts[0].module, p));
    }
    auto d = decompose(regular(a));
    REQUIRE(d.parts.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(has_summand(d, projective(a, i)));
        CHECK(d.parts[i].multiplicity == 1);
    }

    auto k = klein_four_like();
    auto m = direct_sum_module({regular(k), klein_xA(k)});
    auto dk = decompose(m);
    REQUIRE(dk.parts.size() == 2);
    std::vector<std::size_t> sizes{dk.parts[0].module.total_dim(), dk.parts[1].module.total_dim()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 4});

    CHECK(decompose(Representation::zero(a)).parts.empty());
}

TEST_CASE("decomposition certificates and locality")
{
    for (auto a : {nak({2, 2, 3}), bnlambda_family(3, {1}), symmetric_chain_family(3), klein_four_like()}) {
        auto s = structural_modules(a);
        std::vector<Representation> parts = s.projectives;
        parts.insert(parts.end(), s.simples.begin(), s.simples.end());
        parts.push_back(s.injectives.front());
        auto m = direct_sum_module(parts);
        auto d = decompose(m);
        ModuleMap sum = ModuleMap::zero(m, m);
        Dims total(a->vertex_count(), 0);
        for (const auto& p : d.parts) {
            CHECK(p.multiplicity >= 1);
            CHECK(has_local_endomorphism_ring(p.module));
            for (std::size_t c = 0; c < p.multiplicity; ++c) {
                sum = sum + p.inclusions[c] * p.projections[c];
                CHECK((p.projections[c] * p.inclusions[c]).components() ==
                      ModuleMap::identity(p.module).components());
                for (std::size_t v = 0; v < total.size(); ++v)
                    total[v] += p.module.dim(v);
            }
        }
        CHECK(sum.components() == ModuleMap::identity(m).components());
        CHECK(total == m.dims());
        CHECK(d.summand_count() == parts.size());
    }
}

TEST_CASE("isomorphism tests")
{
    auto a = nak({2, 2, 3});
    auto p = projective(a, 2);
    auto self = iso_test(p, p);
    CHECK(self.kind == IsoResult::Kind::iso);
    CHECK(self.map->is_isomorphism());
    auto r = iso_test(simple(a, 0), simple(a, 1));
    CHECK(r.kind == IsoResult::Kind::not_iso);
    CHECK(r.reason == "dimension vector");

    // P(2) is uniserial with socle S(1), so it is the injective hull I(1).
    auto i1 = injective(a, 1);
    CHECK(i1.dims() == Dims{1, 1, 1});
    CHECK(isomorphic(projective(a, 2), i1));
    // Same dimension vector, not isomorphic.
    auto q = direct_sum_module({simple(a, 0), simple(a, 1), simple(a, 2)});
    CHECK(iso_test(q, i1).kind == IsoResult::Kind::not_iso);

    // A non-trivial change of basis is still recognised.
    Representation s = direct_sum_module({projective(a, 0), projective(a, 1)});
    auto d = decompose(s);
    CHECK(isomorphic(direct_sum_module(d.summands()), s));
}
