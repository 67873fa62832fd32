#include "bq/endomorphism.hpp"

#include <deque>

#include "bq/decompose.hpp"
#include "bq/errors.hpp"
#include "bq/linalg.hpp"

namespace bq {

namespace {

std::vector<Scalar> flatten(const ModuleMap& f)
{
    std::vector<Scalar> out;
    for (const auto& c : f.components())
        out.insert(out.end(), c.data().begin(), c.data().end());
    return out;
}

std::size_t flat_size(const Representation& s, const Representation& t)
{
    std::size_t n = 0;
    for (std::size_t v = 0; v < s.vertex_count(); ++v)
        n += s.dim(v) * t.dim(v);
    return n;
}

Matrix columns_of(const std::vector<ModuleMap>& maps, std::size_t rows)
{
    Matrix m(rows, maps.size());
    for (std::size_t c = 0; c < maps.size(); ++c) {
        auto v = flatten(maps[c]);
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = v[r];
    }
    return m;
}

std::vector<ModuleMap> independent(const std::vector<ModuleMap>& maps, std::size_t rows)
{
    std::vector<ModuleMap> out;
    for (auto c : extending_columns(Matrix(rows, 0), columns_of(maps, rows)))
        out.push_back(maps[c]);
    return out;
}

}  // namespace

std::vector<ModuleMap> radical_endomorphisms(const Representation& t)
{
    std::vector<ModuleMap> out;
    const Scalar d(static_cast<long>(t.total_dim()));
    ModuleMap id = ModuleMap::identity(t);
    for (const auto& f : hom_space(t, t)) {
        ModuleMap g = f - Scalar(f.total().trace() / d) * id;
        if (!g.is_zero())
            out.push_back(g);
    }
    return out;
}

EndomorphismAlgebra endomorphism_algebra(const std::vector<Representation>& summands, std::string name)
{
    const std::size_t t = summands.size();
    if (t == 0)
        throw InvalidParameters("endomorphism algebra of the zero module");
    for (std::size_t i = 0; i < t; ++i) {
        if (!has_local_endomorphism_ring(summands[i]))
            throw InvalidParameters(summands[i].name() + " is not indecomposable with residue field Q");
        for (std::size_t j = 0; j < i; ++j)
            if (isomorphic(summands[i], summands[j]))
                throw InvalidParameters(summands[i].name() + " and " + summands[j].name() + " are isomorphic");
    }
    // rad_ij ⊆ Hom(M_j, M_i)
    std::vector<std::vector<std::size_t>> rows(t, std::vector<std::size_t>(t));
    std::vector<std::vector<std::vector<ModuleMap>>> rad(t, std::vector<std::vector<ModuleMap>>(t));
    std::size_t total = 0;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            rows[i][j] = flat_size(summands[j], summands[i]);
            auto h = hom_space(summands[j], summands[i]);
            total += h.size();
            rad[i][j] = i == j ? independent(radical_endomorphisms(summands[i]), rows[i][j]) : h;
        }

    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < t; ++i)
        vertices.push_back(std::to_string(i + 1));
    std::vector<Arrow> arrows;
    std::vector<ModuleMap> values;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t k = 0; k < t; ++k) {
            std::vector<ModuleMap> sq;
            for (std::size_t j = 0; j < t; ++j)
                for (const auto& f : rad[i][j])
                    for (const auto& g : rad[j][k])
                        sq.push_back(f * g);
            for (auto c : extending_columns(columns_of(sq, rows[i][k]), columns_of(rad[i][k], rows[i][k]))) {
                arrows.push_back({"g" + std::to_string(arrows.size() + 1), i, k});
                values.push_back(rad[i][k][c]);
            }
        }
    Quiver q(vertices, arrows);

    // Breadth-first over nonzero paths; zero paths give monomial relations and
    // linear dependencies among longer paths give the remaining ones.
    std::vector<Relation> rels;
    std::vector<std::vector<std::vector<std::pair<Path, ModuleMap>>>> long_paths(
        t, std::vector<std::vector<std::pair<Path, ModuleMap>>>(t));
    std::deque<std::pair<Path, ModuleMap>> queue;
    for (std::size_t a = 0; a < arrows.size(); ++a)
        queue.push_back({Path{arrows[a].source, arrows[a].target, {a}}, values[a]});
    std::size_t longest = 1;
    while (!queue.empty()) {
        auto [p, f] = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            if (arrows[a].source != p.target)
                continue;
            Path np{p.source, arrows[a].target, p.arrows};
            np.arrows.push_back(a);
            ModuleMap nf = f * values[a];
            if (nf.is_zero()) {
                rels.push_back({{Scalar(1), np}});
                continue;
            }
            longest = std::max(longest, np.length());
            long_paths[np.source][np.target].push_back({np, nf});
            queue.push_back({np, nf});
        }
    }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t k = 0; k < t; ++k) {
            const auto& lp = long_paths[i][k];
            if (lp.empty())
                continue;
            std::vector<ModuleMap> vals;
            for (const auto& [p, f] : lp)
                vals.push_back(f);
            Matrix ker = kernel(columns_of(vals, rows[i][k]));
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                Relation r;
                for (std::size_t x = 0; x < lp.size(); ++x)
                    if (sgn(ker(x, c)) != 0)
                        r.push_back({ker(x, c), lp[x].first});
                rels.push_back(r);
            }
        }
    if (name.empty()) {
        name = "End(";
        for (std::size_t i = 0; i < t; ++i)
            name += (i ? "+" : "") + summands[i].name();
        name += ")";
    }
    EndomorphismAlgebra out;
    out.algebra = build_algebra(q, rels, longest + 2, name);
    out.summands = summands;
    out.arrow_maps = values;
    if (out.algebra->dimension() != total)
        throw InternalInconsistency("presentation of " + name + " has dimension " +
                                    std::to_string(out.algebra->dimension()) + ", expected " + std::to_string(total));
    return out;
}

EndomorphismAlgebra endomorphism_algebra_of(const Representation& m, DecomposeOptions opt, std::string name)
{
    std::vector<Representation> parts;
    for (const auto& p : decompose(m, opt).parts)
        parts.push_back(p.module);
    return endomorphism_algebra(parts, std::move(name));
}

AlgebraPtr endo_quiver_construction(const AlgebraPtr& a, const std::vector<std::string>& socle_vertices)
{
    if (!is_certified_symmetric(*a))
        throw PreconditionFailed(a->name() + " is not certified symmetric");
    for (std::size_t u = 0; u < a->vertex_count(); ++u)
        if (a->projective_loewy_length(u) < 3)
            throw PreconditionFailed("P(" + a->quiver().vertices()[u] + ") has Loewy length " +
                                     std::to_string(a->projective_loewy_length(u)) + " < 3");
    const Quiver& q0 = a->quiver();
    std::vector<std::string> vertices = q0.vertices();
    std::vector<Arrow> arrows = q0.arrows();
    std::vector<Relation> rels = a->relations();
    std::vector<std::size_t> chosen;
    for (const auto& id : socle_vertices) {
        std::size_t i = q0.vertex_index(id);
        if (std::find(chosen.begin(), chosen.end(), i) != chosen.end())
            throw InvalidParameters("vertex " + id + " chosen twice");
        chosen.push_back(i);
    }
    auto fresh = [&](const std::string& n) {
        if (q0.find_vertex(n) || q0.find_arrow(n))
            throw InvalidParameters("name " + n + " already used in " + a->name());
        return n;
    };
    std::vector<std::size_t> alpha, beta, pv;
    for (auto i : chosen) {
        const std::string& id = q0.vertices()[i];
        pv.push_back(vertices.size());
        vertices.push_back(fresh("p" + id));
        alpha.push_back(arrows.size());
        arrows.push_back({fresh("alpha" + id), i, pv.back()});
        beta.push_back(arrows.size());
        arrows.push_back({fresh("beta" + id), pv.back(), i});
    }
    for (std::size_t c = 0; c < chosen.size(); ++c) {
        const std::size_t i = chosen[c], p = pv[c];
        for (std::size_t g = 0; g < q0.arrow_count(); ++g) {
            if (q0.arrows()[g].target == i)
                rels.push_back({{Scalar(1), Path{q0.arrows()[g].source, p, {g, alpha[c]}}}});
            if (q0.arrows()[g].source == i)
                rels.push_back({{Scalar(1), Path{p, q0.arrows()[g].target, {beta[c], g}}}});
        }
        rels.push_back({{Scalar(1), Path{p, p, {beta[c], alpha[c]}}}});
        Matrix soc = a->projective_socle(i);
        if (soc.cols() != 1)
            throw PreconditionFailed("socle of P(" + q0.vertices()[i] + ") is not simple");
        auto idx = a->starting_at(i);
        Relation r{{Scalar(1), Path{i, i, {alpha[c], beta[c]}}}};
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (sgn(soc(k, 0)) == 0)
                continue;
            const Path& b = a->basis_path(idx[k]);
            if (b.target != i)
                throw PreconditionFailed("socle of P(" + q0.vertices()[i] + ") does not lie at its own vertex");
            r.push_back({-soc(k, 0), b});
        }
        rels.push_back(r);
    }
    std::string name = "End(" + a->name() + "+S";
    for (std::size_t c = 0; c < socle_vertices.size(); ++c)
        name += (c ? "," : "(") + socle_vertices[c];
    name += socle_vertices.empty() ? ")" : "))";
    AlgebraPtr b = build_algebra(Quiver(vertices, arrows), rels, a->loewy_length() + 2, name);
    if (b->dimension() != a->dimension() + 3 * chosen.size())
        throw InternalInconsistency("construction has dimension " + std::to_string(b->dimension()) + ", expected " +
                                    std::to_string(a->dimension() + 3 * chosen.size()));
    return b;
}

Representation regular_plus_simples(const AlgebraPtr& a, const std::vector<std::string>& vertices)
{
    std::vector<Representation> parts{regular(a)};
    for (const auto& id : vertices)
        parts.push_back(simple(a, a->quiver().vertex_index(id)));
    return direct_sum_module(parts);
}

}  // namespace bq
