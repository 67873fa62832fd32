#include "bq/families.hpp"

#include <algorithm>

#include "bq/errors.hpp"

namespace bq {

namespace {

Relation monomial(const Quiver& q, std::initializer_list<std::string> word)
{
    return {{Scalar(1), make_path(q, word)}};
}

Relation binomial(const Quiver& q, std::initializer_list<std::string> w1, const Scalar& c,
                  std::initializer_list<std::string> w2)
{
    Relation r{{Scalar(1), make_path(q, w1)}};
    if (sgn(c) != 0)
        r.push_back({-c, make_path(q, w2)});
    return r;
}

std::string num(std::size_t i) { return std::to_string(i); }

// Quiver 1 <-> 2 <-> ... <-> n with a<i>: i -> i+1 and b<i>: i+1 -> i.
Quiver double_line(std::size_t n)
{
    std::vector<std::string> vs;
    for (std::size_t i = 1; i <= n; ++i)
        vs.push_back(num(i));
    std::vector<std::tuple<std::string, std::string, std::string>> as;
    for (std::size_t i = 1; i < n; ++i) {
        as.emplace_back("a" + num(i), num(i), num(i + 1));
        as.emplace_back("b" + num(i), num(i + 1), num(i));
    }
    return Quiver::from_ids(vs, as);
}

}  // namespace

AlgebraPtr nakayama_from_kupisch(const KupischSeries& k)
{
    const auto& a = k.entries;
    const std::size_t n = a.size();
    if (n == 0)
        throw InvalidSeries("empty Kupisch series");
    std::string label = "[";
    for (std::size_t i = 0; i < n; ++i)
        label += (i ? "," : "") + num(a[i]);
    label += "]";

    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(num(i));
    std::vector<Arrow> as;
    if (k.shape == KupischShape::cyclic) {
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] < 2)
                throw InvalidSeries("cyclic Kupisch series needs all entries >= 2");
            if (a[(i + 1) % n] + 1 < a[i])
                throw InvalidSeries("Kupisch series violates a_{i+1} >= a_i - 1 at i = " + num(i));
        }
        for (std::size_t i = 0; i < n; ++i)
            as.push_back({"a" + num(i), i, (i + 1) % n});
    } else {
        if (a[n - 1] != 1)
            throw InvalidSeries("linear Kupisch series must end with 1");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (a[i] == 0 || a[i + 1] + 1 < a[i])
                throw InvalidSeries("Kupisch series violates a_{i+1} >= a_i - 1 at i = " + num(i));
        for (std::size_t i = 0; i + 1 < n; ++i)
            as.push_back({"a" + num(i), i, i + 1});
    }
    Quiver q(vs, as);
    std::vector<Relation> rels;
    std::size_t cap = 1;
    for (std::size_t i = 0; i < n; ++i) {
        cap = std::max(cap, a[i]);
        if (k.shape == KupischShape::linear && i + a[i] > n - 1)
            continue;
        Path p{i, i, {}};
        for (std::size_t s = 0; s < a[i]; ++s) {
            p.arrows.push_back(p.target);  // arrow a<j> has index j
            p.target = (p.target + 1) % n;
        }
        rels.push_back({{Scalar(1), p}});
    }
    return build_algebra(q, rels, cap + 1,
                         std::string(k.shape == KupischShape::cyclic ? "nakayama" : "nakayama_linear") + label);
}

AlgebraPtr bnlambda_family(std::size_t n, const std::vector<int>& lambdas)
{
    if (n < 2)
        throw InvalidParameters("B(n, lambda) needs n >= 2");
    if (lambdas.size() != n - 2)
        throw InvalidParameters("B(n, lambda) needs exactly n - 2 parameters");
    for (int l : lambdas)
        if (l != 0 && l != 1)
            throw InvalidParameters("lambda parameters must be 0 or 1");
    Quiver q = double_line(n);
    std::vector<Relation> rels;
    rels.push_back(monomial(q, {"b" + num(n - 1), "a" + num(n - 1)}));
    for (std::size_t i = 2; i + 1 <= n; ++i) {
        rels.push_back(binomial(q, {"b" + num(i - 1), "a" + num(i - 1)}, Scalar(lambdas[i - 2]),
                                {"a" + num(i), "b" + num(i)}));
        rels.push_back(monomial(q, {"a" + num(i - 1), "a" + num(i)}));
        rels.push_back(monomial(q, {"b" + num(i), "b" + num(i - 1)}));
    }
    std::string label = "B(" + num(n);
    for (int l : lambdas)
        label += "," + std::to_string(l);
    return build_algebra(q, rels, 64, label + ")");
}

AlgebraPtr symmetric_chain_family(std::size_t m)
{
    if (m < 2)
        throw InvalidParameters("symmetric chain needs m >= 2");
    Quiver q = double_line(m);
    std::vector<Relation> rels;
    for (std::size_t i = 2; i + 1 <= m; ++i) {
        rels.push_back(binomial(q, {"b" + num(i - 1), "a" + num(i - 1)}, Scalar(1), {"a" + num(i), "b" + num(i)}));
        rels.push_back(monomial(q, {"a" + num(i - 1), "a" + num(i)}));
        rels.push_back(monomial(q, {"b" + num(i), "b" + num(i - 1)}));
    }
    if (m == 2) {
        // No interior vertex: cut the two cycles at length three.
        rels.push_back(monomial(q, {"a1", "b1", "a1"}));
        rels.push_back(monomial(q, {"b1", "a1", "b1"}));
    }
    return build_algebra(q, rels, 64, "symmetric_chain(" + num(m) + ")");
}

AlgebraPtr klein_four_like()
{
    Quiver q = Quiver::from_ids({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
    std::vector<Relation> rels{monomial(q, {"x", "x"}), monomial(q, {"y", "y"}),
                               binomial(q, {"x", "y"}, Scalar(1), {"y", "x"})};
    return build_algebra(q, rels, 64, "klein_four_like");
}

}  // namespace bq
