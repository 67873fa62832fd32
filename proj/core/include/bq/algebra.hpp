#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bq/matrix.hpp"

namespace bq {

struct Arrow {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    /// Convenience: arrows as (id, source id, target id).
    static Quiver from_ids(std::vector<std::string> vertices,
                           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    std::optional<std::size_t> find_vertex(const std::string& id) const;
    std::optional<std::size_t> find_arrow(const std::string& id) const;
    std::size_t vertex_index(const std::string& id) const;  // throws InvalidParameters
    std::size_t arrow_index(const std::string& id) const;   // throws InvalidParameters

    bool connected() const;
    Quiver reversed() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// A path; composition is left to right (the first arrow is traversed first).
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    static Path trivial(std::size_t v) { return Path{v, v, {}}; }
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// Path from arrow ids, checked for composability.
Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids);
/// Concatenation p then q; nullopt when not composable.
std::optional<Path> concat(const Path& p, const Path& q);
std::string path_to_string(const Quiver& q, const Path& p);

struct RelationTerm {
    Scalar coeff;
    Path path;
    friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};
using Relation = std::vector<RelationTerm>;

/// A linear combination of basis elements, sparse, sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional bound quiver algebra KQ/I with an explicit path basis
/// and multiplication table.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    struct Data {
        std::string name;
        Quiver quiver;
        std::vector<Relation> relations;
        std::size_t loewy_length = 0;      // least N with J^N = 0
        std::vector<Path> basis;           // trivial paths first, index = vertex
        std::vector<SparseVec> table;      // table[i * dim + j] = basis[i] * basis[j]
    };

    explicit Algebra(Data d);

    const std::string& name() const { return d_.name; }
    const Quiver& quiver() const { return d_.quiver; }
    const std::vector<Relation>& relations() const { return d_.relations; }
    std::size_t loewy_length() const { return d_.loewy_length; }
    std::size_t dimension() const { return d_.basis.size(); }
    std::size_t vertex_count() const { return d_.quiver.vertex_count(); }
    const std::vector<Path>& basis() const { return d_.basis; }
    const Path& basis_path(std::size_t i) const { return d_.basis[i]; }
    std::size_t idempotent(std::size_t v) const { return v; }
    /// Basis index of the arrow (arrows are always basis elements).
    std::size_t arrow_element(std::size_t a) const { return arrow_basis_[a]; }

    const SparseVec& product(std::size_t i, std::size_t j) const { return d_.table[i * dimension() + j]; }
    std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    /// Index of the basis element equal to the path, if it is one.
    std::optional<std::size_t> basis_index(const Path& p) const;
    /// Reduction of an arbitrary path to basis coordinates (zero past the Loewy length).
    std::vector<Scalar> reduce_path(const Path& p) const;

    /// Basis indices of e_u A e_v.
    const std::vector<std::size_t>& corner(std::size_t u, std::size_t v) const { return corner_[u * vertex_count() + v]; }
    /// Basis indices of e_u A (paths starting at u), ordered by target vertex then index.
    std::vector<std::size_t> starting_at(std::size_t u) const;
    /// Basis indices of A e_v (paths ending at v), ordered by source vertex then index.
    std::vector<std::size_t> ending_at(std::size_t v) const;

    /// Cartan matrix c(u, v) = dim e_u A e_v.
    Matrix cartan() const;

    bool connected() const { return d_.quiver.connected(); }
    bool semisimple() const { return d_.loewy_length <= 1; }
    /// Basis of soc(e_u A), columns in the coordinates of starting_at(u).
    Matrix projective_socle(std::size_t u) const;
    /// Least k with e_u J^k = 0.
    std::size_t projective_loewy_length(std::size_t u) const;
    /// Vertex of the socle of e_u A when that socle is simple.
    std::optional<std::size_t> simple_socle_vertex(std::size_t u) const;
    /// P(u) is injective.
    bool projective_is_injective(std::size_t u) const { return proj_inj_[u]; }
    /// I(v) is projective.
    bool injective_is_projective(std::size_t v) const { return inj_proj_[v]; }
    bool selfinjective() const;

    /// Stable hash of quiver, basis and table; equal for structurally equal algebras.
    std::size_t fingerprint() const { return fingerprint_; }
    bool same_as(const Algebra& other) const;

    const Data& data() const { return d_; }

    friend AlgebraPtr opposite(const AlgebraPtr& a);

private:
    Data d_;
    std::vector<std::size_t> arrow_basis_;
    std::vector<std::vector<std::size_t>> corner_;
    std::vector<bool> proj_inj_;
    std::vector<bool> inj_proj_;
    std::size_t fingerprint_ = 0;

    mutable std::mutex op_mutex_;
    mutable AlgebraPtr op_strong_;
    mutable std::weak_ptr<const Algebra> op_weak_;
};

/// Truncation-closure construction of KQ/<rels>. Throws BoundExceeded when no
/// N <= loewy_cap gives J^N = 0.
AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels, std::size_t loewy_cap = 64,
                         std::string name = "");

/// Opposite algebra: arrows and words reversed, same basis indices. The
/// opposite of the opposite is the original object while it is alive.
AlgebraPtr opposite(const AlgebraPtr& a);

/// A/AεA for ε the sum of the idempotents of the given vertices.
AlgebraPtr quotient_by_idempotent_ideal(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);

struct SymmetricForm {
    std::vector<Scalar> coefficients;  // λ(b_i)
};

/// Nondegenerate symmetric functional, or throws NotSymmetric.
SymmetricForm symmetric_form(const Algebra& a, unsigned seed = 0, std::size_t budget = 64);
bool is_certified_symmetric(const Algebra& a, unsigned seed = 0);

}  // namespace bq
