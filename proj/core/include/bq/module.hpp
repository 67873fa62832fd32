#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bq/algebra.hpp"
#include "bq/matrix.hpp"

namespace bq {

/// Right module over a bound quiver algebra, as a representation: a vector
/// space per vertex and, for each arrow a: s -> t, a matrix M_s -> M_t.
/// Copies share the underlying data.
class Representation {
public:
    Representation() = default;
    /// Validates shapes and that every relation acts as zero.
    Representation(AlgebraPtr a, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps,
                   std::string name = "");
    static Representation zero(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return d_->algebra; }
    const std::vector<std::size_t>& dims() const { return d_->dims; }
    std::size_t dim(std::size_t v) const { return d_->dims[v]; }
    std::size_t total_dim() const { return d_->total; }
    std::size_t vertex_count() const { return d_->dims.size(); }
    const Matrix& arrow_map(std::size_t a) const { return d_->maps[a]; }
    const std::vector<Matrix>& arrow_maps() const { return d_->maps; }
    bool is_zero() const { return d_->total == 0; }
    bool valid() const { return d_ != nullptr; }

    /// Action of a path, as a matrix M_source -> M_target.
    Matrix act(const Path& p) const;
    /// Action of the basis element b of the algebra (cached).
    const Matrix& act_basis(std::size_t b) const;

    const std::string& name() const { return d_->name; }
    Representation renamed(std::string name) const;

    /// Canonical serialization (algebra fingerprint, dims, matrices); equal
    /// keys mean equal representations.
    const std::string& key() const;

private:
    struct Data {
        AlgebraPtr algebra;
        std::vector<std::size_t> dims;
        std::vector<Matrix> maps;
        std::size_t total = 0;
        std::string name;
        mutable std::once_flag actions_once;
        mutable std::vector<Matrix> actions;
        mutable std::once_flag key_once;
        mutable std::string key;
    };
    std::shared_ptr<const Data> d_;
};

/// Homomorphism of representations, one matrix per vertex (target_v x source_v).
class ModuleMap {
public:
    ModuleMap() = default;
    /// Checks every naturality square.
    ModuleMap(Representation source, Representation target, std::vector<Matrix> components);
    static ModuleMap zero(const Representation& source, const Representation& target);
    static ModuleMap identity(const Representation& m);

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const Matrix& at(std::size_t v) const { return comps_[v]; }
    const std::vector<Matrix>& components() const { return comps_; }

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;
    /// Block-diagonal matrix over all vertices.
    Matrix total() const;

    friend ModuleMap operator*(const ModuleMap& g, const ModuleMap& f);  // g after f
    friend ModuleMap operator+(const ModuleMap& f, const ModuleMap& g);
    friend ModuleMap operator-(const ModuleMap& f, const ModuleMap& g);
    friend ModuleMap operator*(const Scalar& c, const ModuleMap& f);

private:
    ModuleMap(Representation s, Representation t, std::vector<Matrix> c, bool /*unchecked*/)
        : source_(std::move(s)), target_(std::move(t)), comps_(std::move(c))
    {
    }
    Representation source_;
    Representation target_;
    std::vector<Matrix> comps_;
};

bool same_algebra(const Representation& m, const Representation& n);

struct Submodule {
    Representation module;
    ModuleMap inclusion;
};

struct Quotient {
    Representation module;
    ModuleMap projection;
};

struct DirectSum {
    Representation sum;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const std::vector<Representation>& parts);
/// Convenience: the module of a direct sum with several copies.
Representation direct_sum_module(const std::vector<Representation>& parts);

/// Submodule with the given per-vertex bases (columns), which must be stable.
Submodule submodule_from_bases(const Representation& m, const std::vector<Matrix>& bases);
/// Smallest submodule containing the given per-vertex vectors.
Submodule generated_submodule(const Representation& m, const std::vector<Matrix>& generators);
/// Quotient by the submodule spanned by the given stable per-vertex bases.
Quotient quotient_by(const Representation& m, const std::vector<Matrix>& sub_bases);
Quotient quotient_by(const Submodule& s);
/// The map b: Q -> Y with b * q = h, for h vanishing on the kernel of q (q surjective).
ModuleMap factor_through_quotient(const ModuleMap& q, const ModuleMap& h);

/// Per-vertex bases of the image of f.
std::vector<Matrix> image_bases(const ModuleMap& f);
Submodule image(const ModuleMap& f);

struct KernelCokernel {
    Submodule kernel;
    Quotient cokernel;
};
KernelCokernel kernel_cokernel(const ModuleMap& f);
Submodule kernel(const ModuleMap& f);
Quotient cokernel(const ModuleMap& f);

Submodule radical(const Representation& m);
Submodule radical_power(const Representation& m, std::size_t k);
Submodule socle(const Representation& m);
Quotient top(const Representation& m);
/// Dimension vector of top(m).
std::vector<std::size_t> top_dims(const Representation& m);
std::vector<std::size_t> socle_dims(const Representation& m);
std::size_t loewy_length(const Representation& m);

Representation projective(const AlgebraPtr& a, std::size_t v);
Representation injective(const AlgebraPtr& a, std::size_t v);
Representation simple(const AlgebraPtr& a, std::size_t v);
/// e_v A / e_v J^k, named "e<v>A/e<v>J^k".
Representation projective_truncation(const AlgebraPtr& a, std::size_t v, std::size_t k);
/// The right ideal pA ⊆ e_{source p} A, named "<p>A".
Representation path_ideal(const AlgebraPtr& a, const Path& p);
/// The regular module A_A = ⊕ P(v).
Representation regular(const AlgebraPtr& a);
/// D(A) = ⊕ I(v).
Representation dual_regular(const AlgebraPtr& a);

struct StructuralModules {
    std::vector<Representation> projectives, injectives, simples;
};
StructuralModules structural_modules(const AlgebraPtr& a);

/// Coordinates of algebra element x ∈ e_u A e_w inside P(u)_w (basis corner(u, w)).
std::vector<Scalar> corner_coordinates(const Algebra& a, std::size_t u, std::size_t w, const SparseVec& x);

/// Basis of Hom_A(m, n).
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// Sum of the images of all maps from the generators into m.
Submodule trace_submodule(const std::vector<Representation>& generators, const Representation& m);

/// D(m) = Hom_K(m, K) as a right module over the opposite algebra.
Representation dualize(const Representation& m);
/// D(f): D(target) -> D(source).
ModuleMap dualize(const ModuleMap& f);

}  // namespace bq
