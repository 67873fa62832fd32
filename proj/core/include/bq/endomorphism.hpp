#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bq/decompose.hpp"

namespace bq {

struct EndomorphismAlgebra {
    AlgebraPtr algebra;                 // B with vertex "k" for summands[k-1]
    std::vector<Representation> summands;
    /// Image of each arrow i -> j, a radical map M_j -> M_i.
    std::vector<ModuleMap> arrow_maps;
};

/// Spanning set of rad End(t) for t indecomposable with End(t)/rad = Q:
/// φ - (tr φ / dim t)·id over a basis of End(t).
std::vector<ModuleMap> radical_endomorphisms(const Representation& t);

/// Basic endomorphism algebra End(M_1 ⊕ ... ⊕ M_t) of pairwise non-isomorphic
/// indecomposables, presented by quiver and relations. Paths compose as maps:
/// a path i -> j is an element of Hom(M_j, M_i), and p·q = p ∘ q. Requires
/// End(M_k)/rad = Q for every k.
EndomorphismAlgebra endomorphism_algebra(const std::vector<Representation>& summands, std::string name = "");

/// Decomposes m and presents End of its basic part.
EndomorphismAlgebra endomorphism_algebra_of(const Representation& m, DecomposeOptions opt = {}, std::string name = "");

/// Quiver with relations of End(A ⊕ ⊕_{i ∈ V} S_i) for a symmetric A whose
/// projectives have Loewy length at least three: one vertex p<i> and arrows
/// alpha<i>: i -> p<i>, beta<i>: p<i> -> i per chosen vertex, with γ·alpha = 0,
/// beta·γ = 0 for arrows γ, beta·alpha = 0 and alpha·beta = δ_i, the socle of
/// P(i). Throws PreconditionFailed; the result has dimension dim A + 3|V|.
AlgebraPtr endo_quiver_construction(const AlgebraPtr& a, const std::vector<std::string>& socle_vertices);

/// A ⊕ ⊕_{i ∈ V} S_i.
Representation regular_plus_simples(const AlgebraPtr& a, const std::vector<std::string>& vertices);

}  // namespace bq
