#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bq/invariants.hpp"

namespace bq {

struct OmegaApproximation {
    Representation core;                   // Ω^n(Ω^{-n}(m))
    std::vector<Representation> summands;  // indecomposable summands of core, with repetition
    Representation projective_part;        // projective cover of m
};

/// Source and projective part of the right Ω^n(mod A)-approximation
/// core ⊕ P -> m. The map itself is not constructed. Throws ProjectiveInput.
OmegaApproximation omega_approximation(Context& ctx, const Representation& m, std::size_t n);

struct RelativeARResult {
    Representation input;
    std::size_t level = 0;
    Representation translate;    // τ_C(m)
    std::size_t ext_dim = 0;     // dim Ext^1(m, τ_C m)
    bool determinate = false;    // middle term built (ext_dim == 1)
    std::optional<Representation> middle;
    std::vector<Representation> middle_summands;
    bool nonsplit = false;
    bool ends_in_subcategory = false;  // both end terms in Dom_level
};

/// The unique indecomposable summand of Ω^l(Ω^{-l}(τ m)) with Ext^1(m, -) != 0.
/// Throws InvalidParameters (m not indecomposable), NotInSubcategory
/// (domdim m < level), ExtProjective (no such summand), UniquenessViolation
/// (several non-isomorphic ones).
RelativeARResult relative_ar_translate(Context& ctx, const Representation& m, std::size_t level);

/// relative_ar_translate plus the middle term of 0 -> τ_C m -> E -> m -> 0
/// when Ext^1(m, τ_C m) is one-dimensional.
RelativeARResult relative_ar_sequence(Context& ctx, const Representation& m, std::size_t level);

}  // namespace bq
