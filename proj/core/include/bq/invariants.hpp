#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bq/dimvalue.hpp"
#include "bq/homology.hpp"

namespace bq {

/// Length of the initial projective segment of the minimal injective
/// resolution (0 when I_0 is not projective). Infinite when the resolution
/// stays projective until it terminates or becomes periodic.
DimValue dominant_dimension(Context& ctx, const Representation& m);
/// Dominant dimension of D(m) over the opposite algebra.
DimValue codominant_dimension(Context& ctx, const Representation& m);
/// Minimum of the dominant dimensions of the indecomposable projectives.
DimValue algebra_dominant_dimension(Context& ctx, const AlgebraPtr& a);

DimValue projective_dimension(Context& ctx, const Representation& m);
DimValue injective_dimension(Context& ctx, const Representation& m);
/// Max projective dimension of the simples; Infinite needs a period certificate.
DimValue global_dimension(Context& ctx, const AlgebraPtr& a);

struct GorensteinDimensions {
    DimValue right;  // injdim A_A
    DimValue left;   // injdim _A A, computed as projdim D(A)_A
    bool gorenstein = false;
    /// The common value; only meaningful when gorenstein.
    std::size_t value() const { return right.value; }
};
GorensteinDimensions gorenstein_dimension(Context& ctx, const AlgebraPtr& a);

/// Certified Gorenstein dimension, or throws NotGorensteinCertified.
std::size_t certified_gorenstein_dimension(Context& ctx, const AlgebraPtr& a);

/// Ext^i(m, A) = 0 for 1 <= i <= g, where g is the Gorenstein dimension.
bool is_gorenstein_projective(Context& ctx, const Representation& m, std::size_t g);
bool is_gorenstein_projective(Context& ctx, const Representation& m);
/// Ext^i(D(A), m) = 0 for 1 <= i <= g.
bool is_gorenstein_injective(Context& ctx, const Representation& m, std::size_t g);

/// Least j with Ω^j(m) Gorenstein projective; cross-checked against
/// max{i : Ext^i(m, A) != 0}.
std::size_t gp_dimension(Context& ctx, const Representation& m, std::size_t g);
std::size_t gp_dimension(Context& ctx, const Representation& m);
std::size_t gi_dimension(Context& ctx, const Representation& m, std::size_t g);
std::size_t gi_dimension(Context& ctx, const Representation& m);

struct ProjInj {
    std::vector<std::size_t> vertices;  // e = Σ e_v
    Representation module;              // eA (right) or D(Af) (left, as a right module)
};
/// e with eA the minimal faithful projective-injective module; throws
/// DominantDimensionZero when A has dominant dimension 0.
ProjInj minimal_faithful_projinj(Context& ctx, const AlgebraPtr& a);
/// f with Af the minimal faithful projective-injective left module.
ProjInj minimal_faithful_projinj_left(Context& ctx, const AlgebraPtr& a);

/// m minus its indecomposable projective summands.
Representation nonprojective_part(const Representation& m, DecomposeOptions opt = {});
/// m minus its indecomposable injective summands.
Representation noninjective_part(const Representation& m, DecomposeOptions opt = {});

/// P, I, S, rad P, P/soc, truncations e_vA/e_vJ^k and Ω^{±k} of simples for
/// k <= depth, without duplicates.
std::vector<Representation> base_test_set(Context& ctx, const AlgebraPtr& a, std::size_t depth);
/// Adds m unless a module with the same key is already present.
void add_unique(std::vector<Representation>& set, const Representation& m);

struct AuslanderGorenstein {
    std::size_t r = 0;  // dominant = Gorenstein dimension
};
/// Certifies domdim A = Gordim A = r >= 2, or throws NotAuslanderGorenstein.
AuslanderGorenstein certify_auslander_gorenstein(Context& ctx, const AlgebraPtr& a);

struct DomGprojRow {
    std::string module;
    DimValue domdim;
    DimValue codomdim;
    std::size_t gp_dim = 0;
    std::size_t gi_dim = 0;
    bool agree = false;
};
struct DomGprojReport {
    std::size_t r = 0;
    std::vector<DomGprojRow> rows;
    bool all_agree = false;
};
/// Dom_{r-j} = GProj_j and Codom_{r-j} = GInj_j for 0 <= j <= r, member by member.
DomGprojReport verify_dom_gproj(Context& ctx, const AlgebraPtr& a, const std::vector<Representation>& testset);

struct InvariantReport {
    DimValue domdim;         // of A_A
    DimValue domdim_left;    // of _A A, via the opposite algebra
    DimValue gldim;
    GorensteinDimensions gordim;
    std::optional<ProjInj> e;  // absent when domdim is 0
    std::optional<ProjInj> f;
};
InvariantReport analyze_algebra(Context& ctx, const AlgebraPtr& a);

}  // namespace bq
