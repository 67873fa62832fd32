#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bq/invariants.hpp"

namespace bq {

enum class Family { standard, proper_standard, costandard, proper_costandard };
const char* family_name(Family f);

/// Standard-module data for an order on the vertices. order[p] is the vertex
/// at position p; later positions are higher.
struct StratData {
    AlgebraPtr algebra;
    std::vector<std::size_t> order;
    // Indexed by vertex.
    std::vector<Representation> delta, delta_bar, nabla, nabla_bar;
    // Standard and proper standard modules of the opposite algebra, same order.
    std::vector<Representation> op_delta, op_delta_bar;

    // Filled by classify_stratification.
    bool classified = false;
    bool regular_in_f_delta = false;         // A ∈ F(Δ)
    bool regular_in_f_delta_bar = false;     // A ∈ F(Δ̄): standardly stratified as defined here
    bool op_regular_in_f_delta = false;      // A^op ∈ F(Δ^o)
    bool op_regular_in_f_delta_bar = false;  // A^op ∈ F(Δ̄^o)
    bool standardly_stratified = false;      // = regular_in_f_delta_bar
    bool properly_stratified = false;        // standardly stratified on both sides
    bool quasi_hereditary = false;           // standardly stratified, finite global dimension
    bool schurian = false;                   // [Δ(i) : S(i)] = 1 for all i
    std::optional<DimValue> gldim;

    bool duality_asserted = false;

    /// Position of a vertex in the order.
    std::size_t position(std::size_t v) const;
    const std::vector<Representation>& family(Family f) const;
    /// Order as vertex ids, lowest first.
    std::vector<std::string> order_ids() const;
};

/// Parses vertex ids into an order; throws InvalidParameters unless bijective.
std::vector<std::size_t> order_from_ids(const Algebra& a, const std::vector<std::string>& ids);

/// Δ, Δ̄, ∇, ∇̄ for the order (flags left unset).
StratData standard_modules(const AlgebraPtr& a, const std::vector<std::size_t>& order);

struct FiltrationResult {
    bool filtered = false;
    std::vector<std::size_t> multiplicities;  // by vertex, meaningful when filtered
};

/// Trace recursion from the top of the order. At vertex v the trace U of P(v)
/// in the current quotient must satisfy dim U = k · dim Δ(v) with k = dim top(U)
/// (for Δ) or k = dim U_v (for Δ̄); then U is filtered by that module.
/// Costandard families are tested through the dual over the opposite algebra.
FiltrationResult filtration_test(const Representation& m, Family f, const StratData& s);

/// Flags from filtration tests of A and A^op plus the global dimension.
StratData classify_stratification(Context& ctx, const AlgebraPtr& a, const std::vector<std::size_t>& order);

/// classify_stratification over all orders in lexicographic order; throws
/// TooManyVertices above 8 vertices.
std::vector<StratData> search_orders(Context& ctx, const AlgebraPtr& a);

/// Necessary condition for a simple-preserving duality; throws
/// PreconditionFailed when the Cartan matrix is not symmetric.
void check_duality_assertion(const Algebra& a);

struct TiltingModule {
    Representation module;                // basic, summands in vertex order of construction
    std::vector<Representation> summands;
    DimValue projdim;
    DimValue injdim;
    std::string route;                    // "cosyzygy" or "universal extensions"
    std::optional<std::size_t> cosyzygy_degree;  // i for T = eA ⊕ Ω^{-i}((1-e)A)
};

/// Ringel's construction: start from Δ(i) and add universal extensions by
/// lower standard modules until Ext¹(Δ(j), -) vanishes.
TiltingModule characteristic_tilting_by_extensions(Context& ctx, const StratData& s);

/// eA ⊕ Ω^{-i}((1-e)A) for an Auslander-Gorenstein algebra, for the least
/// i whose summands all lie in F(Δ) ∩ F(∇̄); nullopt when none does.
std::optional<TiltingModule> characteristic_tilting_from_cosyzygies(Context& ctx, const StratData& s);

/// Characteristic tilting module, add T = F(Δ) ∩ F(∇̄). Uses the cosyzygy
/// candidate on certified Auslander-Gorenstein algebras, otherwise Ringel's
/// construction. Throws NotStratified unless A ∈ F(Δ), CertificateFailure if
/// the certificate does not hold.
TiltingModule characteristic_tilting(Context& ctx, const StratData& s);

/// Characteristic cotilting module, add C = F(Δ̄) ∩ F(∇), via the opposite algebra.
TiltingModule characteristic_cotilting(Context& ctx, const StratData& s);

/// eA ⊕ Ω^{-i}((1-e)A), the basic tilting-cotilting candidate of an
/// Auslander-Gorenstein algebra.
Representation cosyzygy_tilting_candidate(Context& ctx, const AlgebraPtr& a, std::size_t i,
                                          std::vector<Representation>* summands = nullptr);

struct TiltingReport {
    DimValue projdim;
    bool self_orthogonal = false;
    std::size_t coresolution_length = 0;  // 0 -> A -> T^0 -> ... -> T^len -> 0
    bool cotilting = false;
    DimValue injdim;
    std::string cotilting_failure;  // empty when cotilting
};

/// Tilting conditions (finite projdim, Ext^k(T,T) = 0 for 1 <= k <= projdim,
/// add(T)-coresolution of A); throws NotTilting naming the first failure.
/// Cotilting is reported, and on certified Gorenstein algebras tilting without
/// cotilting throws InternalInconsistency.
TiltingReport verify_tilting(Context& ctx, const Representation& t);

/// Distinct indecomposable summands, up to isomorphism.
std::vector<Representation> basic_summands(const Representation& m, DecomposeOptions opt = {});
/// Every indecomposable summand of m is isomorphic to a summand of t.
bool in_add(const Representation& m, const std::vector<Representation>& t_summands, DecomposeOptions opt = {});

enum class PerpSide { left, right };
/// left: Ext^k(m, t) = 0, right: Ext^k(t, m) = 0, for 1 <= k <= depth.
bool perp_membership(Context& ctx, const Representation& m, const Representation& t, PerpSide side, std::size_t depth);

enum class Category { f_delta, f_delta_bar, f_nabla, f_nabla_bar, dom, codom, proj, inj, gproj, ginj, left_perp_t, right_perp_t };

/// A full subcategory given by membership: F(...) families, Dom_k, Codom_k,
/// Proj_k, Inj_k, GProj_k, GInj_k, ⊥T and T⊥.
struct CategoryRef {
    Category cat;
    std::size_t k = 0;
    std::string label() const;
};

struct CategoryContext {
    Context* ctx = nullptr;
    const StratData* strat = nullptr;
    std::optional<std::size_t> gorenstein_dimension;  // needed by gproj and ginj
    std::optional<Representation> tilting;             // needed by the perpendicular categories
    std::size_t perp_depth = 0;
};

bool is_member(const CategoryContext& c, const Representation& m, const CategoryRef& cat);

struct CategoryComparison {
    std::string left, right;
    std::size_t checked = 0;
    std::vector<std::string> mismatches;  // modules in exactly one of the two
    bool equal() const { return mismatches.empty(); }
};

/// Extensional comparison of two subcategories over a test set.
CategoryComparison compare_categories(const CategoryContext& c, const std::vector<Representation>& testset,
                                      const CategoryRef& a, const CategoryRef& b);
/// Every test module in a lies in b.
CategoryComparison compare_inclusion(const CategoryContext& c, const std::vector<Representation>& testset,
                                     const CategoryRef& a, const CategoryRef& b);

/// Base test set plus all Δ, Δ̄, ∇, ∇̄ and the given tilting summands.
std::vector<Representation> canonical_test_set(Context& ctx, const StratData& s, std::size_t depth,
                                               const std::vector<Representation>& extra = {});

struct MainEquivalenceReport {
    std::size_t r = 0;  // Gorenstein = dominant dimension
    std::size_t i = 0;  // projdim of the characteristic tilting module
    bool tilting_is_cosyzygy = false;   // T ≅ eA ⊕ Ω^{-i}((1-e)A)
    bool standard_dimensions = false;   // domdim Δ(x) >= r-i, codomdim ∇̄(x) >= i
    bool inclusions = false;            // F(Δ) ⊆ Dom_{r-i}, F(∇̄) ⊆ Codom_i
    bool equalities = false;            // Proj_i = F(Δ), Codom_i = F(∇̄)
    std::vector<CategoryComparison> comparisons;
    bool consistent() const
    {
        return tilting_is_cosyzygy == standard_dimensions && standard_dimensions == inclusions &&
               inclusions == equalities;
    }
};

/// Evaluates the four equivalent conditions over the test set. Throws
/// NotApplicable unless A is Auslander-Gorenstein with A ∈ F(Δ).
MainEquivalenceReport verify_main_equivalences(Context& ctx, const StratData& s, const std::vector<Representation>& testset);

struct DualityIdentityReport {
    std::size_t m = 0;         // projdim of the characteristic tilting module
    std::size_t gordim = 0;
    bool gordim_is_2m = false;
    bool tilting_is_cotilting = false;
    std::vector<CategoryComparison> comparisons;  // F(Δ̄)=Dom_m, Dom_m=GProj_m, F(Δ)=Proj_m, F(∇̄)=Codom_m, Codom_m=GInj_m, F(∇)=Inj_m
    bool all_hold() const;
};

/// Identities for properly stratified Auslander-Gorenstein algebras with an
/// asserted duality and tilting = cotilting. Throws NotApplicable otherwise.
DualityIdentityReport verify_duality_identities(Context& ctx, const StratData& s, const std::vector<Representation>& testset);

struct GorensteinTiltingConsistency {
    bool properly_stratified = false;
    bool gorenstein = false;
    bool tilting_is_cotilting = false;
    bool consistent() const { return !properly_stratified || gorenstein == tilting_is_cotilting; }
};
/// Empirical check that Gorenstein agrees with tilting = cotilting on a
/// properly stratified algebra; never used as an assumption elsewhere.
GorensteinTiltingConsistency gorenstein_tilting_consistency(Context& ctx, const StratData& s);

}  // namespace bq
