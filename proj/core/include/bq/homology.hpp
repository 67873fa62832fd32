#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bq/decompose.hpp"
#include "bq/dimvalue.hpp"
#include "bq/module.hpp"

namespace bq {

/// ⊕ P(v) over the listed vertices, in that order.
Representation projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);
/// ⊕ I(v) over the listed vertices, in that order.
Representation injective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);

/// Map ⊕_s P(src_s) -> ⊕_r P(tgt_r) sending the generator of summand s to
/// Σ_r images[s][r], where images[s][r] ∈ e_{tgt_r} A e_{src_s}.
ModuleMap map_between_projectives(const AlgebraPtr& a, const std::vector<std::size_t>& src,
                                  const std::vector<std::size_t>& tgt,
                                  const std::vector<std::vector<SparseVec>>& images);

/// Generator images of a map between sums of projectives (inverse of the above).
std::vector<std::vector<SparseVec>> generator_images(const ModuleMap& f, const std::vector<std::size_t>& src,
                                                     const std::vector<std::size_t>& tgt);

struct Cover {
    ModuleMap map;                      // ⊕ P(v) -> m, surjective
    std::vector<std::size_t> vertices;  // one entry per summand
};

/// Minimal projective cover; generators complement the radical vertex by vertex.
Cover projective_cover(const Representation& m);

struct Envelope {
    ModuleMap map;                      // m -> ⊕ I(v), injective
    std::vector<std::size_t> vertices;
};

Envelope injective_envelope(const Representation& m);

enum class Side { projective, injective };

struct ResolutionStep {
    std::vector<std::size_t> vertices;  // summands of the term
    Representation term;                // P_k or I_k
    ModuleMap map;                      // projective: P_k -> Ω^k; injective: Ω^{-k} -> I_k
    Representation next;                // Ω^{k+1} or Ω^{-(k+1)}
    ModuleMap link;                     // projective: Ω^{k+1} -> P_k; injective: I_k -> Ω^{-(k+1)}
};

struct Resolution {
    Side side = Side::projective;
    Representation module;
    std::vector<ResolutionStep> steps;
    bool terminated = false;  // the last recorded syzygy is zero
    std::size_t bound = 0;

    /// Ω^k (or Ω^{-k}); k = 0 is the module itself.
    const Representation& syzygy(std::size_t k) const { return k == 0 ? module : steps[k - 1].next; }
    /// Number of recorded terms.
    std::size_t length() const { return steps.size(); }
    /// d_k: P_k -> P_{k-1} for k >= 1 (projective side), I_{k-1} -> I_k dually.
    ModuleMap differential(std::size_t k) const;
};

/// Session state: search bound, seed and the resolution memo. The memo is
/// append-only; concurrent use is safe.
class Context {
public:
    explicit Context(std::size_t bound = 64, unsigned seed = 0) : bound_(bound), seed_(seed) {}

    std::size_t bound() const { return bound_; }
    unsigned seed() const { return seed_; }
    DecomposeOptions decompose_options() const { return {seed_, 64}; }

    /// Minimal projective resolution with at least `upto` steps unless it terminates earlier.
    Resolution projective_resolution(const Representation& m, std::size_t upto);
    Resolution injective_resolution(const Representation& m, std::size_t upto);

    Representation syzygy(const Representation& m, std::size_t k);
    Representation cosyzygy(const Representation& m, std::size_t k);

private:
    std::size_t bound_;
    unsigned seed_;
    std::recursive_mutex mutex_;
    std::map<std::string, Resolution> memo_;
};

Resolution min_projective_resolution(const Representation& m, std::size_t upto);
Resolution min_injective_resolution(const Representation& m, std::size_t upto);

struct ExtResult {
    std::size_t degree = 0;
    std::size_t dimension = 0;
    std::size_t projective_side = 0;
    std::size_t injective_side = 0;
};

/// dim Ext^i(m, n) from the projective resolution of m only.
std::size_t ext_dimension(Context& ctx, const Representation& m, const Representation& n, std::size_t i);
/// dim Ext^i(m, n) from the injective resolution of n only.
std::size_t ext_dimension_injective(Context& ctx, const Representation& m, const Representation& n, std::size_t i);
/// Both sides; throws InternalInconsistency if they disagree.
ExtResult ext(Context& ctx, const Representation& m, const Representation& n, std::size_t i);

/// Degree-one extension classes, as cocycles Ω(m) -> n modulo restrictions from P_0.
struct Ext1Classes {
    Cover cover;                    // P_0 -> m
    ModuleMap syzygy_inclusion;     // Ω(m) -> P_0
    std::vector<ModuleMap> cocycles;  // basis of a complement, maps Ω(m) -> n
};
Ext1Classes ext1_classes(const Representation& m, const Representation& n);

struct Extension {
    Representation middle;
    ModuleMap left;   // n -> middle
    ModuleMap right;  // middle -> m
};
/// Pushout of 0 -> Ω(m) -> P_0 -> m -> 0 along the cocycle.
Extension extension_from_cocycle(const Ext1Classes& c, const ModuleMap& cocycle);

/// Auslander-Reiten translate D Tr and its inverse Tr D.
Representation ar_translate(const Representation& m);
Representation ar_translate_inverse(const Representation& m);

struct Periodicity {
    std::size_t onset = 0;
    std::size_t period = 0;
    ModuleMap iso;  // Ω^onset -> Ω^(onset + period)
};
/// Least k <= bound with Ω^k(m) ≅ Ω^j(m) for some j < k.
std::optional<Periodicity> syzygy_periodicity(Context& ctx, const Representation& m, std::size_t bound);
std::optional<Periodicity> cosyzygy_periodicity(Context& ctx, const Representation& m, std::size_t bound);

/// m is a generator-cogenerator: every P(i) and I(i) is a summand.
bool is_generator_cogenerator(const Representation& m, DecomposeOptions opt = {});

/// inf{i >= 1 : Ext^i(m, m) != 0} + 1, or AtLeast(bound + 1).
DimValue mueller_domdim(Context& ctx, const Representation& m);

/// Dominant (= Gorenstein) dimension of End(A ⊕ n) for symmetric A and
/// periodic n, or throws NotApplicable.
std::size_t gendo_gorenstein_check(Context& ctx, const Representation& n);

}  // namespace bq
