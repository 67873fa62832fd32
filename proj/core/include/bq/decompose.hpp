#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bq/module.hpp"

namespace bq {

struct DecompositionResult {
    struct Part {
        Representation module;
        std::size_t multiplicity = 0;
        /// One split inclusion into the input per copy.
        std::vector<ModuleMap> inclusions;
        std::vector<ModuleMap> projections;
    };
    std::vector<Part> parts;

    /// All indecomposable summands with repetition, in part order.
    std::vector<Representation> summands() const;
    std::size_t summand_count() const;
};

struct DecomposeOptions {
    unsigned seed = 0;
    std::size_t budget = 64;
};

/// Krull-Schmidt decomposition by Fitting splitting. Throws
/// DecompositionInconclusive when the search budget runs out.
DecompositionResult decompose(const Representation& m, DecomposeOptions opt = {});

/// End(m) is local, certified by the trace form (radical of codimension 1).
bool has_local_endomorphism_ring(const Representation& m);

struct IsoResult {
    enum class Kind { iso, not_iso, inconclusive };
    Kind kind = Kind::inconclusive;
    std::optional<ModuleMap> map;  // set when iso
    std::string reason;
};

IsoResult iso_test(const Representation& m, const Representation& n, DecomposeOptions opt = {});
/// iso_test collapsed to a bool; Inconclusive throws DecompositionInconclusive.
bool isomorphic(const Representation& m, const Representation& n, DecomposeOptions opt = {});

/// Whether x is isomorphic to a direct summand of m (x indecomposable).
bool has_summand(const DecompositionResult& m, const Representation& x, DecomposeOptions opt = {});

}  // namespace bq
