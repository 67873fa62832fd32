#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bqcli/dsl.hpp"
#include "bqcli/report.hpp"

namespace bq::cli {

struct RunOptions {
    std::size_t bound = 64;
    unsigned seed = 0;
    std::vector<std::string> order;  // overrides the order given in the input
    bool all_orders = false;
    std::size_t level = 1;
    std::vector<ModuleExpr> modules;  // resolve, relar
    std::size_t steps = 6;            // resolution terms printed by resolve
};

/// Readable label: P(v), I(v), S(v) or trunc(v, k) when m is isomorphic to
/// one of those, otherwise its name.
std::string module_label(const Representation& m);
Json module_json(const Representation& m);

/// Canonical spec text and construction of the input.
Json input_echo(const LoadedAlgebra& la);

Json run_analyze(const LoadedAlgebra& la, const RunOptions& o);
Json run_resolve(const LoadedAlgebra& la, const RunOptions& o);
Json run_stratify(const LoadedAlgebra& la, const RunOptions& o);
Json run_tilting(const LoadedAlgebra& la, const RunOptions& o);
Json run_relar(const LoadedAlgebra& la, const RunOptions& o);

}  // namespace bq::cli
