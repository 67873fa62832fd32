#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bq/algebra.hpp"

namespace bq {

enum class KupischShape { cyclic, linear };

struct KupischSeries {
    std::vector<std::size_t> entries;
    KupischShape shape = KupischShape::cyclic;
};

/// Nakayama algebra with the given Kupisch series; vertices "0".."n-1",
/// arrows a<i>: i -> i+1 (mod n for the cyclic shape).
AlgebraPtr nakayama_from_kupisch(const KupischSeries& k);

/// B(n, λ_1..λ_{n-2}): vertices "1".."n", arrows a<i>: i -> i+1 and
/// b<i>: i+1 -> i. Each λ must be 0 or 1.
AlgebraPtr bnlambda_family(std::size_t n, const std::vector<int>& lambdas);

/// The symmetric algebra on the same quiver as B(m, ...) with loops
/// identified at interior vertices (b<i-1>a<i-1> = a<i>b<i>).
AlgebraPtr symmetric_chain_family(std::size_t m);

/// One vertex, loops x and y, relations x^2, y^2, xy - yx.
AlgebraPtr klein_four_like();

}  // namespace bq
