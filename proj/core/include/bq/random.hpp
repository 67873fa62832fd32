#pragma once

#include <cstdint>
#include <random>

namespace bq {

/// Seeded generator for the small-integer searches. Uses the engine output
/// directly (the engine sequence is fixed by the standard; library
/// distributions are not), so results are identical across platforms.
class SmallIntRng {
public:
    explicit SmallIntRng(std::uint64_t seed) : engine_(seed) {}
    long next(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bq
