// One line per acceptance criterion; exit status 0 iff every criterion passes
// within its time limit.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "bqcli/verify.hpp"

int main(int argc, char** argv)
{
    std::size_t bound = 64;
    unsigned seed = 0;
    if (argc > 1)
        bound = std::strtoul(argv[1], nullptr, 10);
    if (argc > 2)
        seed = static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10));
    constexpr double kPerCriterion = 30.0;
    constexpr double kSuite = 300.0;

    bool all = true;
    double total = 0;
    for (const auto& id : bq::cli::verify_ids()) {
        const auto start = std::chrono::steady_clock::now();
        auto r = bq::cli::verify_paper_example(id, bound, seed);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        const bool ok = r.passed() && secs < kPerCriterion;
        all = all && ok;
        std::printf("criterion %zu [%s]: %s (%zu checks, %.2fs) %s\n", r.criterion, id.c_str(), ok ? "PASS" : "FAIL",
                    r.checks.size(), secs, r.title.c_str());
        for (const auto* c : r.failures())
            std::printf("    mismatch: %s: expected %s, got %s\n", c->name.c_str(), c->expected.c_str(),
                        c->actual.c_str());
        if (secs >= kPerCriterion)
            std::printf("    over the %.0fs limit\n", kPerCriterion);
    }
    const bool in_time = total < kSuite;
    std::printf("suite: %s (%.2fs total, bound %zu, seed %u)\n", all && in_time ? "PASS" : "FAIL", total, bound, seed);
    return all && in_time ? 0 : 1;
}
