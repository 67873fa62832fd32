#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bqcli/report.hpp"

namespace bq::cli {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyResult {
    std::string id;
    std::size_t criterion = 0;
    std::string title;
    std::vector<Check> checks;
    bool passed() const;
    std::vector<const Check*> failures() const;
};

/// The primary id of every acceptance criterion, in criterion order.
const std::vector<std::string>& verify_ids();
/// Primary ids plus sub-ids that run one instance (ex3.1-n3, thm4.7-n2, ...).
std::vector<std::string> all_verify_ids();

/// Runs the pipeline for one id and compares against the recorded values.
/// Throws UnknownExampleId.
VerifyResult verify_paper_example(const std::string& id, std::size_t bound = 64, unsigned seed = 0);

Json verify_json(const VerifyResult& r);

}  // namespace bq::cli
