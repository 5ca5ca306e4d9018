#pragma once

#include "blockspec/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace blockspec {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    unsigned digits = 60;
    std::uint64_t seed = 20240808;
    int samples = 100000;
};

/// Runs the full acceptance battery, printing one pass/fail line per
/// criterion to `out` as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const VerifyOptions& opt = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace blockspec
