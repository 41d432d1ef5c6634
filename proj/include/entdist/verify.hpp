#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entdist/exec.hpp"

namespace entdist {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int trials = 1000;                  // base sample count; stated counts scale by trials/1000
    std::uint64_t seed = 20160105;      // default base seed
    std::optional<double> tol;          // overrides golden tolerances and residual floors
    ExecPolicy policy = ExecPolicy::Parallel;
};

// Suite membership by criterion id (1..16).
std::vector<int> paper_suite();
std::vector<int> property_suite();
std::vector<int> all_criteria();

CriterionResult run_criterion(int id, const VerifyOptions& opts);
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyOptions& opts);

} // namespace entdist
