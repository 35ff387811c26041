#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rigidwitt {

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    std::uint64_t seed = 20240611;
    int samples = 200;      ///< per dimension in the GP_3 table
    std::ostream* log = nullptr;
};

/// Names accepted by run_suite: "acceptance" (all criteria), "1".."8", and the aliases
/// listed in the README.
std::vector<std::string> suite_names();

/// Runs the named suite; criteria appear in fixed order regardless of timing.
std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& opts);

std::string format_result(const CriterionResult& r);

}  // namespace rigidwitt
