#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "motivecalc/motive.hpp"

namespace motivecalc {

struct VerifyOptions {
    long g = 0;       // 0 = suite default
    long N = 0;       // 0 = suite default
    long trials = 0;  // 0 = suite default
    std::uint64_t seed = 0;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    long checks = 0;
    std::string detail;  // counterexample or summary note
};

// Registered property suites, in a fixed order.
std::vector<std::string> suite_names();

// Runs one suite; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

}  // namespace motivecalc
