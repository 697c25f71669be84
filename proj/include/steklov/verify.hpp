#pragma once

#include <string>
#include <vector>

namespace steklov {

struct Check {
    std::string name;
    bool passed = false;
    double measured = 0.0;   // worst value seen
    double tolerance = 0.0;  // bound it is compared against
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool passed() const;
};

struct VerifyOptions {
    int max_mode = 8;
    int oracle_base = 40;  // oracle levels are base, 2*base, 4*base
};

/// spectral, crossings, extremal, surfaces, oracle
const std::vector<std::string>& suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts = {});

/// "all" expands to every suite.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts = {});

}  // namespace steklov
