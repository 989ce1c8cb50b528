#pragma once

#include <string>
#include <vector>

#include "cmaxwell/geometry.hpp"

namespace cmaxwell {

struct Check {
    std::string name;
    double value = 0;  // residual or error measure; exact checks report 0/1
    double tol = 0;
    bool passed = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool passed() const;
};

struct SuiteOptions {
    // Applied to every radial/geometry evaluation (sensitivity runs).
    double gamma313_sign = 1.0;
};

std::vector<std::string> suite_names();  // algebra geometry radial modes spectrum

// Runs one named suite, or every suite for "all" (in parallel). Throws
// OutOfRange for unknown names.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt = {});

}  // namespace cmaxwell
