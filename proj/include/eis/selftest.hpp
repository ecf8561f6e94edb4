#pragma once

#include <string>
#include <vector>

namespace eis {

struct SelfTestResult {
    struct Check {
        std::string name;
        bool passed;
        std::string detail; // populated on failure
    };
    std::vector<Check> checks;
    bool all_passed() const {
        for (auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Runs the library invariant suite at desk scale. Exercises every module;
// any negative multiplicity, dimension or Laurent coefficient anywhere in
// the run fails the corresponding check.
SelfTestResult run_selftest();

} // namespace eis
