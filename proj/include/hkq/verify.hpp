#pragma once

// Named verification suites behind `hkq verify`. Each suite runs a batch of
// exact checks and returns per-check results; report-only probes come back
// as Info rows and never fail a run.

#include "hkq/rational.hpp"

#include <string>
#include <vector>

namespace hkq {

enum class CheckStatus : std::uint8_t { Pass, Fail, Info };

struct CheckResult {
    std::string label;
    CheckStatus status;
    std::string detail;  // witness on failure, summary otherwise
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

struct VerifyBounds {
    int d_max = 0;   // 0 = suite default
    long p_max = 0;
    int n_max = 0;
};

// Suites: identities, ehrhart, monotone-d, monotone-p, parity, convergence,
// appendix, volumes, kreweras, all.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyBounds& bounds = {});
std::vector<SuiteReport> run_all_suites(const VerifyBounds& bounds = {});

// Observed maxima of (e_HK(p,d) - gm_limit(d)) * p^2 over odd p <= 999,
// frozen as regression goldens for d = 1..8.
Rational convergence_golden_max(int d);

}  // namespace hkq
