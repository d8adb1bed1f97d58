#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tubal {

struct CheckResult {
    std::string name;
    bool pass;
    double residual;  // worst observed value, compared against threshold
    double threshold;
};

/// Runs the full invariant suite at small sizes. perturb_target, when
/// non-empty, injects noise into the inputs of the named check so its
/// property genuinely fails (negative control for the harness).
std::vector<CheckResult> run_selftest(const std::string& perturb_target = "");

/// Prints one line per check; returns true iff all pass.
bool report_selftest(const std::vector<CheckResult>& results, std::ostream& out);

} // namespace tubal
