#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace ccpb {

/// One named theorem/consistency check: |value - reference| <= tolerance.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    /// Advisory checks are reported but never fatal.
    bool advisory = false;
    std::string detail;

    static CheckResult make(std::string name, double value, double reference,
                            double tolerance, bool advisory = false,
                            std::string detail = {}) {
        CheckResult r;
        r.name = std::move(name);
        r.value = value;
        r.reference = reference;
        r.tolerance = tolerance;
        r.pass = std::isfinite(value) && std::abs(value - reference) <= tolerance;
        r.advisory = advisory;
        r.detail = std::move(detail);
        return r;
    }
};

struct DiagnosticsReport {
    std::vector<CheckResult> checks;

    bool all_pass(bool count_advisory = false) const {
        for (const CheckResult& c : checks) {
            if (!c.pass && (count_advisory || !c.advisory)) return false;
        }
        return true;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
};

} // namespace ccpb
