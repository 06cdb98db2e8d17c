#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ccpb/diagnostics.hpp"

namespace ccpb {

struct GoldenEntry {
    double reference;
    double tolerance;
};

/// Published reference values checked by the verify suites.
using GoldenMap = std::map<std::string, GoldenEntry>;

GoldenMap default_goldens();

/// Overrides entries of `goldens` from a JSON object
/// {"check-name": {"reference": x, "tolerance": y}, ...}. Unknown names are
/// errors.
void apply_golden_overrides(GoldenMap& goldens, const std::string& json_text);

struct VerifyOptions {
    GoldenMap goldens = default_goldens();
    int workers = 0;
    /// Run only the fast algebraic suites (no table-scale solves).
    bool quick = false;
};

/// Names of every check the default verify run would perform.
std::vector<std::string> verify_inventory();

/// Runs the invariant suites (solver, limits, envelopes, energies). Advisory
/// checks are reported but do not fail the report.
DiagnosticsReport run_verify(const VerifyOptions& opts, std::ostream* log = nullptr);

} // namespace ccpb
