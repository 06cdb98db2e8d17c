#pragma once

#include <vector>

#include "ccpb/csv.hpp"
#include "ccpb/grid.hpp"
#include "ccpb/ion_system.hpp"
#include "ccpb/limits.hpp"

namespace ccpb {

/// "x,phi" table of a nodal solution.
CsvTable solution_table(const Field& field, int precision);

/// "eps,phi0,phi1,iters,c_eps" run-summary table; rows added by the caller.
CsvTable summary_table(int precision);

/// "gamma,t,c,t_minus_c,c_star_neutral,c_star_bracket" rows for the given
/// gammas (limits and sweeps share this layout). The bracket column is NaN
/// for species patterns other than a1 = b1 = 1, b2 = 2. Returns the sweep
/// analysis alongside.
CsvTable limit_table(const IonSystem& sys, double phi_plus,
                     const std::vector<double>& gammas, int precision,
                     SweepTable* sweep_out = nullptr);

} // namespace ccpb
