#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ccpb/fem.hpp"
#include "ccpb/grid.hpp"
#include "ccpb/ion_system.hpp"

namespace ccpb {

enum class Model { ccpb, pb };

struct SolverConfig {
    /// Relaxation factor s in (0,1). 0 means auto: clamp(relax_C * eps^2,
    /// 1e-6, 0.9).
    double relax_s = 0.0;
    double relax_C = 0.5;
    /// Stopping tolerance on ||(phi_{m+1} - phi_m)/s||_inf.
    double tol = 1e-6;
    long max_iter = 2'000'000;
    enum class Init { zero, linear } init = Init::linear;
    /// Keep the per-iteration residual-integral history in the report.
    bool record_residuals = true;
};

double effective_relax_s(const SolverConfig& cfg, double eps);

struct SolveReport {
    explicit SolveReport(Field f) : field(std::move(f)) {}

    Field field;
    long iterations = 0;
    double final_delta_sup = 0.0;
    /// int R(phi_m) dx per iteration (discrete residual of the nonlinear
    /// system summed over all equations; contracts by exactly (1-s) for the
    /// electroneutral CCPB model).
    std::vector<double> residual_integrals;
    /// Median over interior nodes of the first-integral expression
    /// (eps^2/2) phi'^2 - sum_k alpha_k e^{a_k phi}/int e^{a_k phi}
    ///                  - sum_l beta_l e^{-b_l phi}/int e^{-b_l phi}.
    double first_integral_constant = 0.0;
    bool converged = false;
    bool diverged = false;
    std::string message;
};

/// Right-hand side of the nonlocal CCPB equation at the given field.
std::vector<double> ccpb_rhs(const Field& field, const IonSystem& sys);

/// Right-hand side of the classical PB equation, (1/2) f'(phi).
std::vector<double> pb_rhs(const Field& field, const IonSystem& sys);

/// One convex-iteration step: solve eps^2 phi_{m+1/2}'' = rhs(phi_m) with the
/// Robin/Dirichlet boundary conditions, then blend
/// s phi_{m+1/2} + (1-s) phi_m.
Field convex_step(const Field& field, const IonSystem& sys, const BoundaryData& bd,
                  double eps, const SolverConfig& cfg, Model model);

/// Fixed-point iteration of convex_step until the stopping rule or max_iter.
SolveReport solve(const IonSystem& sys, const BoundaryData& bd, double eps,
                  std::shared_ptr<const Grid> grid, const SolverConfig& cfg,
                  Model model);

/// Same iteration started from a caller-supplied field.
SolveReport solve_from(Field initial, const IonSystem& sys, const BoundaryData& bd,
                       double eps, const SolverConfig& cfg, Model model);

/// Runs solve from n_starts different initial fields (zero, linear
/// interpolant, +-0.5 constants, one seeded random bounded field) and returns
/// the max pairwise sup distance between the converged solutions. Throws if
/// any start fails to converge.
double uniqueness_probe(const IonSystem& sys, const BoundaryData& bd, double eps,
                        std::shared_ptr<const Grid> grid, const SolverConfig& cfg,
                        Model model, int n_starts);

/// First-integral constant estimate for an arbitrary field (same formula the
/// report uses).
double first_integral_constant(const Field& field, const IonSystem& sys, double eps);

/// Pointwise first-integral samples over interior nodes; used for its
/// dispersion diagnostics.
std::vector<double> first_integral_samples(const Field& field, const IonSystem& sys,
                                           double eps);

/// Residuals of the two boundary identities obtained from the first integral
/// (difference of the identity at x = +-1, and its value at x = 1 combined
/// with the Robin condition). Requires eta > 0 for the second one.
std::pair<double, double> boundary_identity_residuals(const Field& field,
                                                      const IonSystem& sys,
                                                      const BoundaryData& bd,
                                                      double eps);

/// int R(phi) dx for a standalone field (same quantity as the report history).
double residual_integral(const Field& field, const IonSystem& sys,
                         const BoundaryData& bd, double eps, Model model);

} // namespace ccpb
