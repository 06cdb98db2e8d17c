#pragma once

#include "ccpb/grid.hpp"
#include "ccpb/ion_system.hpp"

namespace ccpb {

/// Energy functional whose Euler-Lagrange equation is the nonlocal CCPB
/// problem:
///   (eps^2/2) int |u'|^2 + sum_k alpha_k log int e^{a_k u}
///   + sum_l beta_l log int e^{-b_l u}
///   + (eps^2 / 2 eta) [(phi_minus - u(-1))^2 + (phi_plus - u(1))^2].
/// Integrals use the trapezoid rule, u' per-cell differences. Rejects eta = 0
/// (use ccpb_energy_dirichlet).
double ccpb_energy(const IonSystem& sys, const BoundaryData& bd, double eps,
                   const Field& field);

/// Penalty-free variant for eta = 0: requires u(+-1) to match the boundary
/// data exactly (within 1e-9).
double ccpb_energy_dirichlet(const IonSystem& sys, const BoundaryData& bd,
                             double eps, const Field& field);

/// Classical PB energy:
///   (1/2) int (eps^2 |u'|^2 + f(u))
///   + (eps^2 / 2 eta) [(phi_minus - u(-1))^2 + (phi_plus - u(1))^2].
double pb_energy(const IonSystem& sys, const BoundaryData& bd, double eps,
                 const Field& field);

double pb_energy_dirichlet(const IonSystem& sys, const BoundaryData& bd,
                           double eps, const Field& field);

} // namespace ccpb
