#pragma once

#include <span>
#include <vector>

#include "ccpb/grid.hpp"
#include "ccpb/ion_system.hpp"

namespace ccpb {

/// Tridiagonal linear system. diag and rhs have length n, sub and super n-1.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;

    std::size_t size() const { return diag.size(); }
};

/// Thomas algorithm (forward elimination, back substitution). Throws
/// std::runtime_error on a zero pivot.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys);

/// Trapezoid rule for nodal values on a grid.
double trapz(const Grid& grid, std::span<const double> values);

/// Trapezoid value of the nonlocal normalization integral
/// int_{-1}^{1} e^{z phi(y)} dy.
double trapz_weighted_exp(const Field& field, double z, double cap = 700.0);

/// P1 finite-element discretization of eps^2 u'' = g on (-1,1) with the Robin
/// conditions u(-1) - eta u'(-1) = phi_minus, u(1) + eta u'(1) = phi_plus.
/// The load integral uses the lumped (trapezoid) rule on the nodal values of
/// g. For eta = 0 the boundary rows become Dirichlet constraints.
TridiagonalSystem assemble_step_problem(const Grid& grid, double eps,
                                        const BoundaryData& bd,
                                        std::span<const double> g);

} // namespace ccpb
