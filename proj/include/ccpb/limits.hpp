#pragma once

#include <cstddef>
#include <vector>

#include "ccpb/ion_system.hpp"

namespace ccpb {

/// Zero-eps limit pair for the CCPB boundary layer: t = lim phi(1),
/// c = lim phi(x) interior, solving
///   phi_plus - t = gamma sqrt(f(t-c) - f(0)),   f(t-c) = f(-t-c),
///   |c| < t <= phi_plus.
struct LimitPair {
    double gamma = 0.0;
    double t = 0.0;
    double c = 0.0;
    double eq1_residual = 0.0;
    double eq2_residual = 0.0;
};

struct SweepRow {
    double gamma;
    double t;
    double c;
};

struct SweepTable {
    std::vector<SweepRow> rows;
    bool monotone_t = false;
    bool monotone_tc = false;
    /// Interior row indices where the sign of consecutive c-differences flips.
    std::vector<std::size_t> c_extrema;
};

/// Solves the limit equations for an electroneutral system. Scalar reduction:
/// s1 is the root of k(s) = s - 2 phi_plus + 2 gamma sqrt(f(s)-f(0)), s2 the
/// root of h(s) = f(s) - f(k(s)) on (0, s1); then t = phi_plus -
/// gamma sqrt(f(s2)-f(0)), c = t - s2, polished by a clipped 2x2 Newton.
LimitPair solve_tc(const IonSystem& sys, double phi_plus, double gamma);

/// The gamma->0 interior limit: unique root of f(phi_plus - c) =
/// f(-phi_plus - c) on (-phi_plus, phi_plus).
double c_star_neutral(const IonSystem& sys, double phi_plus);

/// Bracket constant (1/3) log sech t of the a1 = b1 = 1, b2 = 2 pattern.
double c_star_bracket(double t);

/// Implied concentration ratio beta1/beta2 for the a1 = b1 = 1, b2 = 2
/// pattern: (1 - e^{3c} cosh t) / (e^c sinh c).
double ratio_ca1(double t, double c);

/// Generalization for b2 = z >= 2:
/// (z - e^{(1+z)c} sinh(z t)/sinh t) / (2 e^c sinh c).
double ratio_ca2(double t, double c, double z);

/// Boundary limit of the classical PB model: unique t_hat between 0 and
/// phi_plus with |phi_plus - t_hat| = gamma sqrt(f(t_hat) - f(0)).
double pb_t_hat(const IonSystem& sys, double phi_plus, double gamma);

/// Interior limit of the PB model without electroneutrality: the root of f'.
double pb_nonneutral_r(const IonSystem& sys);

/// solve_tc on each gamma plus monotonicity analysis of t, t - c, and c.
SweepTable gamma_sweep(const IonSystem& sys, double phi_plus,
                       const std::vector<double>& gammas);

/// n log-spaced points on [lo, hi].
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

} // namespace ccpb
