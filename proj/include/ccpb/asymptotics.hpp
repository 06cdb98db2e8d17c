#pragma once

#include "ccpb/diagnostics.hpp"
#include "ccpb/grid.hpp"
#include "ccpb/ion_system.hpp"
#include "ccpb/limits.hpp"

namespace ccpb {

enum class Side { plus, minus };

/// Limiting envelope constants for the a1 = b1 = 1, b2 = 2 species pattern:
/// A = 1, B = 1 + beta2/alpha1, C = sqrt(alpha1 + beta2),
/// D = (sqrt(alpha1 e^{+-t-c} + beta2) + C) / |sqrt(alpha1 e^{+-t-c} + beta2) - C|.
struct EnvelopeParams {
    double A;
    double B;
    double C;
    double D;
    Side side;
};

EnvelopeParams envelope_b2_params(double alpha1, double beta2, double t, double c,
                                  Side side);

/// Boundary-layer envelope for the a1 = b1 = 1, b2 = 2 pattern with the
/// limiting constants:
///   plus side:  c + log{A + B csch^2[(C/eps)(1-x) + log D]}
///   minus side: c + log{A - B sech^2[(C/eps)(1+x) + log D]}.
double envelope_b2(double alpha1, double beta2, double t, double c, double eps,
                   Side side, double x);

/// Envelope family for the two-anion/two-cation pattern a = b = (1, 2):
///   c + log[(cosh h +- (A^2 - B^2 + A)/B) / (cosh h -+ (A+1)/B)],
///   h = (C~/eps)(1 -+ x) + log H, with the limiting constants
///   A = 1 + alpha1/(2 alpha2), B = sqrt(A^2 - beta2/alpha2),
///   C~ = sqrt(alpha2 ((A+1)^2 - B^2)).
double envelope_two_two(double alpha1, double alpha2, double beta1, double beta2,
                        double t, double c, double eps, Side side, double x);

/// Pointwise anion/cation concentration fields of the monovalent two-species
/// pattern: n = alpha e^{phi}/int e^{phi}, p = beta e^{-phi}/int e^{-phi}.
struct NPFields {
    std::vector<double> n;
    std::vector<double> p;
};

NPFields np_fields(const Field& solution, double alpha, double beta);

/// Verifies that the converged solution lies between the finite-eps lower and
/// upper layer envelopes on both layer regions. The envelope constants are
/// built from the solution's own boundary values v(+-1) = phi(+-1) - c and
/// from delta(eps), the max first-integral defect over the layer region. The
/// layer region starts at the outermost node with |phi - c| <= threshold.
CheckResult sandwich_check(const Field& solution, const LimitPair& pair,
                           const IonSystem& sys, double eps, double threshold);

/// Gradient bound of the electroneutral antisymmetric problem:
/// 0 <= phi'(x) <= (C1/eps)(e^{-M1(1+x)/eps} + e^{-M1(1-x)/eps}) with
/// M1 = (1/2) sqrt(sum a_k^2 alpha_k e^{2 a_k phi_minus}
///               + sum b_l^2 beta_l e^{2 b_l phi_minus}) and C1 = eps phi'(1).
CheckResult gradient_bound_check(const Field& solution, const IonSystem& sys,
                                 const BoundaryData& bd, double eps);

/// PB interior decay bound |phi(x)| <= max(|phi0+|,|phi0-|)
/// (e^{-sqrt(C5)(1+x)/(2 eps)} + e^{-sqrt(C5)(1-x)/(2 eps)}), where
/// C5 = inf_{s != 0} f'(s)/s.
CheckResult pb_decay_check(const Field& solution, const IonSystem& sys,
                           const BoundaryData& bd, double eps);

/// inf_{s != 0} f'(s)/s, evaluated by sampling plus local refinement.
double pb_decay_rate_constant(const IonSystem& sys);

/// Desk-scale checks of the non-electroneutral theorem for the monovalent
/// pattern with 0 < alpha < beta and phi_minus = phi_plus:
///  (a) eps^2 p(+-1)            vs (alpha-beta)^2/8        (10%)
///  (b) sup |n - alpha/2|, sup |p - alpha/2| over [-1+eps^k, 1-eps^k]  (0.05)
///  (c) collar integrals of n (vs 0) and p (vs (beta-alpha)/2, 15%)
///  (d) phi(0) - phi(1) - log(1/eps^2)  vs log((alpha-beta)^2/(4 alpha)) (0.15)
///  (e) eps^2 phi'(1)           vs (alpha-beta)/2          (10%)
/// plus the lambda_eps(kappa) estimate as an informational entry.
DiagnosticsReport nonneutral_checks(const Field& solution, double alpha, double beta,
                                    double eps, double kappa);

} // namespace ccpb
