#pragma once

#include <vector>

namespace ccpb {

/// One ionic species: valence magnitude and total concentration.
/// Anion valences are stored as positive magnitudes (the charge is -valence).
struct Species {
    double valence;
    double concentration;
};

/// Throws std::overflow_error if |z| exceeds `cap`, otherwise returns exp(z).
/// Saturating silently would corrupt the root finders built on top of f.
double checked_exp(double z, double cap);

/// Ionic species data and the algebraic quantities built from it:
/// charge balance, the profile function f(s) = sum_k alpha_k e^{a_k s}
/// + sum_l beta_l e^{-b_l s} and its derivatives.
///
/// Valences within each list must be strictly increasing and >= 1;
/// concentrations strictly positive. Instances are immutable.
class IonSystem {
public:
    IonSystem(std::vector<Species> anions, std::vector<Species> cations,
              double exponent_cap = 700.0);

    const std::vector<Species>& anions() const { return anions_; }
    const std::vector<Species>& cations() const { return cations_; }
    double exponent_cap() const { return cap_; }

    /// sum a_k alpha_k - sum b_l beta_l (total anion charge minus cation charge).
    double charge_imbalance() const;

    /// True when |charge_imbalance| <= 1e-12.
    bool electroneutral() const;

    /// f(0) = total concentration mass.
    double total_concentration() const;

    double f(double s) const;
    double f_prime(double s) const;
    double f_second(double s) const;

    /// f(s) - f(0) evaluated with expm1 so small s does not cancel.
    double f_minus_f0(double s) const;

private:
    std::vector<Species> anions_;
    std::vector<Species> cations_;
    double cap_;
};

/// Robin boundary data: phi(-1) - eta phi'(-1) = phi_minus,
/// phi(1) + eta phi'(1) = phi_plus. eta = 0 selects Dirichlet handling.
struct BoundaryData {
    double phi_plus;
    double phi_minus;
    double eta;

    BoundaryData(double plus, double minus, double eta_coef);
    bool dirichlet() const { return eta == 0.0; }
};

} // namespace ccpb
