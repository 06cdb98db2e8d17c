#include "ccpb/ion_system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ccpb {

double checked_exp(double z, double cap) {
    if (std::abs(z) > cap) {
        throw std::overflow_error("exponent " + std::to_string(z) +
                                  " exceeds cap " + std::to_string(cap));
    }
    return std::exp(z);
}

namespace {

void validate_species(const std::vector<Species>& list, const char* label) {
    if (list.empty()) {
        throw std::invalid_argument(std::string(label) + " list is empty");
    }
    double prev = 0.0;
    for (const Species& s : list) {
        if (s.valence < 1.0) {
            throw std::invalid_argument(std::string(label) + " valence < 1");
        }
        if (s.valence <= prev) {
            throw std::invalid_argument(std::string(label) +
                                        " valences not strictly increasing");
        }
        if (!(s.concentration > 0.0)) {
            throw std::invalid_argument(std::string(label) +
                                        " concentration not positive");
        }
        prev = s.valence;
    }
}

} // namespace

IonSystem::IonSystem(std::vector<Species> anions, std::vector<Species> cations,
                     double exponent_cap)
    : anions_(std::move(anions)), cations_(std::move(cations)), cap_(exponent_cap) {
    validate_species(anions_, "anion");
    validate_species(cations_, "cation");
    if (!(cap_ > 0.0)) {
        throw std::invalid_argument("exponent cap must be positive");
    }
}

double IonSystem::charge_imbalance() const {
    double total = 0.0;
    for (const Species& s : anions_) total += s.valence * s.concentration;
    for (const Species& s : cations_) total -= s.valence * s.concentration;
    return total;
}

bool IonSystem::electroneutral() const {
    return std::abs(charge_imbalance()) <= 1e-12;
}

double IonSystem::total_concentration() const {
    double total = 0.0;
    for (const Species& s : anions_) total += s.concentration;
    for (const Species& s : cations_) total += s.concentration;
    return total;
}

double IonSystem::f(double s) const {
    double value = 0.0;
    for (const Species& a : anions_) value += a.concentration * checked_exp(a.valence * s, cap_);
    for (const Species& b : cations_) value += b.concentration * checked_exp(-b.valence * s, cap_);
    return value;
}

double IonSystem::f_prime(double s) const {
    double value = 0.0;
    for (const Species& a : anions_) value += a.valence * a.concentration * checked_exp(a.valence * s, cap_);
    for (const Species& b : cations_) value -= b.valence * b.concentration * checked_exp(-b.valence * s, cap_);
    return value;
}

double IonSystem::f_second(double s) const {
    double value = 0.0;
    for (const Species& a : anions_)
        value += a.valence * a.valence * a.concentration * checked_exp(a.valence * s, cap_);
    for (const Species& b : cations_)
        value += b.valence * b.valence * b.concentration * checked_exp(-b.valence * s, cap_);
    return value;
}

double IonSystem::f_minus_f0(double s) const {
    double value = 0.0;
    for (const Species& a : anions_) {
        if (std::abs(a.valence * s) > cap_) {
            throw std::overflow_error("exponent exceeds cap in f_minus_f0");
        }
        value += a.concentration * std::expm1(a.valence * s);
    }
    for (const Species& b : cations_) {
        if (std::abs(b.valence * s) > cap_) {
            throw std::overflow_error("exponent exceeds cap in f_minus_f0");
        }
        value += b.concentration * std::expm1(-b.valence * s);
    }
    return value;
}

BoundaryData::BoundaryData(double plus, double minus, double eta_coef)
    : phi_plus(plus), phi_minus(minus), eta(eta_coef) {
    if (eta < 0.0) {
        throw std::invalid_argument("eta must be nonnegative");
    }
}

} // namespace ccpb
