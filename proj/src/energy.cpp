#include "ccpb/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "ccpb/fem.hpp"

namespace ccpb {

namespace {

double gradient_energy(const Field& field) {
    const Grid& grid = *field.grid;
    const std::vector<double>& u = field.values;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        double du = u[i + 1] - u[i];
        sum += du * du / grid.cell_size(i);
    }
    return sum;
}

double boltzmann_log_terms(const IonSystem& sys, const Field& field) {
    double sum = 0.0;
    for (const Species& a : sys.anions()) {
        sum += a.concentration *
               std::log(trapz_weighted_exp(field, a.valence, sys.exponent_cap()));
    }
    for (const Species& b : sys.cations()) {
        sum += b.concentration *
               std::log(trapz_weighted_exp(field, -b.valence, sys.exponent_cap()));
    }
    return sum;
}

double robin_penalty(const BoundaryData& bd, double eps, const Field& field) {
    double dm = bd.phi_minus - field.at_left();
    double dp = bd.phi_plus - field.at_right();
    return eps * eps / (2.0 * bd.eta) * (dm * dm + dp * dp);
}

void require_dirichlet_trace(const BoundaryData& bd, const Field& field) {
    if (std::abs(field.at_left() - bd.phi_minus) > 1e-9 ||
        std::abs(field.at_right() - bd.phi_plus) > 1e-9) {
        throw std::invalid_argument(
            "dirichlet energy requires u(+-1) to equal the boundary data");
    }
}

double pb_bulk(const IonSystem& sys, double eps, const Field& field) {
    const Grid& grid = *field.grid;
    std::vector<double> fu(field.size());
    for (std::size_t i = 0; i < fu.size(); ++i) fu[i] = sys.f(field.values[i]);
    return 0.5 * (eps * eps * gradient_energy(field) + trapz(grid, fu));
}

} // namespace

double ccpb_energy(const IonSystem& sys, const BoundaryData& bd, double eps,
                   const Field& field) {
    if (bd.dirichlet()) {
        throw std::invalid_argument("ccpb_energy: eta = 0, use ccpb_energy_dirichlet");
    }
    return 0.5 * eps * eps * gradient_energy(field) + boltzmann_log_terms(sys, field) +
           robin_penalty(bd, eps, field);
}

double ccpb_energy_dirichlet(const IonSystem& sys, const BoundaryData& bd,
                             double eps, const Field& field) {
    require_dirichlet_trace(bd, field);
    return 0.5 * eps * eps * gradient_energy(field) + boltzmann_log_terms(sys, field);
}

double pb_energy(const IonSystem& sys, const BoundaryData& bd, double eps,
                 const Field& field) {
    if (bd.dirichlet()) {
        throw std::invalid_argument("pb_energy: eta = 0, use pb_energy_dirichlet");
    }
    return pb_bulk(sys, eps, field) + robin_penalty(bd, eps, field);
}

double pb_energy_dirichlet(const IonSystem& sys, const BoundaryData& bd,
                           double eps, const Field& field) {
    require_dirichlet_trace(bd, field);
    return pb_bulk(sys, eps, field);
}

} // namespace ccpb
