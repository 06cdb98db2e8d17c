#include "ccpb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ccpb {

double effective_relax_s(const SolverConfig& cfg, double eps) {
    double s = cfg.relax_s;
    if (s == 0.0) {
        s = std::clamp(cfg.relax_C * eps * eps, 1e-6, 0.9);
    }
    if (!(s > 0.0) || !(s < 1.0)) {
        throw std::invalid_argument("relaxation factor must lie in (0,1)");
    }
    return s;
}

namespace {

struct SpeciesTerm {
    double z;      // exponent coefficient: a_k for anions, -b_l for cations
    double charge; // a_k alpha_k for anions, -b_l beta_l for cations
    double conc;   // alpha_k or beta_l
};

std::vector<SpeciesTerm> species_terms(const IonSystem& sys) {
    std::vector<SpeciesTerm> terms;
    for (const Species& a : sys.anions()) {
        terms.push_back({a.valence, a.valence * a.concentration, a.concentration});
    }
    for (const Species& b : sys.cations()) {
        terms.push_back({-b.valence, -b.valence * b.concentration, b.concentration});
    }
    return terms;
}

// exp(z * phi_i) for one species, cap-checked.
void exp_column(const std::vector<double>& phi, double z, double cap,
                std::vector<double>& out) {
    out.resize(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        out[i] = checked_exp(z * phi[i], cap);
    }
}

void rhs_into(const std::vector<double>& phi, const Grid& grid, const IonSystem& sys,
              Model model, std::vector<std::vector<double>>& exps,
              std::vector<double>& out) {
    auto terms = species_terms(sys);
    exps.resize(terms.size());
    out.assign(phi.size(), 0.0);
    const std::vector<double>& w = grid.weights();
    for (std::size_t k = 0; k < terms.size(); ++k) {
        exp_column(phi, terms[k].z, sys.exponent_cap(), exps[k]);
        double denom = 2.0;
        if (model == Model::ccpb) {
            denom = 0.0;
            for (std::size_t i = 0; i < phi.size(); ++i) denom += w[i] * exps[k][i];
        }
        double coef = terms[k].charge / denom;
        for (std::size_t i = 0; i < phi.size(); ++i) out[i] += coef * exps[k][i];
    }
}

// Residual of the discrete nonlinear system summed over its equations. For
// Robin rows the stiffness part telescopes away; for Dirichlet the two
// constraint rows are excluded and the end-cell fluxes appear instead.
double residual_integral_impl(const std::vector<double>& phi, const Grid& grid,
                              const BoundaryData& bd, double eps,
                              const std::vector<double>& g) {
    const std::vector<double>& w = grid.weights();
    std::size_t n = phi.size();
    double e2 = eps * eps;
    if (!bd.dirichlet()) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += w[i] * g[i];
        sum += e2 / bd.eta * ((phi[0] - bd.phi_minus) + (phi[n - 1] - bd.phi_plus));
        return sum;
    }
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) sum += w[i] * g[i];
    double slope_left = (phi[1] - phi[0]) / grid.cell_size(0);
    double slope_right = (phi[n - 1] - phi[n - 2]) / grid.cell_size(n - 2);
    return sum + e2 * (slope_left - slope_right);
}

Field initial_field(std::shared_ptr<const Grid> grid, const BoundaryData& bd,
                    SolverConfig::Init init) {
    if (init == SolverConfig::Init::zero) {
        return Field::constant(std::move(grid), 0.0);
    }
    return Field::linear(std::move(grid), bd.phi_minus, bd.phi_plus);
}

} // namespace

std::vector<double> ccpb_rhs(const Field& field, const IonSystem& sys) {
    std::vector<std::vector<double>> exps;
    std::vector<double> out;
    rhs_into(field.values, *field.grid, sys, Model::ccpb, exps, out);
    return out;
}

std::vector<double> pb_rhs(const Field& field, const IonSystem& sys) {
    std::vector<std::vector<double>> exps;
    std::vector<double> out;
    rhs_into(field.values, *field.grid, sys, Model::pb, exps, out);
    return out;
}

Field convex_step(const Field& field, const IonSystem& sys, const BoundaryData& bd,
                  double eps, const SolverConfig& cfg, Model model) {
    double s = effective_relax_s(cfg, eps);
    std::vector<double> g =
        (model == Model::ccpb) ? ccpb_rhs(field, sys) : pb_rhs(field, sys);
    TridiagonalSystem sys_lin = assemble_step_problem(*field.grid, eps, bd, g);
    std::vector<double> half = solve_tridiagonal(sys_lin);
    std::vector<double> next(field.values.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] = s * half[i] + (1.0 - s) * field.values[i];
    }
    return Field(field.grid, std::move(next));
}

SolveReport solve_from(Field initial, const IonSystem& sys, const BoundaryData& bd,
                       double eps, const SolverConfig& cfg, Model model) {
    double s = effective_relax_s(cfg, eps);
    std::shared_ptr<const Grid> grid = initial.grid;
    std::vector<double> phi = std::move(initial.values);
    const double guard =
        10.0 * (std::abs(bd.phi_plus) + std::abs(bd.phi_minus) + 10.0);

    SolveReport report(Field(grid, phi));
    std::vector<std::vector<double>> exps;
    std::vector<double> g;
    double delta_sup = 0.0;
    long m = 0;
    for (; m < cfg.max_iter; ++m) {
        rhs_into(phi, *grid, sys, model, exps, g);
        if (cfg.record_residuals) {
            report.residual_integrals.push_back(
                residual_integral_impl(phi, *grid, bd, eps, g));
        }
        TridiagonalSystem lin = assemble_step_problem(*grid, eps, bd, g);
        std::vector<double> half = solve_tridiagonal(lin);
        delta_sup = 0.0;
        double phi_sup = 0.0;
        for (std::size_t i = 0; i < phi.size(); ++i) {
            double d = half[i] - phi[i];
            delta_sup = std::max(delta_sup, std::abs(d));
            phi[i] += s * d;
            phi_sup = std::max(phi_sup, std::abs(phi[i]));
        }
        if (phi_sup > guard) {
            report.field = Field(grid, std::move(phi));
            report.iterations = m + 1;
            report.final_delta_sup = delta_sup;
            report.diverged = true;
            report.message = "iterate norm " + std::to_string(phi_sup) +
                             " exceeded divergence guard " + std::to_string(guard);
            return report;
        }
        if (delta_sup <= cfg.tol) {
            ++m;
            break;
        }
    }
    report.field = Field(grid, std::move(phi));
    report.iterations = m;
    report.final_delta_sup = delta_sup;
    report.converged = delta_sup <= cfg.tol;
    if (!report.converged) {
        report.message = "no convergence after " + std::to_string(m) +
                         " iterations; last ||delta|| = " + std::to_string(delta_sup);
    }
    report.first_integral_constant = first_integral_constant(report.field, sys, eps);
    return report;
}

SolveReport solve(const IonSystem& sys, const BoundaryData& bd, double eps,
                  std::shared_ptr<const Grid> grid, const SolverConfig& cfg,
                  Model model) {
    return solve_from(initial_field(std::move(grid), bd, cfg.init), sys, bd, eps,
                      cfg, model);
}

double uniqueness_probe(const IonSystem& sys, const BoundaryData& bd, double eps,
                        std::shared_ptr<const Grid> grid, const SolverConfig& cfg,
                        Model model, int n_starts) {
    if (n_starts < 2 || n_starts > 5) {
        throw std::invalid_argument("uniqueness_probe: n_starts must be in [2,5]");
    }
    std::vector<Field> starts;
    starts.push_back(Field::constant(grid, 0.0));
    starts.push_back(Field::linear(grid, bd.phi_minus, bd.phi_plus));
    starts.push_back(Field::constant(grid, 0.5));
    starts.push_back(Field::constant(grid, -0.5));
    {
        std::mt19937 rng(20140818u);
        std::uniform_real_distribution<double> dist(-0.5, 0.5);
        std::vector<double> v(grid->n_nodes());
        for (double& x : v) x = dist(rng);
        starts.emplace_back(grid, std::move(v));
    }
    starts.resize(static_cast<std::size_t>(n_starts), starts.front());

    std::vector<Field> solutions;
    SolverConfig probe_cfg = cfg;
    probe_cfg.record_residuals = false;
    for (int i = 0; i < n_starts; ++i) {
        SolveReport r = solve_from(starts[static_cast<std::size_t>(i)], sys, bd, eps,
                                   probe_cfg, model);
        if (!r.converged) {
            throw std::runtime_error("uniqueness_probe: start " + std::to_string(i) +
                                     " did not converge: " + r.message);
        }
        solutions.push_back(std::move(r.field));
    }
    double max_dist = 0.0;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        for (std::size_t j = i + 1; j < solutions.size(); ++j) {
            for (std::size_t k = 0; k < solutions[i].values.size(); ++k) {
                max_dist = std::max(
                    max_dist, std::abs(solutions[i].values[k] - solutions[j].values[k]));
            }
        }
    }
    return max_dist;
}

std::vector<double> first_integral_samples(const Field& field, const IonSystem& sys,
                                           double eps) {
    auto terms = species_terms(sys);
    std::vector<double> grad = nodal_gradient(field);
    std::vector<double> denom(terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
        denom[k] = trapz_weighted_exp(field, terms[k].z, sys.exponent_cap());
    }
    std::size_t n = field.size();
    std::vector<double> samples;
    samples.reserve(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double boltz = 0.0;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            boltz += terms[k].conc *
                     checked_exp(terms[k].z * field.values[i], sys.exponent_cap()) /
                     denom[k];
        }
        samples.push_back(0.5 * eps * eps * grad[i] * grad[i] - boltz);
    }
    return samples;
}

double first_integral_constant(const Field& field, const IonSystem& sys, double eps) {
    std::vector<double> samples = first_integral_samples(field, sys, eps);
    std::size_t mid = samples.size() / 2;
    std::nth_element(samples.begin(), samples.begin() + static_cast<long>(mid),
                     samples.end());
    return samples[mid];
}

std::pair<double, double> boundary_identity_residuals(const Field& field,
                                                      const IonSystem& sys,
                                                      const BoundaryData& bd,
                                                      double eps) {
    if (bd.dirichlet()) {
        throw std::invalid_argument(
            "boundary_identity_residuals: identities require eta > 0");
    }
    double phi1 = field.at_right();
    double cap = sys.exponent_cap();
    double diff = 0.0;  // identity from subtracting the first integral at -1 from +1
    double value = 0.0; // Boltzmann terms of the first integral at x = 1
    for (const Species& a : sys.anions()) {
        double denom = trapz_weighted_exp(field, a.valence, cap);
        diff += a.concentration *
                (checked_exp(a.valence * phi1, cap) - checked_exp(-a.valence * phi1, cap)) /
                denom;
        value += a.concentration * checked_exp(a.valence * phi1, cap) / denom;
    }
    for (const Species& b : sys.cations()) {
        double denom = trapz_weighted_exp(field, -b.valence, cap);
        diff -= b.concentration *
                (checked_exp(b.valence * phi1, cap) - checked_exp(-b.valence * phi1, cap)) /
                denom;
        value += b.concentration * checked_exp(-b.valence * phi1, cap) / denom;
    }
    double c_eps = first_integral_constant(field, sys, eps);
    double lhs = eps * eps / (2.0 * bd.eta * bd.eta) *
                 (bd.phi_plus - phi1) * (bd.phi_plus - phi1);
    return {diff, lhs - (value + c_eps)};
}

double residual_integral(const Field& field, const IonSystem& sys,
                         const BoundaryData& bd, double eps, Model model) {
    std::vector<std::vector<double>> exps;
    std::vector<double> g;
    rhs_into(field.values, *field.grid, sys, model, exps, g);
    return residual_integral_impl(field.values, *field.grid, bd, eps, g);
}

} // namespace ccpb
