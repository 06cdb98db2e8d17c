#include "ccpb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "ccpb/asymptotics.hpp"
#include "ccpb/energy.hpp"
#include "ccpb/fem.hpp"
#include "ccpb/limits.hpp"
#include "ccpb/parallel.hpp"
#include "ccpb/presets.hpp"
#include "ccpb/solver.hpp"

namespace ccpb {

namespace {

const double kEps3 = std::pow(2.0, -3);
const double kEps5 = std::pow(2.0, -5);

IonSystem preset_system() {
    return IonSystem({{1.0, 1.2}}, {{1.0, 0.4}, {2.0, 0.4}});
}

IonSystem ratio_system(int which) {
    switch (which) {
        case 1: return IonSystem({{1.0, 3.0}}, {{1.0, 1.0}, {2.0, 1.0}});
        case 2: return IonSystem({{1.0, 5.0}}, {{1.0, 1.0}, {2.0, 2.0}});
        default: return IonSystem({{1.0, 7.0}}, {{1.0, 1.0}, {2.0, 3.0}});
    }
}

CheckResult bound_check(std::string name, bool pass, double value, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.value = value;
    r.reference = 0.0;
    r.tolerance = 0.0;
    r.pass = pass;
    r.detail = std::move(detail);
    return r;
}

// ---------------------------------------------------------------- limits ----

void limits_suite(const GoldenMap& g, DiagnosticsReport& rep) {
    auto golden = [&](const std::string& name, double value) {
        const GoldenEntry& e = g.at(name);
        rep.add(CheckResult::make(name, value, e.reference, e.tolerance));
    };

    const char* tags[] = {"r1", "r2", "r3"};
    for (int i = 1; i <= 3; ++i) {
        IonSystem sys = ratio_system(i);
        LimitPair p0 = solve_tc(sys, 1.0, 0.0);
        LimitPair p5 = solve_tc(sys, 1.0, 0.5);
        std::string tag = tags[i - 1];
        golden("table2-t-" + tag + "-g0", p0.t);
        golden("table2-c-" + tag + "-g0", p0.c);
        golden("table2-t-" + tag + "-g05", p5.t);
        golden("table2-c-" + tag + "-g05", p5.c);
        golden("table2-cstar-bracket-" + tag + "-g05", c_star_bracket(p5.t));
        rep.add(CheckResult::make("limits/residuals-" + tag,
                                  std::max(std::abs(p5.eq1_residual),
                                           std::abs(p5.eq2_residual)),
                                  0.0, 1e-10));
        rep.add(CheckResult::make("limits/cstar-neutral-consistency-" + tag,
                                  c_star_neutral(sys, 1.0), p0.c, 1e-10));
        // c lies in (c_*(t), 0) for this divalent-cation pattern
        bool inside = p5.c > c_star_bracket(p5.t) && p5.c < 0.0;
        rep.add(bound_check("limits/c-inside-bracket-" + tag, inside, p5.c, ""));
    }
    golden("table2-cstar-bracket-t1", c_star_bracket(1.0));

    // Formula consistency: implied ratio at the exact limit pairs.
    {
        IonSystem sys = ratio_system(1);
        LimitPair p = solve_tc(sys, 1.0, 0.25);
        rep.add(CheckResult::make("limits/ratio-roundtrip", ratio_ca1(p.t, p.c), 1.0,
                                  1e-6));
        rep.add(CheckResult::make("limits/ratio-ca2-equals-ca1",
                                  ratio_ca2(p.t, p.c, 2.0), ratio_ca1(p.t, p.c),
                                  1e-12));
    }
    golden("table2-ratio-r1", ratio_ca1(1.0, -0.1126));
    golden("table2-ratio-r2", ratio_ca1(1.0, -0.1265));
    golden("table2-ratio-r3", ratio_ca1(1.0, -0.1320));

    // PB boundary limit and the non-neutral interior limit.
    {
        IonSystem sys = ratio_system(1);
        rep.add(CheckResult::make("limits/that-gamma0", pb_t_hat(sys, 1.0, 0.0), 1.0,
                                  1e-14));
        double that = pb_t_hat(sys, 1.0, 0.5);
        // brute-force scan oracle
        double best = 0.0, best_err = 1e300;
        for (int k = 0; k <= 200000; ++k) {
            double t = 1.0 * k / 200000.0;
            double err = std::abs(1.0 - t - 0.5 * std::sqrt(sys.f_minus_f0(t)));
            if (err < best_err) {
                best_err = err;
                best = t;
            }
        }
        rep.add(CheckResult::make("limits/that-scan", that, best, 1e-5));
        rep.add(bound_check("limits/that-huge-gamma",
                            std::abs(pb_t_hat(sys, 1.0, 1e6)) < 1e-3,
                            pb_t_hat(sys, 1.0, 1e6), "gamma -> inf limit"));

        IonSystem nn({{1.0, 1.0}}, {{1.0, std::exp(2.0)}});
        rep.add(CheckResult::make("limits/r-closed-form", pb_nonneutral_r(nn), 1.0,
                                  1e-12));
    }

    // Scale invariance: concentrations x lambda with gamma / sqrt(lambda).
    {
        IonSystem sys = ratio_system(1);
        IonSystem scaled({{1.0, 6.0}}, {{1.0, 2.0}, {2.0, 2.0}});
        LimitPair a = solve_tc(sys, 1.0, 0.5);
        LimitPair b = solve_tc(scaled, 1.0, 0.5 / std::sqrt(2.0));
        double d = std::max(std::abs(a.t - b.t), std::abs(a.c - b.c));
        rep.add(CheckResult::make("limits/scale-invariance", d, 0.0, 1e-10));
    }

    // Sweep monotonicity across every figure preset; non-monotone c for the
    // last four.
    {
        int mono_violations = 0;
        int fig5_min_extrema = 1000;
        bool fig5_tc_ok = true;
        for (const Preset& p : presets()) {
            if (p.command != "sweep") continue;
            bool fig5 = p.name.rfind("fig5", 0) == 0;
            for (const PresetJob& job : p.jobs) {
                SweepTable t = gamma_sweep(job.config.species.build(),
                                           job.config.phi_plus,
                                           job.config.gammas.build());
                if (!t.monotone_t || !t.monotone_tc) ++mono_violations;
                if (fig5) {
                    fig5_min_extrema =
                        std::min(fig5_min_extrema, static_cast<int>(t.c_extrema.size()));
                    fig5_tc_ok = fig5_tc_ok && t.monotone_t && t.monotone_tc;
                } else if (!t.c_extrema.empty()) {
                    ++mono_violations; // figure 3/4 families have monotone c
                }
            }
        }
        rep.add(CheckResult::make("limits/sweep-monotone-t-tc",
                                  static_cast<double>(mono_violations), 0.0, 0.0));
        rep.add(bound_check("limits/sweep-fig5-extrema",
                            fig5_min_extrema >= 1 && fig5_tc_ok,
                            static_cast<double>(fig5_min_extrema),
                            "every non-monotone preset shows >= 1 interior extremum"));
    }
}

// ------------------------------------------------------------- envelopes ----

void envelopes_suite(DiagnosticsReport& rep) {
    const double t = 1.0, c = -0.1126, eps = kEps5;
    // frozen values computed by direct substitution into the closed forms
    rep.add(CheckResult::make("env/b2-plus-x1",
                              envelope_b2(1.2, 0.4, t, c, eps, Side::plus, 1.0),
                              0.15658352862267316, 1e-12));
    rep.add(CheckResult::make("env/b2-plus-x09",
                              envelope_b2(1.2, 0.4, t, c, eps, Side::plus, 0.9),
                              -0.11251535907951933, 1e-12));
    rep.add(CheckResult::make("env/b2-minus-x-1",
                              envelope_b2(1.2, 0.4, t, c, eps, Side::minus, -1.0),
                              -0.22556507244539958, 1e-12));
    rep.add(CheckResult::make("env/b2-interior",
                              envelope_b2(1.2, 0.4, t, c, eps, Side::plus, 0.0), c,
                              1e-12));
    {
        bool monotone = true;
        double prev = -1e300;
        for (int i = 0; i <= 100; ++i) {
            double x = 0.9 + 0.1 * i / 100.0;
            double v = envelope_b2(1.2, 0.4, t, c, eps, Side::plus, x);
            if (v < prev) monotone = false;
            prev = v;
        }
        rep.add(bound_check("env/b2-monotone-layer", monotone, prev,
                            "increasing on [0.9, 1]"));
        EnvelopeParams p = envelope_b2_params(1.2, 0.4, t, c, Side::plus);
        rep.add(CheckResult::make("env/b2-D-plus", p.D, 4.3833526605285352, 1e-12));
    }
    {
        double A = 1.0 + 0.5 / (2.0 * 0.5);
        double B = std::sqrt(A * A - 1.0);
        double Ct = std::sqrt(0.5 * ((A + 1.0) * (A + 1.0) - B * B));
        rep.add(CheckResult::make("env/tt-A", A, 1.5, 1e-15));
        rep.add(CheckResult::make("env/tt-B", B, 1.1180339887498948, 1e-15));
        rep.add(CheckResult::make("env/tt-C", Ct, 1.5811388300841897, 1e-15));
        double t2 = 0.8;
        rep.add(CheckResult::make(
            "env/tt-plus-x1",
            envelope_two_two(0.5, 0.5, 0.5, 0.5, t2, 0.0, eps, Side::plus, 1.0), t2,
            1e-12));
        rep.add(CheckResult::make(
            "env/tt-interior",
            envelope_two_two(0.5, 0.5, 0.5, 0.5, t2, 0.0, eps, Side::plus, 0.0), 0.0,
            1e-9));
        double worst = 0.0;
        for (double x : {1.0, 0.97, 0.93}) {
            double plus = envelope_two_two(0.5, 0.5, 0.5, 0.5, t2, 0.0, eps,
                                           Side::plus, x);
            double minus = envelope_two_two(0.5, 0.5, 0.5, 0.5, t2, 0.0, eps,
                                            Side::minus, -x);
            worst = std::max(worst, std::abs(plus + minus));
        }
        rep.add(CheckResult::make("env/tt-reflection", worst, 0.0, 1e-9));
    }
}

// -------------------------------------------------------------- energies ----

void energies_suite(DiagnosticsReport& rep) {
    IonSystem sys = preset_system();
    auto grid = std::make_shared<const Grid>(Grid::uniform(512));

    {
        Field u = Field::constant(grid, 0.7);
        BoundaryData bd(0.7, 0.7, 1.0);
        rep.add(CheckResult::make("energy/ccpb-constant",
                                  ccpb_energy(sys, bd, 0.5, u),
                                  2.0 * std::log(2.0), 1e-12));
    }
    {
        Field u = Field::constant(grid, 0.0);
        BoundaryData bd(1.0, -1.0, 1.0);
        rep.add(CheckResult::make("energy/ccpb-zero", ccpb_energy(sys, bd, 0.5, u),
                                  2.0 * std::log(2.0) + 0.25, 1e-12));
        rep.add(CheckResult::make("energy/pb-zero", pb_energy(sys, bd, 0.5, u), 2.25,
                                  1e-12));
    }
    {
        // shift invariance for the electroneutral system
        Field u = Field::linear(grid, -0.8, 0.9);
        BoundaryData bd(1.0, -1.0, 0.25);
        double e0 = ccpb_energy(sys, bd, 0.5, u);
        std::vector<double> shifted = u.values;
        for (double& v : shifted) v += 0.7;
        BoundaryData bd_s(1.7, -0.3, 0.25);
        double e1 = ccpb_energy(sys, bd_s, 0.5, Field(grid, shifted));
        rep.add(CheckResult::make("energy/shift-invariance", e1 - e0, 0.0, 1e-12));
    }
    {
        // f' against central finite differences
        double worst = 0.0;
        for (double s : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
            double h = 1e-6;
            double fd = (sys.f(s + h) - sys.f(s - h)) / (2.0 * h);
            double exact = sys.f_prime(s);
            double scale = std::max(1.0, std::abs(exact));
            worst = std::max(worst, std::abs(fd - exact) / scale);
        }
        rep.add(CheckResult::make("ion/fprime-finite-difference", worst, 0.0, 1e-6));
    }
    {
        // the converged discrete solution is a strict local minimum of the
        // discrete energy
        BoundaryData bd(1.0, -1.0, 0.5 * kEps3 * kEps3);
        SolverConfig cfg;
        SolveReport rpt = solve(sys, bd, kEps3, grid, cfg, Model::ccpb);
        double e_star = ccpb_energy(sys, bd, kEps3, rpt.field);
        std::size_t mid = grid->n_nodes() / 2;
        double worst_drop = 0.0;
        for (double delta : {1e-3, -1e-3}) {
            std::vector<double> v = rpt.field.values;
            v[mid] += delta;
            double e = ccpb_energy(sys, bd, kEps3, Field(grid, v));
            worst_drop = std::min(worst_drop, e - e_star);
        }
        rep.add(bound_check("energy/local-minimality", worst_drop >= 0.0, worst_drop,
                            "perturbing one node must not lower the energy"));

        SolveReport pb_rpt = solve(sys, bd, kEps3, grid, cfg, Model::pb);
        double e_sol = pb_energy(sys, bd, kEps3, pb_rpt.field);
        double e_lin =
            pb_energy(sys, bd, kEps3, Field::linear(grid, bd.phi_minus, bd.phi_plus));
        rep.add(bound_check("energy/pb-below-interpolant", e_sol < e_lin,
                            e_sol - e_lin, "converged energy vs linear interpolant"));
    }
    {
        // tridiagonal solver against a dense Gaussian-elimination oracle
        std::mt19937 rng(50u);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        const int n = 50;
        std::vector<std::vector<double>> dense(n, std::vector<double>(n + 1, 0.0));
        TridiagonalSystem tri;
        tri.sub.assign(n - 1, 0.0);
        tri.super.assign(n - 1, 0.0);
        tri.diag.assign(n, 0.0);
        tri.rhs.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            double lo = (i > 0) ? dist(rng) : 0.0;
            double hi = (i < n - 1) ? dist(rng) : 0.0;
            double d = std::abs(lo) + std::abs(hi) + 1.0 + std::abs(dist(rng));
            if (i > 0) {
                tri.sub[i - 1] = lo;
                dense[i][i - 1] = lo;
            }
            if (i < n - 1) {
                tri.super[i] = hi;
                dense[i][i + 1] = hi;
            }
            tri.diag[i] = d;
            dense[i][i] = d;
            tri.rhs[i] = dist(rng);
            dense[i][n] = tri.rhs[i];
        }
        for (int k = 0; k < n; ++k) { // partial-pivot elimination
            int piv = k;
            for (int r = k + 1; r < n; ++r) {
                if (std::abs(dense[r][k]) > std::abs(dense[piv][k])) piv = r;
            }
            std::swap(dense[k], dense[piv]);
            for (int r = k + 1; r < n; ++r) {
                double m = dense[r][k] / dense[k][k];
                for (int c = k; c <= n; ++c) dense[r][c] -= m * dense[k][c];
            }
        }
        std::vector<double> ref(n);
        for (int i = n - 1; i >= 0; --i) {
            double s = dense[i][n];
            for (int j = i + 1; j < n; ++j) s -= dense[i][j] * ref[j];
            ref[i] = s / dense[i][i];
        }
        std::vector<double> got = solve_tridiagonal(tri);
        double worst = 0.0;
        for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(got[i] - ref[i]));
        rep.add(CheckResult::make("fem/tridiagonal-oracle", worst, 0.0, 1e-12));
    }
}

// ---------------------------------------------------------------- solver ----

struct SolveJob {
    std::string tag;
    IonSystem sys;
    BoundaryData bd;
    double eps;
    Model model;
};

void solver_suite(const GoldenMap& g, int workers, DiagnosticsReport& rep,
                  std::ostream* log) {
    auto golden = [&](const std::string& name, double value) {
        const GoldenEntry& e = g.at(name);
        rep.add(CheckResult::make(name, value, e.reference, e.tolerance));
    };

    auto grid = std::make_shared<const Grid>(Grid::uniform(4096));
    const double eta3_I = 0.5 * kEps3 * kEps3, eta5_I = 0.5 * kEps5 * kEps5;
    const double eta3_II = 0.5 * kEps3, eta5_II = 0.5 * kEps5;

    std::vector<SolveJob> jobs;
    jobs.push_back({"I-ccpb-eps3", preset_system(), BoundaryData(1, -1, eta3_I), kEps3, Model::ccpb});
    jobs.push_back({"I-ccpb-eps5", preset_system(), BoundaryData(1, -1, eta5_I), kEps5, Model::ccpb});
    jobs.push_back({"I-pb-eps3", preset_system(), BoundaryData(1, -1, eta3_I), kEps3, Model::pb});
    jobs.push_back({"I-pb-eps5", preset_system(), BoundaryData(1, -1, eta5_I), kEps5, Model::pb});
    jobs.push_back({"II-ccpb-eps3", preset_system(), BoundaryData(1, -1, eta3_II), kEps3, Model::ccpb});
    jobs.push_back({"II-ccpb-eps5", preset_system(), BoundaryData(1, -1, eta5_II), kEps5, Model::ccpb});
    jobs.push_back({"cross-ccpb-eps5", ratio_system(1), BoundaryData(1, -1, eta5_II), kEps5, Model::ccpb});
    jobs.push_back({"pb-cvx", preset_system(), BoundaryData(1.0, 0.5, eta3_I), kEps3, Model::pb});

    std::vector<SolveReport> reports(jobs.size(), SolveReport(Field::constant(grid, 0.0)));
    SolverConfig cfg;
    cfg.record_residuals = false;
    parallel_for(jobs.size(), workers, [&](std::size_t i) {
        reports[i] = solve(jobs[i].sys, jobs[i].bd, jobs[i].eps, grid, cfg,
                           jobs[i].model);
    });
    auto find = [&](const std::string& tag) -> const SolveReport& {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            if (jobs[i].tag == tag) return reports[i];
        }
        throw std::logic_error("unknown job tag " + tag);
    };
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!reports[i].converged) {
            rep.add(bound_check("solver/converged-" + jobs[i].tag, false,
                                reports[i].final_delta_sup, reports[i].message));
        }
        if (log) {
            *log << "  [solve] " << jobs[i].tag << ": " << reports[i].iterations
                 << " iterations\n";
        }
    }

    std::size_t mid = grid->n_nodes() / 2;
    golden("table1-I-ccpb-eps3", find("I-ccpb-eps3").field.values[mid]);
    golden("table1-I-ccpb-eps5", find("I-ccpb-eps5").field.values[mid]);
    golden("table1-I-pb-eps3", find("I-pb-eps3").field.values[mid]);
    golden("table1-I-pb-eps5", find("I-pb-eps5").field.values[mid]);
    golden("table1-II-ccpb-eps3", find("II-ccpb-eps3").field.values[mid]);
    golden("table1-II-ccpb-eps5", find("II-ccpb-eps5").field.values[mid]);
    golden("table2-cross-phi1", find("cross-ccpb-eps5").field.values.back());

    {
        // equal boundary potentials force the constant solution
        IonSystem sys = preset_system();
        BoundaryData bd(0.3, 0.3, 0.5 * kEps3 * kEps3);
        auto small = std::make_shared<const Grid>(Grid::uniform(512));
        SolveReport r = solve(sys, bd, kEps3, small, cfg, Model::ccpb);
        double worst = 0.0;
        for (double v : r.field.values) worst = std::max(worst, std::abs(v - 0.3));
        rep.add(CheckResult::make("solver/trivial-constant", worst, 0.0, cfg.tol));
    }

    const SolveReport& main5 = find("I-ccpb-eps5");
    const std::vector<double>& phi = main5.field.values;
    {
        double min_step = 0.0;
        for (std::size_t i = 0; i + 1 < phi.size(); ++i) {
            min_step = std::min(min_step, phi[i + 1] - phi[i]);
        }
        rep.add(bound_check("solver/monotone", min_step >= -1e-9, min_step,
                            "smallest nodal increment"));
        rep.add(CheckResult::make("solver/antisymmetric-boundary",
                                  phi.front() + phi.back(), 0.0, 1e-6));

        // concave-then-convex: one sign change of the second differences
        std::vector<double> d2(phi.size() - 2);
        double scale = 0.0;
        for (std::size_t i = 1; i + 1 < phi.size(); ++i) {
            d2[i - 1] = phi[i + 1] - 2.0 * phi[i] + phi[i - 1];
            scale = std::max(scale, std::abs(d2[i - 1]));
        }
        int changes = 0, last = 0;
        for (double v : d2) {
            int s = (v > 1e-6 * scale) ? 1 : (v < -1e-6 * scale ? -1 : 0);
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        rep.add(CheckResult::make("solver/concave-convex-changes",
                                  static_cast<double>(changes), 1.0, 0.0));

        double maxabs = 0.0;
        for (double v : phi) maxabs = std::max(maxabs, std::abs(v));
        rep.add(bound_check("solver/max-bound", maxabs <= 1.0 + 1e-9, maxabs,
                            "max|phi| vs phi0+"));

        std::vector<double> grad = nodal_gradient(main5.field);
        rep.add(CheckResult::make("solver/interior-slope", grad[mid], 0.0, 1e-4));

        rep.add(CheckResult::make("solver/c-eps", main5.first_integral_constant, -1.0,
                                  0.05));
        std::vector<double> samples =
            first_integral_samples(main5.field, preset_system(), kEps5);
        double mean = 0.0;
        for (double v : samples) mean += v;
        mean /= static_cast<double>(samples.size());
        double var = 0.0;
        for (double v : samples) var += (v - mean) * (v - mean);
        double sd = std::sqrt(var / static_cast<double>(samples.size()));
        rep.add(CheckResult::make("solver/first-integral-dispersion",
                                  sd / std::abs(main5.first_integral_constant), 0.0,
                                  0.01));

        auto [r1, r2] = boundary_identity_residuals(
            main5.field, preset_system(), BoundaryData(1, -1, eta5_I), kEps5);
        rep.add(CheckResult::make("solver/boundary-identity-diff", r1, 0.0, 1e-2));
        rep.add(CheckResult::make("solver/boundary-identity-robin", r2, 0.0, 1e-2));
    }

    {
        // residual-integral contraction at exactly (1-s)
        IonSystem sys = preset_system();
        double eps = 0.5;
        BoundaryData bd(1, -1, 0.5 * eps * eps);
        SolverConfig scfg;
        scfg.relax_s = 0.125;
        Field it_field = Field::constant(grid, 0.5);
        double prev = residual_integral(it_field, sys, bd, eps, Model::ccpb);
        double worst = 0.0;
        for (int m = 0; m < 12; ++m) {
            it_field = convex_step(it_field, sys, bd, eps, scfg, Model::ccpb);
            double cur = residual_integral(it_field, sys, bd, eps, Model::ccpb);
            if (std::abs(prev) > 100.0 * cfg.tol) {
                worst = std::max(worst, std::abs(cur / prev - (1.0 - scfg.relax_s)));
            }
            prev = cur;
        }
        rep.add(CheckResult::make("solver/residual-contraction", worst, 0.0,
                                  0.05 * (1.0 - scfg.relax_s)));
    }

    {
        auto small = std::make_shared<const Grid>(Grid::uniform(512));
        IonSystem sys = preset_system();
        BoundaryData bd(1, -1, 0.5 * kEps3 * kEps3);
        double d_ccpb = uniqueness_probe(sys, bd, kEps3, small, cfg, Model::ccpb, 4);
        rep.add(CheckResult::make("solver/uniqueness-ccpb", d_ccpb, 0.0, 10.0 * cfg.tol));
        double d_pb = uniqueness_probe(sys, bd, kEps3, small, cfg, Model::pb, 4);
        rep.add(CheckResult::make("solver/uniqueness-pb", d_pb, 0.0, 10.0 * cfg.tol));
    }

    {
        const SolveReport& pb5 = find("I-pb-eps5");
        rep.add(CheckResult::make("solver/pb-interior-decay", pb5.field.values[mid],
                                  0.0, 1e-3));
        rep.add(pb_decay_check(pb5.field, preset_system(),
                               BoundaryData(1, -1, eta5_I), kEps5));

        const SolveReport& pbm = find("I-pb-eps3");
        double min_step = 0.0;
        for (std::size_t i = 0; i + 1 < pbm.field.values.size(); ++i) {
            min_step = std::min(min_step,
                                pbm.field.values[i + 1] - pbm.field.values[i]);
        }
        rep.add(bound_check("solver/pb-monotone-mixed-sign", min_step >= -1e-9,
                            min_step, "phi0 = (+1, -1) gives a monotone profile"));

        const SolveReport& cvx = find("pb-cvx");
        const std::vector<double>& q = cvx.field.values;
        double min_d2 = 0.0;
        std::size_t argmin = 0;
        for (std::size_t i = 1; i + 1 < q.size(); ++i) {
            min_d2 = std::min(min_d2, q[i + 1] - 2.0 * q[i] + q[i - 1]);
            if (q[i] < q[argmin]) argmin = i;
        }
        bool interior_min = argmin > 0 && argmin + 1 < q.size() &&
                            q[argmin] < q.front() && q[argmin] < q.back();
        rep.add(bound_check("solver/pb-convex-positive-data",
                            min_d2 >= -1e-12 && interior_min, min_d2,
                            "nonnegative second differences, interior minimum"));
    }

    {
        // zero-eps consistency with the limit pairs
        LimitPair pI = solve_tc(preset_system(), 1.0, 0.0);
        rep.add(CheckResult::make("solver/limit-consistency-I-interior",
                                  phi[mid], pI.c, 0.01));
        rep.add(CheckResult::make("solver/limit-consistency-I-boundary",
                                  phi.back(), pI.t, 0.05));
        LimitPair pII = solve_tc(preset_system(), 1.0, 0.5);
        const SolveReport& two = find("II-ccpb-eps5");
        rep.add(CheckResult::make("solver/limit-consistency-II-interior",
                                  two.field.values[mid], pII.c, 0.01));
        rep.add(CheckResult::make("solver/limit-consistency-II-boundary",
                                  two.field.values.back(), pII.t, 0.05));

        rep.add(sandwich_check(main5.field, pI, preset_system(), kEps5, 0.02));
        rep.add(gradient_bound_check(main5.field, preset_system(),
                                     BoundaryData(1, -1, eta5_I), kEps5));
    }
}

} // namespace

GoldenMap default_goldens() {
    return GoldenMap{
        {"table1-I-ccpb-eps3", {-0.0964, 0.005}},
        {"table1-I-ccpb-eps5", {-0.1081, 0.005}},
        {"table1-I-pb-eps3", {0.0, 0.002}},
        {"table1-I-pb-eps5", {0.0, 0.002}},
        {"table1-II-ccpb-eps3", {-0.0442, 0.005}},
        {"table1-II-ccpb-eps5", {-0.0442, 0.005}},
        {"table2-cross-phi1", {0.4960, 0.01}},
        {"table2-t-r1-g0", {1.0, 0.0005}},
        {"table2-t-r2-g0", {1.0, 0.0005}},
        {"table2-t-r3-g0", {1.0, 0.0005}},
        {"table2-c-r1-g0", {-0.1126, 0.0005}},
        {"table2-c-r2-g0", {-0.1265, 0.0005}},
        {"table2-c-r3-g0", {-0.1320, 0.0005}},
        {"table2-t-r1-g05", {0.4960, 0.0005}},
        {"table2-t-r2-g05", {0.4277, 0.0005}},
        {"table2-t-r3-g05", {0.3853, 0.0005}},
        {"table2-c-r1-g05", {-0.0299, 0.0005}},
        {"table2-c-r2-g05", {-0.0255, 0.0005}},
        {"table2-c-r3-g05", {-0.0218, 0.0005}},
        {"table2-cstar-bracket-t1", {-0.1446, 0.0005}},
        {"table2-cstar-bracket-r1-g05", {-0.0394, 0.0005}},
        {"table2-cstar-bracket-r2-g05", {-0.0296, 0.0005}},
        {"table2-cstar-bracket-r3-g05", {-0.0242, 0.0005}},
        {"table2-ratio-r1", {1.0, 0.005}},
        {"table2-ratio-r2", {0.5, 0.005}},
        {"table2-ratio-r3", {1.0 / 3.0, 0.005}},
    };
}

void apply_golden_overrides(GoldenMap& goldens, const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto entry = goldens.find(it.key());
        if (entry == goldens.end()) {
            throw std::invalid_argument("unknown golden check name '" + it.key() + "'");
        }
        const nlohmann::json& v = it.value();
        entry->second.reference = v.at("reference").get<double>();
        if (v.contains("tolerance")) {
            entry->second.tolerance = v.at("tolerance").get<double>();
        }
    }
}

std::vector<std::string> verify_inventory() {
    std::vector<std::string> names;
    for (const char* tag : {"r1", "r2", "r3"}) {
        std::string t = tag;
        for (const std::string& n :
             {"table2-t-" + t + "-g0", "table2-c-" + t + "-g0",
              "table2-t-" + t + "-g05", "table2-c-" + t + "-g05",
              "table2-cstar-bracket-" + t + "-g05", "limits/residuals-" + t,
              "limits/cstar-neutral-consistency-" + t,
              "limits/c-inside-bracket-" + t, "table2-ratio-" + t}) {
            names.push_back(n);
        }
    }
    for (const char* n :
         {"table2-cstar-bracket-t1", "limits/ratio-roundtrip",
          "limits/ratio-ca2-equals-ca1", "limits/that-gamma0", "limits/that-scan",
          "limits/that-huge-gamma", "limits/r-closed-form",
          "limits/scale-invariance", "limits/sweep-monotone-t-tc",
          "limits/sweep-fig5-extrema", "env/b2-plus-x1", "env/b2-plus-x09",
          "env/b2-minus-x-1", "env/b2-interior", "env/b2-monotone-layer",
          "env/b2-D-plus", "env/tt-A", "env/tt-B", "env/tt-C", "env/tt-plus-x1",
          "env/tt-interior", "env/tt-reflection", "energy/ccpb-constant",
          "energy/ccpb-zero", "energy/pb-zero", "energy/shift-invariance",
          "ion/fprime-finite-difference", "energy/local-minimality",
          "energy/pb-below-interpolant", "fem/tridiagonal-oracle",
          "table1-I-ccpb-eps3", "table1-I-ccpb-eps5", "table1-I-pb-eps3",
          "table1-I-pb-eps5", "table1-II-ccpb-eps3", "table1-II-ccpb-eps5",
          "table2-cross-phi1", "solver/trivial-constant", "solver/monotone",
          "solver/antisymmetric-boundary", "solver/concave-convex-changes",
          "solver/max-bound", "solver/interior-slope", "solver/c-eps",
          "solver/first-integral-dispersion", "solver/boundary-identity-diff",
          "solver/boundary-identity-robin", "solver/residual-contraction",
          "solver/uniqueness-ccpb", "solver/uniqueness-pb",
          "solver/pb-interior-decay", "pb-decay-bound",
          "solver/pb-monotone-mixed-sign", "solver/pb-convex-positive-data",
          "solver/limit-consistency-I-interior",
          "solver/limit-consistency-I-boundary",
          "solver/limit-consistency-II-interior",
          "solver/limit-consistency-II-boundary", "envelope-sandwich",
          "gradient-bound"}) {
        names.push_back(n);
    }
    return names;
}

DiagnosticsReport run_verify(const VerifyOptions& opts, std::ostream* log) {
    DiagnosticsReport rep;
    if (log) *log << "[verify] limits suite\n";
    limits_suite(opts.goldens, rep);
    if (log) *log << "[verify] envelope suite\n";
    envelopes_suite(rep);
    if (log) *log << "[verify] energy suite\n";
    energies_suite(rep);
    if (!opts.quick) {
        if (log) *log << "[verify] solver suite (table runs at h = 2^-11)\n";
        solver_suite(opts.goldens, opts.workers, rep, log);
    }
    return rep;
}

} // namespace ccpb
