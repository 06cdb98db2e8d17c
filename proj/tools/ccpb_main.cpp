#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccpb/asymptotics.hpp"
#include "ccpb/csv.hpp"
#include "ccpb/limits.hpp"
#include "ccpb/parallel.hpp"
#include "ccpb/presets.hpp"
#include "ccpb/solver.hpp"
#include "ccpb/tables.hpp"
#include "ccpb/verify.hpp"

namespace fs = std::filesystem;
using namespace ccpb;

namespace {

struct CommonOpts {
    std::string preset;
    std::string config_path;
    std::string out_dir = ".";
    int workers = 0;
    bool dump_config = false;
    bool list_presets = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--preset", opts.preset, "named experiment preset");
    cmd->add_option("--config", opts.config_path, "JSON config file");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--workers", opts.workers, "worker thread budget (0 = auto)");
    cmd->add_flag("--dump-config", opts.dump_config,
                  "print the resolved config as JSON and exit");
    cmd->add_flag("--list-presets", opts.list_presets,
                  "list experiment presets and exit");
}

int list_all_presets() {
    for (const Preset& p : presets()) {
        std::cout << p.name << "  [" << p.command << "]  " << p.description << " ("
                  << p.jobs.size() << (p.jobs.size() == 1 ? " job)" : " jobs)")
                  << "\n";
    }
    return 0;
}

std::vector<PresetJob> resolve_jobs(const CommonOpts& opts, const std::string& command) {
    if (!opts.preset.empty() && !opts.config_path.empty()) {
        throw std::runtime_error("give either --preset or --config, not both");
    }
    if (!opts.preset.empty()) {
        const Preset* p = find_preset(opts.preset);
        if (!p) {
            throw std::runtime_error("unknown preset '" + opts.preset +
                                     "' (see --list-presets)");
        }
        if (p->command != command) {
            throw std::runtime_error("preset '" + opts.preset + "' belongs to the '" +
                                     p->command + "' command");
        }
        return p->jobs;
    }
    if (!opts.config_path.empty()) {
        return {{"run", load_config(opts.config_path)}};
    }
    throw std::runtime_error("need --preset NAME or --config PATH");
}

int maybe_dump(const CommonOpts& opts, const std::vector<PresetJob>& jobs) {
    if (!opts.dump_config) return -1;
    if (jobs.size() == 1) {
        std::cout << dump_config(jobs[0].config) << "\n";
    } else {
        std::cout << "[\n";
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            std::cout << dump_config(jobs[i].config)
                      << (i + 1 < jobs.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
    }
    return 0;
}

std::string job_prefix(const PresetJob& job) {
    return (job.label.empty() || job.label == "run" || job.label == "main" ||
            job.label == "I" || job.label == "II")
               ? ""
               : job.label + "_";
}

int cmd_solve(const CommonOpts& opts) {
    if (opts.list_presets) return list_all_presets();
    std::vector<PresetJob> jobs = resolve_jobs(opts, "solve");
    if (int rc = maybe_dump(opts, jobs); rc >= 0) return rc;
    fs::create_directories(opts.out_dir);

    struct Item {
        std::size_t job;
        double eps;
        std::optional<SolveReport> report;
    };
    // flatten (job, eps) work items
    std::vector<Item> items;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        for (double e : jobs[j].config.eps) {
            items.push_back({j, e, std::nullopt});
        }
    }
    parallel_for(items.size(), opts.workers, [&](std::size_t i) {
        const ExperimentConfig& cfg = jobs[items[i].job].config;
        IonSystem sys = cfg.species.build();
        BoundaryData bd(cfg.phi_plus, cfg.phi_minus, cfg.eta_rule.eta(items[i].eps));
        SolverConfig scfg = cfg.solver.build();
        scfg.record_residuals = false;
        items[i].report = solve(sys, bd, items[i].eps, cfg.grid.build(items[i].eps),
                                scfg, cfg.model_enum());
    });

    bool failed = false;
    for (const Item& it : items) {
        const ExperimentConfig& cfg = jobs[it.job].config;
        if (!it.report->converged) {
            std::cerr << "solve " << jobs[it.job].label << " eps=" << it.eps
                      << " model=" << cfg.model << " did not converge after "
                      << it.report->iterations
                      << " iterations, ||delta|| = " << it.report->final_delta_sup
                      << (it.report->diverged ? " (diverged)" : "") << "\n"
                      << (it.report->message.empty() ? "" : it.report->message + "\n");
            failed = true;
        }
    }
    if (failed) return 1;

    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const ExperimentConfig& cfg = jobs[j].config;
        std::string prefix = job_prefix(jobs[j]);
        CsvTable summary = summary_table(cfg.outputs.precision);
        for (const Item& it : items) {
            if (it.job != j) continue;
            const Field& f = it.report->field;
            CsvTable table = solution_table(f, cfg.outputs.precision);
            std::string name = prefix + "phi_" + cfg.model + "_eps" +
                               format_sig(it.eps, 6) + ".csv";
            table.write((fs::path(opts.out_dir) / name).string());

            std::size_t mid = f.grid->index_nearest(0.0);
            summary.add_row({it.eps, f.values[mid], f.values.back(),
                             static_cast<double>(it.report->iterations),
                             it.report->first_integral_constant});
        }
        std::string sname = prefix + "summary_" + cfg.model + ".csv";
        summary.write((fs::path(opts.out_dir) / sname).string());
        std::cout << "wrote " << sname << " (" << summary.rows.size() << " rows)\n";
    }
    return 0;
}

int cmd_limits(const CommonOpts& opts) {
    if (opts.list_presets) return list_all_presets();
    std::vector<PresetJob> jobs = resolve_jobs(opts, "limits");
    if (int rc = maybe_dump(opts, jobs); rc >= 0) return rc;
    fs::create_directories(opts.out_dir);
    for (const PresetJob& job : jobs) {
        CsvTable table = limit_table(job.config.species.build(), job.config.phi_plus,
                                     job.config.gammas.build(),
                                     job.config.outputs.precision);
        std::string name = job_prefix(job) + "limits.csv";
        table.write((fs::path(opts.out_dir) / name).string());
        std::cout << "wrote " << name << " (" << table.rows.size() << " rows)\n";
    }
    return 0;
}

int cmd_sweep(const CommonOpts& opts) {
    if (opts.list_presets) return list_all_presets();
    std::vector<PresetJob> jobs = resolve_jobs(opts, "sweep");
    if (int rc = maybe_dump(opts, jobs); rc >= 0) return rc;
    fs::create_directories(opts.out_dir);

    std::vector<CsvTable> tables(jobs.size());
    std::vector<SweepTable> sweeps(jobs.size());
    parallel_for(jobs.size(), opts.workers, [&](std::size_t i) {
        tables[i] = limit_table(jobs[i].config.species.build(),
                                jobs[i].config.phi_plus,
                                jobs[i].config.gammas.build(),
                                jobs[i].config.outputs.precision, &sweeps[i]);
    });
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::string name = job_prefix(jobs[i]) + "sweep.csv";
        tables[i].write((fs::path(opts.out_dir) / name).string());
        std::cout << name << ": monotone_t=" << (sweeps[i].monotone_t ? "true" : "false")
                  << " monotone_tc=" << (sweeps[i].monotone_tc ? "true" : "false")
                  << " c_extrema=" << sweeps[i].c_extrema.size() << "\n";
    }
    return 0;
}

int cmd_nonneutral(const CommonOpts& opts) {
    if (opts.list_presets) return list_all_presets();
    std::vector<PresetJob> jobs = resolve_jobs(opts, "nonneutral");
    if (int rc = maybe_dump(opts, jobs); rc >= 0) return rc;
    fs::create_directories(opts.out_dir);

    int failures = 0;
    for (const PresetJob& job : jobs) {
        const ExperimentConfig& cfg = job.config;
        IonSystem sys = cfg.species.build();
        if (sys.anions().size() != 1 || sys.cations().size() != 1 ||
            sys.anions()[0].valence != 1.0 || sys.cations()[0].valence != 1.0) {
            throw std::runtime_error(
                "nonneutral needs the monovalent two-species pattern");
        }
        double alpha = sys.anions()[0].concentration;
        double beta = sys.cations()[0].concentration;
        if (!(alpha < beta)) {
            throw std::runtime_error(
                "nonneutral needs alpha < beta; swap the species roles");
        }

        std::vector<DiagnosticsReport> reports(cfg.eps.size());
        std::vector<std::optional<SolveReport>> solves(cfg.eps.size());
        parallel_for(cfg.eps.size(), opts.workers, [&](std::size_t i) {
            double eps = cfg.eps[i];
            BoundaryData bd(cfg.phi_plus, cfg.phi_minus, cfg.eta_rule.eta(eps));
            SolverConfig scfg = cfg.solver.build();
            scfg.record_residuals = false;
            solves[i] = solve(sys, bd, eps, cfg.grid.build(eps), scfg,
                              cfg.model_enum());
            if (solves[i]->converged) {
                reports[i] = nonneutral_checks(solves[i]->field, alpha, beta, eps,
                                               cfg.kappa);
            }
        });

        std::ostringstream csv;
        csv << "check,eps,value,reference,tolerance,pass\n";
        for (std::size_t i = 0; i < cfg.eps.size(); ++i) {
            if (!solves[i]->converged) {
                std::cerr << "nonneutral eps=" << cfg.eps[i] << " did not converge: "
                          << solves[i]->message << "\n";
                return 1;
            }
            const Field& f = solves[i]->field;
            CsvTable prof = solution_table(f, cfg.outputs.precision);
            prof.write((fs::path(opts.out_dir) /
                        (job_prefix(job) + "phi_" + cfg.model + "_eps" +
                         format_sig(cfg.eps[i], 6) + ".csv"))
                           .string());
            for (const CheckResult& c : reports[i].checks) {
                csv << c.name << ',' << format_sig(cfg.eps[i], 6) << ','
                    << format_sig(c.value, cfg.outputs.precision) << ','
                    << format_sig(c.reference, cfg.outputs.precision) << ','
                    << format_sig(c.tolerance, cfg.outputs.precision) << ','
                    << (c.pass ? "true" : "false") << '\n';
                std::cout << (c.pass ? "[PASS] " : (c.advisory ? "[warn] " : "[FAIL] "))
                          << "eps=" << format_sig(cfg.eps[i], 6) << " " << c.name
                          << ": value " << format_sig(c.value, 6) << " vs "
                          << format_sig(c.reference, 6) << " +- "
                          << format_sig(c.tolerance, 6) << "\n";
                if (!c.pass && !c.advisory) ++failures;
            }
        }
        std::ofstream out(fs::path(opts.out_dir) /
                          (job_prefix(job) + "nonneutral_checks.csv"));
        out << csv.str();
    }
    if (failures > 0) {
        std::cout << failures << " check(s) outside tolerance (see above)\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& golden_path, bool list) {
    if (list) {
        for (const std::string& name : verify_inventory()) {
            std::cout << name << "\n";
        }
        return 0;
    }
    VerifyOptions vopts;
    vopts.workers = opts.workers;
    if (!golden_path.empty()) {
        std::ifstream in(golden_path);
        if (!in) {
            std::cerr << "cannot open golden file " << golden_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        apply_golden_overrides(vopts.goldens, ss.str());
    }
    DiagnosticsReport rep = run_verify(vopts, &std::cout);
    int failed = 0;
    for (const CheckResult& c : rep.checks) {
        bool counted = !c.pass && !c.advisory;
        if (counted) ++failed;
        std::cout << (c.pass ? "[PASS] " : (c.advisory ? "[warn] " : "[FAIL] "))
                  << c.name << ": value " << format_sig(c.value, 6);
        if (std::isfinite(c.tolerance)) {
            std::cout << " vs " << format_sig(c.reference, 6) << " +- "
                      << format_sig(c.tolerance, 6);
        }
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << (failed == 0 ? "verify: all checks passed"
                              : "verify: " + std::to_string(failed) + " check(s) failed")
              << " (" << rep.checks.size() << " total)\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"charge-conserving Poisson-Boltzmann boundary-layer toolkit"};
    app.require_subcommand(0, 1);
    bool list_presets = false;
    app.add_flag("--list-presets", list_presets, "list experiment presets and exit");

    CommonOpts solve_opts, limits_opts, sweep_opts, nn_opts, verify_opts;
    CLI::App* c_solve = app.add_subcommand("solve", "solve the two-point BVP per eps");
    add_common(c_solve, solve_opts);
    CLI::App* c_limits = app.add_subcommand("limits", "zero-eps limit pairs (t, c)");
    add_common(c_limits, limits_opts);
    CLI::App* c_sweep = app.add_subcommand("sweep", "gamma sweeps with monotonicity");
    add_common(c_sweep, sweep_opts);
    CLI::App* c_nn = app.add_subcommand("nonneutral", "non-electroneutral diagnostics");
    add_common(c_nn, nn_opts);
    CLI::App* c_verify = app.add_subcommand("verify", "run the invariant check suites");
    add_common(c_verify, verify_opts);
    std::string golden_path;
    bool verify_list = false;
    c_verify->add_option("--golden", golden_path, "golden value overrides (JSON)");
    c_verify->add_flag("--list", verify_list, "print the check inventory and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_presets) return list_all_presets();
        if (c_solve->parsed()) return cmd_solve(solve_opts);
        if (c_limits->parsed()) return cmd_limits(limits_opts);
        if (c_sweep->parsed()) return cmd_sweep(sweep_opts);
        if (c_nn->parsed()) return cmd_nonneutral(nn_opts);
        if (c_verify->parsed()) return cmd_verify(verify_opts, golden_path, verify_list);
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
