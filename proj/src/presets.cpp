#include "ccpb/presets.hpp"

#include <cmath>
#include <tuple>
#include <utility>

namespace ccpb {

namespace {

using Pairs = std::vector<std::array<double, 2>>;

ExperimentConfig base_config(Pairs anions, Pairs cations) {
    ExperimentConfig cfg;
    cfg.species.anions = std::move(anions);
    cfg.species.cations = std::move(cations);
    cfg.phi_plus = 1.0;
    cfg.phi_minus = -1.0;
    return cfg;
}

ExperimentConfig table_run(Pairs anions, Pairs cations, EtaRule eta,
                           std::vector<double> eps, const std::string& model) {
    ExperimentConfig cfg = base_config(std::move(anions), std::move(cations));
    cfg.model = model;
    cfg.eta_rule = eta;
    cfg.eps = std::move(eps);
    cfg.grid.kind = GridSpec::Kind::uniform;
    cfg.grid.n_cells = 4096; // h = 2^-11
    return cfg;
}

ExperimentConfig sweep_run(Pairs anions, Pairs cations) {
    ExperimentConfig cfg = base_config(std::move(anions), std::move(cations));
    cfg.gammas.kind = GammaSpec::Kind::log;
    cfg.gammas.log_min = 1e-3;
    cfg.gammas.log_max = 1e3;
    cfg.gammas.count = 200;
    return cfg;
}

std::vector<Preset> build_presets() {
    const std::vector<double> table_eps = {0.5, std::pow(2.0, -3), std::pow(2.0, -5)};
    const EtaRule eta_eps2 = EtaRule::scaled(0.5, 2.0);
    const EtaRule eta_eps1 = EtaRule::scaled(0.5, 1.0);

    std::vector<Preset> out;

    // Potential-profile runs: species (1.2; 0.4, 0.4), valences (1; 1, 2).
    const Pairs an_I = {{1.0, 1.2}};
    const Pairs ca_I = {{1.0, 0.4}, {2.0, 0.4}};
    out.push_back({"fig2-I", "solve",
                   "CCPB profiles, eta = 0.5 eps^2 (gamma -> 0)",
                   {{"I", table_run(an_I, ca_I, eta_eps2, table_eps, "ccpb")}}});
    out.push_back({"fig2-I-pb", "solve",
                   "PB profiles for the same preset",
                   {{"I", table_run(an_I, ca_I, eta_eps2, table_eps, "pb")}}});
    out.push_back({"fig2-II", "solve",
                   "CCPB profiles, eta = 0.5 eps (gamma = 0.5)",
                   {{"II", table_run(an_I, ca_I, eta_eps1, table_eps, "ccpb")}}});
    out.push_back({"fig2-II-pb", "solve",
                   "PB profiles for the same preset",
                   {{"II", table_run(an_I, ca_I, eta_eps1, table_eps, "pb")}}});

    // Boundary/interior values vs the concentration ratio: beta1 fixed to 1,
    // beta1/beta2 in {1, 1/2, 1/3}, eps = 2^-5, three eta rules.
    {
        Preset p{"table2-solve", "solve",
                 "CCPB boundary and interior values for beta1/beta2 = 1, 1/2, 1/3",
                 {}};
        const std::vector<std::pair<std::string, Pairs>> systems = {
            {"r1", {{1.0, 3.0}}}, {"r2", {{1.0, 5.0}}}, {"r3", {{1.0, 7.0}}}};
        const std::vector<std::pair<std::string, Pairs>> cations = {
            {"r1", {{1.0, 1.0}, {2.0, 1.0}}},
            {"r2", {{1.0, 1.0}, {2.0, 2.0}}},
            {"r3", {{1.0, 1.0}, {2.0, 3.0}}}};
        const std::vector<std::pair<std::string, EtaRule>> etas = {
            {"eta0", EtaRule::zero()},
            {"eta-eps2", eta_eps2},
            {"eta-eps", eta_eps1}};
        for (std::size_t i = 0; i < systems.size(); ++i) {
            for (const auto& [ename, rule] : etas) {
                p.jobs.push_back(
                    {systems[i].first + "-" + ename,
                     table_run(systems[i].second, cations[i].second, rule,
                               {std::pow(2.0, -5)}, "ccpb")});
            }
        }
        out.push_back(std::move(p));
    }

    // Limit pairs (t, c) for the same three ratio systems.
    {
        Preset p{"table2-limits", "limits",
                 "limit values t, c and both c* variants at gamma = 0 and 0.5",
                 {}};
        const std::vector<std::pair<Pairs, Pairs>> systems = {
            {{{1.0, 3.0}}, {{1.0, 1.0}, {2.0, 1.0}}},
            {{{1.0, 5.0}}, {{1.0, 1.0}, {2.0, 2.0}}},
            {{{1.0, 7.0}}, {{1.0, 1.0}, {2.0, 3.0}}}};
        const char* labels[] = {"r1", "r2", "r3"};
        for (std::size_t i = 0; i < systems.size(); ++i) {
            ExperimentConfig cfg = base_config(systems[i].first, systems[i].second);
            cfg.gammas.kind = GammaSpec::Kind::list;
            cfg.gammas.values = {0.0, 0.5};
            p.jobs.push_back({labels[i], std::move(cfg)});
        }
        out.push_back(std::move(p));
    }

    // gamma sweeps, three-species family: b = (1,2) cations, single anion of
    // valence 1, 2, 3 carrying the same total charge 1.2.
    const std::vector<std::pair<std::string, Pairs>> fig3_anions = {
        {"a1", {{1.0, 1.2}}}, {"a2", {{2.0, 0.6}}}, {"a3", {{3.0, 0.4}}}};
    {
        Preset p{"fig3-I", "sweep", "t(gamma), c(gamma); cations (1.199, 0.0005)", {}};
        for (const auto& [label, an] : fig3_anions) {
            p.jobs.push_back({label, sweep_run(an, {{1.0, 1.199}, {2.0, 0.0005}})});
        }
        out.push_back(std::move(p));
    }
    {
        Preset p{"fig3-II", "sweep", "t(gamma), c(gamma); cations (0.002, 0.599)", {}};
        for (const auto& [label, an] : fig3_anions) {
            p.jobs.push_back({label, sweep_run(an, {{1.0, 0.002}, {2.0, 0.599}})});
        }
        out.push_back(std::move(p));
    }

    // Four-species sweeps.
    {
        Preset p{"fig4-1", "sweep",
                 "single anion of valence 1..4 against cations (0.25, 0.25, 0.25)",
                 {}};
        const Pairs ca = {{1.0, 0.25}, {2.0, 0.25}, {3.0, 0.25}};
        const std::vector<std::pair<std::string, Pairs>> anions = {
            {"a1", {{1.0, 1.5}}},
            {"a2", {{2.0, 0.75}}},
            {"a3", {{3.0, 0.5}}},
            {"a4", {{4.0, 0.375}}}};
        for (const auto& [label, an] : anions) p.jobs.push_back({label, sweep_run(an, ca)});
        out.push_back(std::move(p));
    }
    const std::vector<std::pair<std::string, Pairs>> fig4_anions = {
        {"1", {{1.0, 0.3}, {2.0, 0.6}}},
        {"2", {{1.0, 0.5}, {2.0, 0.5}}},
        {"3", {{1.0, 0.75}, {2.0, 0.375}}}};
    const std::vector<std::pair<std::string, Pairs>> fig4_cations = {
        {"fig4-2", {{1.0, 0.75}, {2.0, 0.375}}},
        {"fig4-3", {{1.0, 0.5}, {2.0, 0.5}}},
        {"fig4-4", {{1.0, 0.3}, {2.0, 0.6}}}};
    for (const auto& [name, ca] : fig4_cations) {
        Preset p{name, "sweep", "two anion and two cation species, a = b = (1,2)", {}};
        for (const auto& [label, an] : fig4_anions) p.jobs.push_back({label, sweep_run(an, ca)});
        out.push_back(std::move(p));
    }

    // Non-monotone c(gamma) cases.
    {
        const std::vector<std::tuple<std::string, Pairs, Pairs>> cases = {
            {"fig5-A", {{2.0, 0.75}}, {{1.0, 0.9}, {2.0, 0.12}, {3.0, 0.12}}},
            {"fig5-B", {{2.0, 0.75}}, {{1.0, 1.23}, {2.0, 0.03}, {3.0, 0.03}, {4.0, 0.03}}},
            {"fig5-C", {{3.0, 0.5}}, {{1.0, 0.6}, {2.0, 0.1}, {3.0, 0.1}, {4.0, 0.1}}},
            {"fig5-D", {{3.0, 0.5}}, {{1.0, 0.1}, {2.0, 0.35}, {3.0, 0.1}, {4.0, 0.1}}}};
        for (const auto& [name, an, ca] : cases) {
            out.push_back({name, "sweep", "non-monotone interior limit c(gamma)",
                           {{"main", sweep_run(an, ca)}}});
        }
    }

    // Non-electroneutral demo: alpha = 1, beta = 2, boundary-graded meshes.
    {
        ExperimentConfig cfg = base_config({{1.0, 1.0}}, {{1.0, 2.0}});
        cfg.phi_plus = 0.0;
        cfg.phi_minus = 0.0;
        cfg.eta_rule = EtaRule::zero();
        cfg.eps = {std::pow(2.0, -3), std::pow(2.0, -4), std::pow(2.0, -5)};
        cfg.grid.kind = GridSpec::Kind::graded_auto;
        cfg.grid.growth = 1.15;
        cfg.grid.interior_h = 1.0 / 512.0;
        cfg.kappa = 0.5;
        out.push_back({"nonneutral-demo", "nonneutral",
                       "boundary charge accumulation for alpha = 1 < beta = 2",
                       {{"main", std::move(cfg)}}});
    }
    return out;
}

} // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

const Preset* find_preset(const std::string& name) {
    for (const Preset& p : presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

} // namespace ccpb
