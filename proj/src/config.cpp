#include "ccpb/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ccpb/limits.hpp"

namespace ccpb {

using nlohmann::json;

double EtaRule::eta(double eps) const {
    switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::constant: return coef;
        case Kind::scaled: return coef * std::pow(eps, power);
    }
    return 0.0;
}

double EtaRule::gamma_limit() const {
    switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::constant:
            return coef == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        case Kind::scaled:
            if (coef == 0.0 || power > 1.0) return 0.0;
            if (power == 1.0) return coef;
            return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

IonSystem SpeciesSpec::build() const {
    std::vector<Species> an, ca;
    for (const auto& s : anions) an.push_back({s[0], s[1]});
    for (const auto& s : cations) ca.push_back({s[0], s[1]});
    return IonSystem(std::move(an), std::move(ca));
}

std::shared_ptr<const Grid> GridSpec::build(double eps) const {
    switch (kind) {
        case Kind::uniform:
            return std::make_shared<const Grid>(Grid::uniform(n_cells));
        case Kind::graded:
            return std::make_shared<const Grid>(
                Grid::graded(min_cell, growth, interior_h));
        case Kind::graded_auto: {
            double h_int = interior_h > 0.0 ? interior_h : 1.0 / 512.0;
            double mc = std::min(eps * eps / 20.0, h_int);
            return std::make_shared<const Grid>(Grid::graded(mc, growth, h_int));
        }
    }
    throw std::logic_error("unreachable grid kind");
}

SolverConfig SolverSpec::build() const {
    SolverConfig cfg;
    cfg.relax_s = relax_s;
    cfg.relax_C = relax_c;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    if (init == "linear") {
        cfg.init = SolverConfig::Init::linear;
    } else if (init == "zero") {
        cfg.init = SolverConfig::Init::zero;
    } else {
        throw std::invalid_argument("solver.init must be 'linear' or 'zero'");
    }
    return cfg;
}

std::vector<double> GammaSpec::build() const {
    if (kind == Kind::list) return values;
    return log_spaced(log_min, log_max, count);
}

Model ExperimentConfig::model_enum() const {
    if (model == "ccpb") return Model::ccpb;
    if (model == "pb") return Model::pb;
    throw std::invalid_argument("model must be 'ccpb' or 'pb'");
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key())) {
            throw std::invalid_argument("unknown config key '" + it.key() + "' in " +
                                        where);
        }
    }
}

std::vector<std::array<double, 2>> parse_pairs(const json& j, const std::string& where) {
    std::vector<std::array<double, 2>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument(where + " entries must be [valence, concentration]");
        }
        out.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return out;
}

EtaRule parse_eta(const json& j) {
    reject_unknown(j, {"kind", "coef", "power", "value"}, "eta_rule");
    std::string kind = j.value("kind", "zero");
    if (kind == "zero") return EtaRule::zero();
    if (kind == "const") return EtaRule::constant(j.at("value").get<double>());
    if (kind == "scaled") {
        return EtaRule::scaled(j.at("coef").get<double>(), j.at("power").get<double>());
    }
    throw std::invalid_argument("eta_rule.kind must be zero|const|scaled");
}

json dump_eta(const EtaRule& r) {
    switch (r.kind) {
        case EtaRule::Kind::zero: return json{{"kind", "zero"}};
        case EtaRule::Kind::constant: return json{{"kind", "const"}, {"value", r.coef}};
        case EtaRule::Kind::scaled:
            return json{{"kind", "scaled"}, {"coef", r.coef}, {"power", r.power}};
    }
    return {};
}

GridSpec parse_grid(const json& j) {
    reject_unknown(j, {"kind", "n_cells", "min_cell", "growth", "interior_h"}, "grid");
    GridSpec g;
    std::string kind = j.value("kind", "uniform");
    if (kind == "uniform") {
        g.kind = GridSpec::Kind::uniform;
        g.n_cells = j.value("n_cells", 4096);
    } else if (kind == "graded") {
        g.kind = GridSpec::Kind::graded;
        g.min_cell = j.at("min_cell").get<double>();
        g.growth = j.value("growth", 1.15);
        g.interior_h = j.at("interior_h").get<double>();
    } else if (kind == "graded-auto") {
        g.kind = GridSpec::Kind::graded_auto;
        g.growth = j.value("growth", 1.15);
        g.interior_h = j.value("interior_h", 0.0);
    } else {
        throw std::invalid_argument("grid.kind must be uniform|graded|graded-auto");
    }
    return g;
}

json dump_grid(const GridSpec& g) {
    switch (g.kind) {
        case GridSpec::Kind::uniform:
            return json{{"kind", "uniform"}, {"n_cells", g.n_cells}};
        case GridSpec::Kind::graded:
            return json{{"kind", "graded"},
                        {"min_cell", g.min_cell},
                        {"growth", g.growth},
                        {"interior_h", g.interior_h}};
        case GridSpec::Kind::graded_auto:
            return json{{"kind", "graded-auto"},
                        {"growth", g.growth},
                        {"interior_h", g.interior_h}};
    }
    return {};
}

GammaSpec parse_gammas(const json& j) {
    GammaSpec g;
    if (j.is_array()) {
        g.kind = GammaSpec::Kind::list;
        g.values = j.get<std::vector<double>>();
        return g;
    }
    reject_unknown(j, {"kind", "values", "min", "max", "count"}, "gammas");
    std::string kind = j.value("kind", "log");
    if (kind == "list") {
        g.kind = GammaSpec::Kind::list;
        g.values = j.at("values").get<std::vector<double>>();
    } else if (kind == "log") {
        g.kind = GammaSpec::Kind::log;
        g.log_min = j.value("min", 1e-3);
        g.log_max = j.value("max", 1e3);
        g.count = j.value("count", std::size_t{200});
    } else {
        throw std::invalid_argument("gammas.kind must be list|log");
    }
    return g;
}

json dump_gammas(const GammaSpec& g) {
    if (g.kind == GammaSpec::Kind::list) {
        return json{{"kind", "list"}, {"values", g.values}};
    }
    return json{{"kind", "log"}, {"min", g.log_min}, {"max", g.log_max},
                {"count", g.count}};
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json j = json::parse(json_text);
    reject_unknown(j,
                   {"model", "species", "phi_plus", "phi_minus", "eta_rule", "eps",
                    "grid", "solver", "outputs", "gammas", "kappa"},
                   "config root");
    ExperimentConfig cfg;
    cfg.model = j.value("model", "ccpb");
    if (cfg.model != "ccpb" && cfg.model != "pb") {
        throw std::invalid_argument("model must be 'ccpb' or 'pb'");
    }
    if (!j.contains("species")) {
        throw std::invalid_argument("config needs a species block");
    }
    const json& sp = j.at("species");
    reject_unknown(sp, {"anions", "cations"}, "species");
    cfg.species.anions = parse_pairs(sp.at("anions"), "species.anions");
    cfg.species.cations = parse_pairs(sp.at("cations"), "species.cations");
    cfg.species.build(); // validate now

    cfg.phi_plus = j.value("phi_plus", 1.0);
    cfg.phi_minus = j.value("phi_minus", -1.0);
    if (j.contains("eta_rule")) cfg.eta_rule = parse_eta(j.at("eta_rule"));
    if (j.contains("eps")) {
        cfg.eps = j.at("eps").get<std::vector<double>>();
        for (double e : cfg.eps) {
            if (!(e > 0.0) || !(e < 1.0)) {
                throw std::invalid_argument("eps values must lie in (0,1)");
            }
        }
    }
    if (j.contains("grid")) cfg.grid = parse_grid(j.at("grid"));
    if (j.contains("solver")) {
        const json& s = j.at("solver");
        reject_unknown(s, {"s", "relax_c", "tol", "max_iter", "init"}, "solver");
        cfg.solver.relax_s = s.value("s", 0.0);
        cfg.solver.relax_c = s.value("relax_c", 0.5);
        cfg.solver.tol = s.value("tol", 1e-6);
        cfg.solver.max_iter = s.value("max_iter", 2'000'000L);
        cfg.solver.init = s.value("init", "linear");
        cfg.solver.build(); // validate
    }
    if (j.contains("outputs")) {
        const json& o = j.at("outputs");
        reject_unknown(o, {"dir", "precision"}, "outputs");
        cfg.outputs.dir = o.value("dir", ".");
        cfg.outputs.precision = o.value("precision", 6);
    }
    if (j.contains("gammas")) cfg.gammas = parse_gammas(j.at("gammas"));
    cfg.kappa = j.value("kappa", 0.5);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const ExperimentConfig& cfg) {
    json j;
    j["model"] = cfg.model;
    j["species"] = {{"anions", cfg.species.anions}, {"cations", cfg.species.cations}};
    j["phi_plus"] = cfg.phi_plus;
    j["phi_minus"] = cfg.phi_minus;
    j["eta_rule"] = dump_eta(cfg.eta_rule);
    j["eps"] = cfg.eps;
    j["grid"] = dump_grid(cfg.grid);
    j["solver"] = {{"s", cfg.solver.relax_s},
                   {"relax_c", cfg.solver.relax_c},
                   {"tol", cfg.solver.tol},
                   {"max_iter", cfg.solver.max_iter},
                   {"init", cfg.solver.init}};
    j["outputs"] = {{"dir", cfg.outputs.dir}, {"precision", cfg.outputs.precision}};
    j["gammas"] = dump_gammas(cfg.gammas);
    j["kappa"] = cfg.kappa;
    return j.dump(2);
}

} // namespace ccpb
