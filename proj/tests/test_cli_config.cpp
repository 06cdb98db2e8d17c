#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "ccpb/config.hpp"
#include "ccpb/csv.hpp"
#include "ccpb/presets.hpp"
#include "ccpb/tables.hpp"
#include "ccpb/verify.hpp"

using namespace ccpb;

TEST_CASE("config parsing with defaults") {
    ExperimentConfig cfg = parse_config(R"({
        "species": {"anions": [[1, 1.2]], "cations": [[1, 0.4], [2, 0.4]]},
        "eps": [0.5, 0.125]
    })");
    CHECK(cfg.model == "ccpb");
    CHECK(cfg.phi_plus == 1.0);
    CHECK(cfg.phi_minus == -1.0);
    CHECK(cfg.eta_rule.kind == EtaRule::Kind::zero);
    CHECK(cfg.grid.kind == GridSpec::Kind::uniform);
    CHECK(cfg.solver.tol == 1e-6);
    CHECK(cfg.solver.max_iter == 2'000'000);
    CHECK(cfg.kappa == 0.5);
}

TEST_CASE("unknown keys are rejected at every level") {
    CHECK_THROWS_AS(parse_config(R"({
        "species": {"anions": [[1, 1]], "cations": [[1, 1]]},
        "sigma": 2
    })"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({
        "species": {"anions": [[1, 1]], "cations": [[1, 1]], "extra": 1}
    })"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({
        "species": {"anions": [[1, 1]], "cations": [[1, 1]]},
        "solver": {"speed": 9}
    })"),
                    std::invalid_argument);
}

TEST_CASE("config validation") {
    CHECK_THROWS(parse_config(R"({"eps": [0.5]})")); // species required
    CHECK_THROWS_AS(parse_config(R"({
        "species": {"anions": [[1, 1]], "cations": [[1, 1]]},
        "eps": [1.5]
    })"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({
        "species": {"anions": [[1, 1]], "cations": [[1, 1]]},
        "model": "pnp"
    })"),
                    std::invalid_argument);
}

TEST_CASE("dump-parse round trip is exact for every preset job") {
    for (const Preset& p : presets()) {
        for (const PresetJob& job : p.jobs) {
            ExperimentConfig round = parse_config(dump_config(job.config));
            CHECK(round == job.config);
        }
    }
}

TEST_CASE("eta rules") {
    CHECK(EtaRule::zero().eta(0.25) == 0.0);
    CHECK(EtaRule::zero().gamma_limit() == 0.0);
    CHECK(EtaRule::constant(0.3).eta(0.25) == 0.3);
    CHECK(std::isinf(EtaRule::constant(0.3).gamma_limit()));
    EtaRule scaled2 = EtaRule::scaled(0.5, 2.0);
    CHECK(scaled2.eta(0.25) == doctest::Approx(0.03125));
    CHECK(scaled2.gamma_limit() == 0.0);
    EtaRule scaled1 = EtaRule::scaled(0.5, 1.0);
    CHECK(scaled1.gamma_limit() == 0.5);
    CHECK(std::isinf(EtaRule::scaled(0.5, 0.5).gamma_limit()));
}

TEST_CASE("preset inventory matches the published parameter sets") {
    std::set<std::string> names;
    for (const Preset& p : presets()) names.insert(p.name);
    std::set<std::string> expected = {
        "fig2-I",  "fig2-I-pb", "fig2-II", "fig2-II-pb", "table2-solve",
        "table2-limits", "fig3-I", "fig3-II", "fig4-1", "fig4-2",
        "fig4-3", "fig4-4", "fig5-A", "fig5-B", "fig5-C", "fig5-D",
        "nonneutral-demo"};
    CHECK(names == expected);

    CHECK(find_preset("fig3-I")->jobs.size() == 3);
    CHECK(find_preset("fig4-1")->jobs.size() == 4);
    CHECK(find_preset("table2-solve")->jobs.size() == 9);
    CHECK(find_preset("nope") == nullptr);

    // every preset validates: species build and electroneutrality where the
    // command requires it
    for (const Preset& p : presets()) {
        for (const PresetJob& job : p.jobs) {
            IonSystem sys = job.config.species.build();
            if (p.command == "limits" || p.command == "sweep") {
                CHECK(sys.electroneutral());
            }
        }
    }
}

TEST_CASE("csv formatting is deterministic with six significant digits") {
    CHECK(format_sig(0.4959789693838814, 6) == "0.495979");
    CHECK(format_sig(-0.029887829, 6) == "-0.0298878");
    CHECK(format_sig(2.0, 6) == "2");

    CsvTable t;
    t.header = {"a", "b"};
    t.add_row({0.123456789, -1.0});
    t.add_row({3e-7, 1e6});
    CHECK(t.to_string() == "a,b\n0.123457,-1\n3e-07,1e+06\n");
    CHECK(t.to_string() == t.to_string());
    CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
}

TEST_CASE("output tables carry the pinned headers") {
    IonSystem sys({{1.0, 3.0}}, {{1.0, 1.0}, {2.0, 1.0}});
    CsvTable limits = limit_table(sys, 1.0, {0.0, 0.5}, 6);
    CHECK(limits.to_string().rfind(
              "gamma,t,c,t_minus_c,c_star_neutral,c_star_bracket\n", 0) == 0);
    // the published row: gamma 0 -> t = 1, c = -0.1126, bracket -0.1446
    CHECK(limits.to_string().find("0,1,-0.11258,1.11258,-0.11258,-0.144594\n") !=
          std::string::npos);

    auto grid = std::make_shared<const Grid>(Grid::uniform(4));
    CsvTable sol = solution_table(Field::constant(grid, 0.25), 6);
    CHECK(sol.to_string().rfind("x,phi\n", 0) == 0);
    CHECK(sol.rows.size() == 5);

    CHECK(summary_table(6).to_string() == "eps,phi0,phi1,iters,c_eps\n");
}

TEST_CASE("golden overrides reject unknown names and apply known ones") {
    GoldenMap g = default_goldens();
    CHECK(g.at("table1-I-ccpb-eps5").reference == doctest::Approx(-0.1081));
    apply_golden_overrides(g, R"({"table1-I-ccpb-eps5": {"reference": -0.2}})");
    CHECK(g.at("table1-I-ccpb-eps5").reference == doctest::Approx(-0.2));
    CHECK_THROWS_AS(apply_golden_overrides(g, R"({"mystery": {"reference": 0}})"),
                    std::invalid_argument);
}

TEST_CASE("verify inventory lists the check names without computing") {
    std::vector<std::string> names = verify_inventory();
    CHECK(names.size() > 50);
    std::set<std::string> set(names.begin(), names.end());
    CHECK(set.count("table1-I-ccpb-eps5") == 1);
    CHECK(set.count("envelope-sandwich") == 1);
    CHECK(set.count("limits/sweep-fig5-extrema") == 1);
}
