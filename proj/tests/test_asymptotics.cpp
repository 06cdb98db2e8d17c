#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ccpb/asymptotics.hpp"
#include "ccpb/fem.hpp"
#include "ccpb/solver.hpp"

using namespace ccpb;

namespace {

IonSystem preset() { return IonSystem({{1.0, 1.2}}, {{1.0, 0.4}, {2.0, 0.4}}); }

SolveReport solve_preset_I(double eps, int n_cells) {
    BoundaryData bd(1.0, -1.0, 0.5 * eps * eps);
    SolverConfig cfg;
    cfg.record_residuals = false;
    auto grid = std::make_shared<const Grid>(Grid::uniform(n_cells));
    SolveReport r = solve(preset(), bd, eps, grid, cfg, Model::ccpb);
    REQUIRE(r.converged);
    return r;
}

} // namespace

TEST_CASE("b2 envelope frozen values") {
    const double t = 1.0, c = -0.1126, eps = std::pow(2.0, -5);
    // direct substitution into the closed form, computed independently
    CHECK(envelope_b2(1.2, 0.4, t, c, eps, Side::plus, 1.0) ==
          doctest::Approx(0.15658352862267316).epsilon(1e-13));
    CHECK(envelope_b2(1.2, 0.4, t, c, eps, Side::plus, 0.98) ==
          doctest::Approx(-0.057984842968045535).epsilon(1e-12));
    CHECK(envelope_b2(1.2, 0.4, t, c, eps, Side::plus, 0.9) ==
          doctest::Approx(-0.11251535907951933).epsilon(1e-12));
    CHECK(envelope_b2(1.2, 0.4, t, c, eps, Side::minus, -1.0) ==
          doctest::Approx(-0.22556507244539958).epsilon(1e-12));
    CHECK(envelope_b2(1.2, 0.4, t, c, eps, Side::minus, -0.98) ==
          doctest::Approx(-0.13471248068450858).epsilon(1e-12));

    EnvelopeParams p = envelope_b2_params(1.2, 0.4, t, c, Side::plus);
    CHECK(p.A == 1.0);
    CHECK(p.B == doctest::Approx(1.0 + 0.4 / 1.2).epsilon(1e-15));
    CHECK(p.C == doctest::Approx(std::sqrt(1.6)).epsilon(1e-15));
    CHECK(p.D == doctest::Approx(4.3833526605285352).epsilon(1e-13));
    CHECK(p.D > 1.0);
}

TEST_CASE("b2 envelope interior limit and monotone layer") {
    const double t = 1.0, c = -0.1126, eps = std::pow(2.0, -5);
    // once (1-x)/eps >= 40 the csch^2 term underflows entirely
    for (double x : {0.0, -0.5, -0.2}) {
        CHECK(std::abs(envelope_b2(1.2, 0.4, t, c, eps, Side::plus, x) - c) < 1e-12);
    }
    double prev = -1e300;
    for (int i = 0; i <= 100; ++i) {
        double x = 0.9 + 0.1 * i / 100.0;
        double v = envelope_b2(1.2, 0.4, t, c, eps, Side::plus, x);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("b2 envelope error cases") {
    CHECK_THROWS_AS(envelope_b2(1.2, 0.4, 1.0, -0.1, 0.1, Side::plus, 1.5),
                    std::invalid_argument);
    // degenerate layer: t - c <= 0
    CHECK_THROWS_AS(envelope_b2(1.2, 0.4, 0.1, 0.2, 0.1, Side::plus, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(envelope_b2_params(1.2, 0.4, 0.1, 0.2, Side::plus),
                    std::domain_error);
}

TEST_CASE("two-species-by-two envelope constants and reflection") {
    const double eps = std::pow(2.0, -5);
    const double t = 0.8, c = 0.0;
    CHECK(envelope_two_two(0.5, 0.5, 0.5, 0.5, t, c, eps, Side::plus, 1.0) ==
          doctest::Approx(0.8).epsilon(1e-12));
    CHECK(envelope_two_two(0.5, 0.5, 0.5, 0.5, t, c, eps, Side::plus, 0.95) ==
          doctest::Approx(0.06100299921439174).epsilon(1e-12));
    CHECK(envelope_two_two(0.5, 0.5, 0.5, 0.5, t, c, eps, Side::minus, -1.0) ==
          doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(std::abs(envelope_two_two(0.5, 0.5, 0.5, 0.5, t, c, eps, Side::plus, 0.0) -
                   c) < 1e-9);

    // alpha = beta: plus and minus envelopes are reflections of each other
    for (double x : {1.0, 0.97, 0.93}) {
        double plus = envelope_two_two(0.5, 0.5, 0.5, 0.5, t, c, eps, Side::plus, x);
        double minus = envelope_two_two(0.5, 0.5, 0.5, 0.5, t, c, eps, Side::minus, -x);
        CHECK(std::abs((plus - c) + (minus - c)) < 1e-9);
    }

    CHECK_THROWS_AS(envelope_two_two(0.5, 0.5, 0.9, 0.5, t, c, eps, Side::plus, 1.0),
                    std::invalid_argument); // not electroneutral
    CHECK_THROWS_AS(envelope_two_two(0.5, 0.5, 0.5, 0.5, t, c, eps, Side::plus, 1.2),
                    std::invalid_argument);
}

TEST_CASE("np fields") {
    auto grid = std::make_shared<const Grid>(Grid::uniform(256));
    NPFields flat = np_fields(Field::constant(grid, 0.42), 1.0, 2.0);
    for (std::size_t i = 0; i < flat.n.size(); ++i) {
        CHECK(flat.n[i] == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(flat.p[i] == doctest::Approx(1.0).epsilon(1e-13));
    }

    std::vector<double> wavy(grid->n_nodes());
    for (std::size_t i = 0; i < wavy.size(); ++i) {
        wavy[i] = std::sin(3.0 * grid->node(i)) - 0.3;
    }
    Field f(grid, wavy);
    NPFields np = np_fields(f, 1.0, 2.0);
    CHECK(trapz(*grid, np.n) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(trapz(*grid, np.p) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("np product bound for a converged non-neutral solution") {
    IonSystem sys({{1.0, 1.0}}, {{1.0, 2.0}});
    double eps = std::pow(2.0, -3);
    auto grid = std::make_shared<const Grid>(
        Grid::graded(eps * eps / 20.0, 1.15, 1.0 / 256.0));
    BoundaryData bd(0.0, 0.0, 0.0);
    SolverConfig cfg;
    cfg.record_residuals = false;
    SolveReport r = solve(sys, bd, eps, grid, cfg, Model::ccpb);
    REQUIRE(r.converged);
    NPFields np = np_fields(r.field, 1.0, 2.0);
    for (std::size_t i = 0; i < np.n.size(); ++i) {
        double prod = np.n[i] * np.p[i];
        CHECK(prod >= 0.25 - 1e-9);
        CHECK(prod <= 0.5 + 1e-9);
        CHECK(np.n[i] <= np.p[i] + 1e-12); // n - p = eps^2 phi'' <= 0
    }
    // the discrete identity behind the ordering: n - p equals eps^2 times
    // the weighted second difference at every interior node of the converged
    // solution
    const std::vector<double>& xs = grid->nodes();
    const std::vector<double>& u = r.field.values;
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
        double w = 0.5 * (xs[i + 1] - xs[i - 1]);
        double d2 = ((u[i + 1] - u[i]) / (xs[i + 1] - xs[i]) -
                     (u[i] - u[i - 1]) / (xs[i] - xs[i - 1])) / w;
        CHECK(np.n[i] - np.p[i] ==
              doctest::Approx(eps * eps * d2).epsilon(1e-4).scale(1.0));
    }
    // evenness of the solution under phi_minus = phi_plus
    std::size_t n = r.field.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(r.field.values[i] - r.field.values[n - 1 - i]) < 1e-8);
    }
}

TEST_CASE("nonneutral checks wiring and preconditions") {
    IonSystem sys({{1.0, 1.0}}, {{1.0, 2.0}});
    double eps = std::pow(2.0, -4);
    auto grid = std::make_shared<const Grid>(
        Grid::graded(eps * eps / 20.0, 1.15, 1.0 / 512.0));
    BoundaryData bd(0.0, 0.0, 0.0);
    SolverConfig cfg;
    cfg.record_residuals = false;
    SolveReport r = solve(sys, bd, eps, grid, cfg, Model::ccpb);
    REQUIRE(r.converged);

    CHECK_THROWS_AS(nonneutral_checks(r.field, 2.0, 1.0, eps, 0.5),
                    std::invalid_argument); // roles must satisfy alpha < beta
    CHECK_THROWS_AS(nonneutral_checks(r.field, 1.0, 2.0, eps, 1.5),
                    std::invalid_argument);

    DiagnosticsReport rep = nonneutral_checks(r.field, 1.0, 2.0, eps, 0.5);
    auto get = [&](const std::string& name) -> const CheckResult& {
        for (const CheckResult& c : rep.checks) {
            if (c.name == name) return c;
        }
        REQUIRE(false);
        return rep.checks.front();
    };
    CHECK(get("eps2-p-plus").reference == doctest::Approx(0.125));
    CHECK(get("eps2-p-plus").pass);
    CHECK(get("eps2-p-minus").pass);
    CHECK(get("interior-gap").reference == doctest::Approx(std::log(0.25)));
    CHECK(get("interior-gap").pass);
    CHECK(get("eps2-slope-plus").reference == doctest::Approx(-0.5));
    CHECK(get("eps2-slope-plus").pass);
    CHECK(get("collar-p-right").reference == doctest::Approx(0.5));
    CHECK(get("lambda-eps").advisory);
    // collar integrals of n are reported as advisory context
    CHECK(get("collar-n-right").advisory);
}

TEST_CASE("sandwich check passes on a converged solution and flags corruption") {
    double eps = std::pow(2.0, -5);
    SolveReport r = solve_preset_I(eps, 1024);
    LimitPair pair = solve_tc(preset(), 1.0, 0.0);

    CheckResult ok = sandwich_check(r.field, pair, preset(), eps, 0.02);
    CHECK(ok.pass);

    // corrupt one layer node by +0.2: the detector must name a violation
    Field bad = r.field;
    bad.values[bad.size() - 5] += 0.2;
    CheckResult flagged = sandwich_check(bad, pair, preset(), eps, 0.02);
    CHECK_FALSE(flagged.pass);
    CHECK(flagged.detail.find("envelope") != std::string::npos);

    // degenerate gap: the layer region is empty and the check is vacuous
    LimitPair tiny;
    tiny.t = 1e-7;
    tiny.c = 0.0;
    CheckResult vac = sandwich_check(r.field, tiny, preset(), eps, 0.02);
    CHECK(vac.pass);
}

TEST_CASE("gradient bound holds for the antisymmetric preset") {
    double eps = std::pow(2.0, -5);
    SolveReport r = solve_preset_I(eps, 1024);
    BoundaryData bd(1.0, -1.0, 0.5 * eps * eps);
    CheckResult g = gradient_bound_check(r.field, preset(), bd, eps);
    CHECK(g.pass);

    BoundaryData skew(1.0, -0.5, 0.5 * eps * eps);
    CHECK_THROWS_AS(gradient_bound_check(r.field, preset(), skew, eps),
                    std::invalid_argument);
}

TEST_CASE("pb decay rate constant") {
    // inf_{s != 0} f'(s)/s computed independently to high precision
    CHECK(pb_decay_rate_constant(preset()) ==
          doctest::Approx(2.8766627429824568).epsilon(1e-9));
}

TEST_CASE("interior concentration deviation shrinks with eps") {
    IonSystem sys({{1.0, 1.0}}, {{1.0, 2.0}});
    BoundaryData bd(0.0, 0.0, 0.0);
    SolverConfig cfg;
    cfg.record_residuals = false;
    double lam_prev = 1e300;
    for (int j = 3; j <= 5; ++j) {
        double eps = std::pow(2.0, -j);
        auto grid = std::make_shared<const Grid>(
            Grid::graded(eps * eps / 20.0, 1.15, 1.0 / 512.0));
        SolveReport r = solve(sys, bd, eps, grid, cfg, Model::ccpb);
        REQUIRE(r.converged);
        NPFields np = np_fields(r.field, 1.0, 2.0);
        double cut = std::pow(eps, 0.5);
        double lam = 0.0;
        for (std::size_t i = 0; i < np.n.size(); ++i) {
            double x = grid->node(i);
            if (x < -1.0 + cut || x > 1.0 - cut) continue;
            lam = std::max(lam, std::max(std::abs(np.n[i] - 0.5),
                                         std::abs(np.p[i] - 0.5)));
        }
        CHECK(lam < lam_prev);
        lam_prev = lam;
    }
}
