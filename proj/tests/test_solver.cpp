#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ccpb/fem.hpp"
#include "ccpb/solver.hpp"

using namespace ccpb;

namespace {

IonSystem preset() { return IonSystem({{1.0, 1.2}}, {{1.0, 0.4}, {2.0, 0.4}}); }

std::shared_ptr<const Grid> grid_of(int n) {
    return std::make_shared<const Grid>(Grid::uniform(n));
}

} // namespace

TEST_CASE("ccpb rhs vanishes for constant fields of electroneutral systems") {
    auto grid = grid_of(128);
    for (double level : {0.0, 0.37, -1.2}) {
        std::vector<double> rhs = ccpb_rhs(Field::constant(grid, level), preset());
        for (double v : rhs) CHECK(std::abs(v) < 1e-14);
    }
}

TEST_CASE("ccpb rhs of a constant field, unbalanced system") {
    auto grid = grid_of(64);
    IonSystem sys({{1.0, 1.0}}, {{1.0, 2.0}});
    for (double level : {0.0, 0.8}) {
        std::vector<double> rhs = ccpb_rhs(Field::constant(grid, level), sys);
        for (double v : rhs) CHECK(v == doctest::Approx(-0.5).epsilon(1e-13));
    }
}

TEST_CASE("ccpb rhs integrates to zero for electroneutral systems") {
    auto grid = grid_of(200);
    std::vector<double> wavy(grid->n_nodes());
    for (std::size_t i = 0; i < wavy.size(); ++i) {
        wavy[i] = 0.7 * std::sin(2.0 * grid->node(i)) - 0.2 * grid->node(i);
    }
    std::vector<double> rhs = ccpb_rhs(Field(grid, wavy), preset());
    CHECK(std::abs(trapz(*grid, rhs)) < 1e-10);
}

TEST_CASE("pb rhs reference values") {
    auto grid = grid_of(64);
    std::vector<double> at_zero = pb_rhs(Field::constant(grid, 0.0), preset());
    for (double v : at_zero) CHECK(std::abs(v) < 1e-14);

    // 0.6 e - 0.2 e^-1 - 0.4 e^-2, summed term by term
    double oracle = 0.6 * std::exp(1.0) - 0.2 * std::exp(-1.0) - 0.4 * std::exp(-2.0);
    CHECK(oracle == doctest::Approx(1.5032590955464936).epsilon(1e-15));
    std::vector<double> at_one = pb_rhs(Field::constant(grid, 1.0), preset());
    for (double v : at_one) CHECK(v == doctest::Approx(oracle).epsilon(1e-13));

    // at phi = 0 every normalization integral is exactly 2
    std::vector<double> ccpb0 = ccpb_rhs(Field::constant(grid, 0.0), preset());
    for (std::size_t i = 0; i < ccpb0.size(); ++i) {
        CHECK(ccpb0[i] == doctest::Approx(at_zero[i]).epsilon(1e-14));
    }
}

TEST_CASE("convex step keeps a converged field fixed") {
    auto grid = grid_of(256);
    double eps = 0.25;
    BoundaryData bd(1.0, -1.0, 0.5 * eps * eps);
    SolverConfig cfg;
    cfg.tol = 1e-13;
    SolveReport r = solve(preset(), bd, eps, grid, cfg, Model::ccpb);
    REQUIRE(r.converged);
    Field next = convex_step(r.field, preset(), bd, eps, cfg, Model::ccpb);
    for (std::size_t i = 0; i < next.size(); ++i) {
        CHECK(std::abs(next.values[i] - r.field.values[i]) < 1e-12);
    }
}

TEST_CASE("convex step preserves odd symmetry for symmetric species") {
    IonSystem sym({{1.0, 1.0}}, {{1.0, 1.0}});
    auto grid = grid_of(128);
    std::vector<double> odd(grid->n_nodes());
    for (std::size_t i = 0; i < odd.size(); ++i) {
        odd[i] = std::sin(1.3 * grid->node(i));
    }
    BoundaryData bd(0.8, -0.8, 0.1);
    SolverConfig cfg;
    cfg.relax_s = 0.3;
    Field out = convex_step(Field(grid, odd), sym, bd, 0.25, cfg, Model::ccpb);
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(out.values[i] + out.values[n - 1 - i]) < 1e-12);
    }
}

TEST_CASE("residual integral contracts by exactly (1 - s)") {
    IonSystem sys = preset();
    double eps = 0.5;
    BoundaryData bd(1.0, -1.0, 0.5 * eps * eps);
    SolverConfig cfg;
    cfg.relax_s = 0.125;
    auto grid = grid_of(512);
    Field field = Field::constant(grid, 0.5);
    double prev = residual_integral(field, sys, bd, eps, Model::ccpb);
    for (int m = 0; m < 10; ++m) {
        field = convex_step(field, sys, bd, eps, cfg, Model::ccpb);
        double cur = residual_integral(field, sys, bd, eps, Model::ccpb);
        CHECK(cur / prev == doctest::Approx(1.0 - cfg.relax_s).epsilon(0.05));
        prev = cur;
    }
}

TEST_CASE("equal boundary data forces the constant solution") {
    IonSystem sys = preset();
    double eps = 0.125;
    BoundaryData bd(0.3, 0.3, 0.5 * eps * eps);
    SolverConfig cfg;
    SolveReport r = solve(sys, bd, eps, grid_of(256), cfg, Model::ccpb);
    REQUIRE(r.converged);
    for (double v : r.field.values) CHECK(std::abs(v - 0.3) <= cfg.tol);
}

TEST_CASE("solver configuration is validated") {
    SolverConfig cfg;
    cfg.relax_s = 1.2;
    CHECK_THROWS_AS(effective_relax_s(cfg, 0.5), std::invalid_argument);
    cfg.relax_s = 0.0;
    cfg.relax_C = 0.5;
    CHECK(effective_relax_s(cfg, 0.5) == doctest::Approx(0.125));
    CHECK(effective_relax_s(cfg, 1e-9) == doctest::Approx(1e-6)); // clamped
}

TEST_CASE("non-convergence is reported, not silent") {
    IonSystem sys = preset();
    double eps = 0.125;
    BoundaryData bd(1.0, -1.0, 0.5 * eps * eps);
    SolverConfig cfg;
    cfg.max_iter = 5;
    SolveReport r = solve(sys, bd, eps, grid_of(128), cfg, Model::ccpb);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 5);
    CHECK_FALSE(r.message.empty());
}

TEST_CASE("uniqueness probe") {
    IonSystem sys = preset();
    double eps = 0.125;
    BoundaryData bd(1.0, -1.0, 0.5 * eps * eps);
    SolverConfig cfg;
    auto grid = grid_of(256);
    CHECK(uniqueness_probe(sys, bd, eps, grid, cfg, Model::ccpb, 4) <= 10.0 * cfg.tol);
    CHECK(uniqueness_probe(sys, bd, eps, grid, cfg, Model::pb, 4) <= 10.0 * cfg.tol);
    // trivial case: everything converges to the constant
    BoundaryData flat(0.2, 0.2, 0.5 * eps * eps);
    CHECK(uniqueness_probe(sys, flat, eps, grid, cfg, Model::ccpb, 4) <= 10.0 * cfg.tol);
    CHECK_THROWS_AS(uniqueness_probe(sys, bd, eps, grid, cfg, Model::ccpb, 1),
                    std::invalid_argument);
}

TEST_CASE("robin boundary condition holds at convergence") {
    IonSystem sys = preset();
    double eps = 0.25;
    double eta = 0.5 * eps;
    BoundaryData bd(1.0, -1.0, eta);
    SolverConfig cfg;
    cfg.tol = 1e-10;
    SolveReport r = solve(sys, bd, eps, grid_of(1024), cfg, Model::ccpb);
    REQUIRE(r.converged);
    // the converged half-step satisfies the weak Robin row; the strong form
    // holds up to the O(h phi'') error of the one-sided boundary slope
    std::vector<double> g = nodal_gradient(r.field);
    CHECK(r.field.values.back() + eta * g.back() == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(r.field.values.front() - eta * g.front() == doctest::Approx(-1.0).epsilon(1e-2));
}

TEST_CASE("first integral constant and boundary identities at a moderate eps") {
    IonSystem sys = preset();
    double eps = std::pow(2.0, -4);
    BoundaryData bd(1.0, -1.0, 0.5 * eps * eps);
    SolverConfig cfg;
    SolveReport r = solve(sys, bd, eps, grid_of(2048), cfg, Model::ccpb);
    REQUIRE(r.converged);
    CHECK(std::abs(r.first_integral_constant + 1.0) < 0.1);
    auto [d1, d2] = boundary_identity_residuals(r.field, sys, bd, eps);
    CHECK(std::abs(d1) < 5e-2);
    CHECK(std::abs(d2) < 5e-2);

    BoundaryData dirichlet(1.0, -1.0, 0.0);
    CHECK_THROWS_AS(boundary_identity_residuals(r.field, sys, dirichlet, eps),
                    std::invalid_argument);
}
