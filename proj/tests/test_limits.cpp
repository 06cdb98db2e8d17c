#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ccpb/limits.hpp"

using namespace ccpb;

namespace {

IonSystem ratio1() { return IonSystem({{1.0, 3.0}}, {{1.0, 1.0}, {2.0, 1.0}}); }
IonSystem ratio2() { return IonSystem({{1.0, 5.0}}, {{1.0, 1.0}, {2.0, 2.0}}); }
IonSystem ratio3() { return IonSystem({{1.0, 7.0}}, {{1.0, 1.0}, {2.0, 3.0}}); }

double bisect_local(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Independent route to (t, c): inner bisection solves f(t-c) = f(-t-c) for c
// at fixed t, outer bisection matches phi_plus - t = gamma sqrt(f(t-c)-f(0)).
std::pair<double, double> tc_nested_oracle(const IonSystem& sys, double phi_plus,
                                           double gamma) {
    auto c_of_t = [&](double t) {
        return bisect_local([&](double c) { return sys.f(t - c) - sys.f(-t - c); },
                            -t + 1e-15, t - 1e-15);
    };
    auto outer = [&](double t) {
        return phi_plus - t - gamma * std::sqrt(sys.f_minus_f0(t - c_of_t(t)));
    };
    double t = bisect_local(outer, 1e-12, phi_plus);
    return {t, c_of_t(t)};
}

} // namespace

TEST_CASE("limit pairs reproduce the published table") {
    LimitPair p = solve_tc(ratio1(), 1.0, 0.0);
    CHECK(p.t == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.c == doctest::Approx(-0.1126).epsilon(5e-4));

    CHECK(solve_tc(ratio2(), 1.0, 0.0).c == doctest::Approx(-0.1265).epsilon(5e-4));
    CHECK(solve_tc(ratio3(), 1.0, 0.0).c == doctest::Approx(-0.1320).epsilon(5e-4));

    LimitPair q1 = solve_tc(ratio1(), 1.0, 0.5);
    CHECK(q1.t == doctest::Approx(0.4960).epsilon(5e-4));
    CHECK(q1.c == doctest::Approx(-0.0299).epsilon(5e-4));
    LimitPair q2 = solve_tc(ratio2(), 1.0, 0.5);
    CHECK(q2.t == doctest::Approx(0.4277).epsilon(5e-4));
    CHECK(q2.c == doctest::Approx(-0.0255).epsilon(5e-4));
    LimitPair q3 = solve_tc(ratio3(), 1.0, 0.5);
    CHECK(q3.t == doctest::Approx(0.3853).epsilon(5e-4));
    CHECK(q3.c == doctest::Approx(-0.0218).epsilon(5e-4));
}

TEST_CASE("limit pairs satisfy the defining equations to 1e-10") {
    for (double gamma : {1e-3, 0.1, 0.25, 0.5, 2.0, 10.0, 1e3}) {
        LimitPair p = solve_tc(ratio1(), 1.0, gamma);
        CHECK(std::abs(p.eq1_residual) <= 1e-10);
        CHECK(std::abs(p.eq2_residual) <= 1e-10);
        CHECK(std::abs(p.c) < p.t);
        CHECK(p.t <= 1.0 + 1e-12);
    }
}

TEST_CASE("solve_tc agrees with an independent nested-bisection route") {
    for (double gamma : {0.1, 0.5, 2.0}) {
        LimitPair p = solve_tc(ratio1(), 1.0, gamma);
        auto [t, c] = tc_nested_oracle(ratio1(), 1.0, gamma);
        CHECK(std::abs(p.t - t) < 1e-10);
        CHECK(std::abs(p.c - c) < 1e-10);
    }
}

TEST_CASE("huge gamma sends both limits to zero") {
    LimitPair p = solve_tc(ratio1(), 1.0, 1e6);
    CHECK(std::abs(p.t) + std::abs(p.c) < 1e-3);
}

TEST_CASE("solve_tc preconditions") {
    IonSystem unbalanced({{1.0, 1.0}}, {{1.0, 2.0}});
    CHECK_THROWS_AS(solve_tc(unbalanced, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(solve_tc(ratio1(), -1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(solve_tc(ratio1(), 1.0, -0.5), std::invalid_argument);
}

TEST_CASE("scale invariance of the limit pair") {
    // at gamma = 0 plain concentration scaling changes nothing
    IonSystem scaled({{1.0, 6.0}}, {{1.0, 2.0}, {2.0, 2.0}});
    CHECK(std::abs(solve_tc(ratio1(), 1.0, 0.0).c - solve_tc(scaled, 1.0, 0.0).c) <
          1e-10);
    // at gamma > 0 scaling by lambda pairs with gamma / sqrt(lambda)
    LimitPair a = solve_tc(ratio1(), 1.0, 0.5);
    LimitPair b = solve_tc(scaled, 1.0, 0.5 / std::sqrt(2.0));
    CHECK(std::abs(a.t - b.t) < 1e-10);
    CHECK(std::abs(a.c - b.c) < 1e-10);
}

TEST_CASE("c_star_neutral") {
    CHECK(c_star_neutral(ratio1(), 1.0) == doctest::Approx(-0.11257957).epsilon(1e-6));
    CHECK(c_star_neutral(ratio3(), 1.0) == doctest::Approx(-0.1320).epsilon(5e-4));
    IonSystem sym({{1.0, 0.7}}, {{1.0, 0.7}});
    CHECK(std::abs(c_star_neutral(sym, 1.0)) < 1e-12);
    // gamma -> 0 limit of the pair's c
    CHECK(std::abs(c_star_neutral(ratio1(), 1.0) - solve_tc(ratio1(), 1.0, 1e-8).c) <
          1e-6);
}

TEST_CASE("c_star_bracket") {
    CHECK(c_star_bracket(1.0) == doctest::Approx(-0.14459361).epsilon(1e-6));
    CHECK(c_star_bracket(0.4960) == doctest::Approx(-0.0394).epsilon(1e-4));
    CHECK(std::abs(c_star_bracket(1e-10)) < 1e-12);
    CHECK_THROWS_AS(c_star_bracket(0.0), std::invalid_argument);
    CHECK_THROWS_AS(c_star_bracket(-1.0), std::invalid_argument);

    // the limit c sits inside (c_*(t), 0) for this species pattern
    LimitPair p = solve_tc(ratio1(), 1.0, 0.5);
    CHECK(p.c > c_star_bracket(p.t));
    CHECK(p.c < 0.0);
}

TEST_CASE("concentration-ratio formulas") {
    CHECK(ratio_ca1(1.0, -0.1126) == doctest::Approx(1.0).epsilon(5e-3));
    CHECK(ratio_ca1(1.0, -0.1265) == doctest::Approx(0.5).epsilon(1e-2));
    CHECK(std::abs(ratio_ca1(1.0, -0.1320) - 1.0 / 3.0) < 5e-3);
    CHECK_THROWS_AS(ratio_ca1(1.0, 0.0), std::domain_error);

    // exact round trip through the limit equations
    LimitPair p = solve_tc(ratio1(), 1.0, 0.25);
    CHECK(ratio_ca1(p.t, p.c) == doctest::Approx(1.0).epsilon(1e-6));

    // z = 2 reduces to the first formula
    CHECK(ratio_ca2(1.0, -0.1126, 2.0) ==
          doctest::Approx(ratio_ca1(1.0, -0.1126)).epsilon(1e-12));
    CHECK_THROWS_AS(ratio_ca2(1.0, -0.1, 1.5), std::invalid_argument);

    // z = 3 round trip: cations (1,1),(3,1) against anions (1,4)
    IonSystem tri({{1.0, 4.0}}, {{1.0, 1.0}, {3.0, 1.0}});
    LimitPair q = solve_tc(tri, 1.0, 0.0);
    CHECK(ratio_ca2(q.t, q.c, 3.0) == doctest::Approx(1.0).epsilon(1e-6));

    // dc/dt < 0 along the implied-ratio curve
    auto c_for = [&](double t) {
        return bisect_local([&](double c) { return ratio_ca1(t, c) - 1.0; }, -t + 1e-9,
                            -1e-9);
    };
    CHECK(c_for(1.2) < c_for(0.8));
}

TEST_CASE("pb boundary limit t_hat") {
    CHECK(pb_t_hat(ratio1(), 1.0, 0.0) == doctest::Approx(1.0));
    CHECK(std::abs(pb_t_hat(ratio1(), 1.0, 1e6)) < 1e-3);

    // brute-force bracket scan plus bisection as an independent oracle
    IonSystem sys = ratio1();
    double gamma = 0.5;
    auto g = [&](double t) {
        return 1.0 - t - gamma * std::sqrt(std::max(sys.f_minus_f0(t), 0.0));
    };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 100000; ++i) {
        double t = (i + 1) / 100000.0;
        if (g(t) < 0.0) {
            lo = t - 1e-5;
            hi = t;
            break;
        }
    }
    double oracle = bisect_local(g, lo, hi);
    CHECK(std::abs(pb_t_hat(sys, 1.0, gamma) - oracle) < 1e-10);

    // decreasing in gamma for positive boundary data
    CHECK(pb_t_hat(sys, 1.0, 0.2) > pb_t_hat(sys, 1.0, 0.4));
}

TEST_CASE("pb non-neutral interior limit r") {
    IonSystem closed({{1.0, 1.0}}, {{1.0, std::exp(2.0)}});
    CHECK(pb_nonneutral_r(closed) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(std::abs(pb_nonneutral_r(ratio1())) < 1e-12);

    IonSystem sys({{1.0, 1.0}}, {{1.0, 1.0}, {2.0, 1.0}});
    auto fp = [&](double s) { return sys.f_prime(s); };
    double oracle = bisect_local(fp, -5.0, 5.0);
    CHECK(std::abs(pb_nonneutral_r(sys) - oracle) < 1e-10);
}

TEST_CASE("gamma sweep of the reference system") {
    SweepTable t = gamma_sweep(ratio1(), 1.0, log_spaced(1e-3, 1e3, 50));
    CHECK(t.monotone_t);
    CHECK(t.monotone_tc);
    CHECK(t.c_extrema.empty());
    // endpoints: t -> phi_plus as gamma -> 0 (the gap at gamma = 1e-3 is
    // gamma sqrt(f(t-c)-f(0)) ~ 2.13e-3 for this system), and both limits
    // vanish at gamma = 1e3
    CHECK(t.rows.front().t == doctest::Approx(0.997868954277).epsilon(1e-9));
    CHECK(std::abs(t.rows.front().t - 1.0) < 3e-3);
    CHECK(std::abs(t.rows.back().t) < 1e-2);
    CHECK(std::abs(t.rows.back().c) < 1e-2);
}

TEST_CASE("non-monotone c for the divalent-anion mixture") {
    IonSystem sys({{2.0, 0.75}}, {{1.0, 0.9}, {2.0, 0.12}, {3.0, 0.12}});
    SweepTable t = gamma_sweep(sys, 1.0, log_spaced(1e-3, 1e3, 200));
    CHECK(t.monotone_t);
    CHECK(t.monotone_tc);
    CHECK(t.c_extrema.size() >= 1);
}

TEST_CASE("gamma sweep input validation") {
    CHECK_THROWS_AS(gamma_sweep(ratio1(), 1.0, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(gamma_sweep(ratio1(), 1.0, {0.5, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(log_spaced(0.0, 1.0, 10), std::invalid_argument);
}
