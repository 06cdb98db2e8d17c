#include "ccpb/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ccpb/fem.hpp"

namespace ccpb {

namespace {

double sq(double x) { return x * x; }

double csch2(double x) {
    double s = std::sinh(x);
    if (s == 0.0) throw std::domain_error("csch undefined at 0");
    double inv = 1.0 / s;
    return inv * inv;
}

double sech2(double x) {
    double inv = 1.0 / std::cosh(x);
    return inv * inv;
}

void require_b2_pattern(const IonSystem& sys, const char* who) {
    const auto& an = sys.anions();
    const auto& ca = sys.cations();
    bool ok = an.size() == 1 && ca.size() == 2 && an[0].valence == 1.0 &&
              ca[0].valence == 1.0 && ca[1].valence == 2.0;
    if (!ok) {
        throw std::invalid_argument(std::string(who) +
                                    ": needs the a1=b1=1, b2=2 species pattern");
    }
}

// Linear interpolation of nodal values at x.
double interp(const Grid& grid, const std::vector<double>& v, double x) {
    const std::vector<double>& xs = grid.nodes();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return v.front();
    if (it == xs.end()) return v.back();
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
    return (1.0 - t) * v[hi - 1] + t * v[hi];
}

// Trapezoid integral of nodal values over [a, b] with interpolated cuts.
double integrate_between(const Grid& grid, const std::vector<double>& v, double a,
                         double b) {
    const std::vector<double>& xs = grid.nodes();
    double sum = 0.0;
    double va = interp(grid, v, a);
    double prev_x = a;
    double prev_v = va;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= a) continue;
        if (xs[i] >= b) break;
        sum += 0.5 * (prev_v + v[i]) * (xs[i] - prev_x);
        prev_x = xs[i];
        prev_v = v[i];
    }
    sum += 0.5 * (prev_v + interp(grid, v, b)) * (b - prev_x);
    return sum;
}

} // namespace

EnvelopeParams envelope_b2_params(double alpha1, double beta2, double t, double c,
                                  Side side) {
    if (!(alpha1 > 0.0) || !(beta2 > 0.0)) {
        throw std::invalid_argument("envelope_b2: concentrations must be positive");
    }
    double L = std::sqrt(alpha1 + beta2);
    double v_end = (side == Side::plus) ? t - c : -t - c;
    if ((side == Side::plus && !(v_end > 0.0)) ||
        (side == Side::minus && !(v_end < 0.0))) {
        throw std::domain_error("envelope_b2: degenerate layer (|c| < t violated)");
    }
    double q = std::sqrt(alpha1 * std::exp(v_end) + beta2);
    double denom = std::abs(q - L);
    if (denom == 0.0) {
        throw std::domain_error("envelope_b2: degenerate layer, D undefined");
    }
    EnvelopeParams p;
    p.A = 1.0;
    p.B = 1.0 + beta2 / alpha1;
    p.C = L;
    p.D = (q + L) / denom;
    p.side = side;
    if (!(p.D > 1.0)) {
        throw std::domain_error("envelope_b2: D <= 1 (degenerate layer)");
    }
    return p;
}

double envelope_b2(double alpha1, double beta2, double t, double c, double eps,
                   Side side, double x) {
    if (x < -1.0 || x > 1.0) {
        throw std::invalid_argument("envelope_b2: x outside [-1, 1]");
    }
    EnvelopeParams p = envelope_b2_params(alpha1, beta2, t, c, side);
    if (side == Side::plus) {
        double arg = p.C / eps * (1.0 - x) + std::log(p.D);
        return c + std::log1p((p.A - 1.0) + p.B * csch2(arg));
    }
    double arg = p.C / eps * (1.0 + x) + std::log(p.D);
    double inner = p.A - p.B * sech2(arg);
    if (!(inner > 0.0)) {
        throw std::domain_error("envelope_b2: minus-side envelope undefined at x");
    }
    return c + std::log(inner);
}

double envelope_two_two(double alpha1, double alpha2, double beta1, double beta2,
                        double t, double c, double eps, Side side, double x) {
    if (x < -1.0 || x > 1.0) {
        throw std::invalid_argument("envelope_two_two: x outside [-1, 1]");
    }
    if (std::abs(alpha1 + 2.0 * alpha2 - beta1 - 2.0 * beta2) > 1e-12) {
        throw std::invalid_argument("envelope_two_two: system not electroneutral");
    }
    double A = 1.0 + alpha1 / (2.0 * alpha2);
    double B2 = A * A - beta2 / alpha2;
    if (!(B2 > 0.0)) {
        throw std::domain_error("envelope_two_two: B imaginary (beta2/alpha2 too large)");
    }
    double B = std::sqrt(B2);
    double Ct = std::sqrt(alpha2 * (sq(A + 1.0) - B2));

    auto ratio = [&](double s) { return (A - B + s) / (A + B + s); };
    double w = std::sqrt(ratio(1.0));
    double v_end = (side == Side::plus) ? t - c : -t - c;
    double u = std::sqrt(ratio(std::exp(v_end)));
    double H = (side == Side::plus) ? (u + w) / (u - w) : (u + w) / (w - u);
    if (!(H > 1.0) || !std::isfinite(H)) {
        throw std::domain_error("envelope_two_two: degenerate layer constants");
    }

    double h = Ct / eps * ((side == Side::plus) ? (1.0 - x) : (1.0 + x)) + std::log(H);
    if (h > 700.0) {
        return c; // cosh overflows; the bracket is 1 to machine precision
    }
    double ch = std::cosh(h);
    double P = (A * A - B2 + A) / B;
    double S = (A + 1.0) / B;
    double num, den;
    if (side == Side::plus) {
        num = ch + P;
        den = ch - S;
    } else {
        num = ch - P;
        den = ch + S;
    }
    if (std::abs(den) < 1e-14) {
        throw std::domain_error("envelope_two_two: evaluation at the cosh pole");
    }
    if (!(num / den > 0.0)) {
        throw std::domain_error("envelope_two_two: envelope undefined at x");
    }
    return c + std::log(num / den);
}

NPFields np_fields(const Field& solution, double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("np_fields: concentrations must be positive");
    }
    double plus_int = trapz_weighted_exp(solution, 1.0);
    double minus_int = trapz_weighted_exp(solution, -1.0);
    NPFields out;
    out.n.resize(solution.size());
    out.p.resize(solution.size());
    for (std::size_t i = 0; i < solution.size(); ++i) {
        out.n[i] = alpha * std::exp(solution.values[i]) / plus_int;
        out.p[i] = beta * std::exp(-solution.values[i]) / minus_int;
    }
    return out;
}

CheckResult sandwich_check(const Field& solution, const LimitPair& pair,
                           const IonSystem& sys, double eps, double threshold) {
    require_b2_pattern(sys, "sandwich_check");
    if (!(threshold > 0.0)) {
        throw std::invalid_argument("sandwich_check: threshold must be positive");
    }
    const double alpha1 = sys.anions()[0].concentration;
    const double beta2 = sys.cations()[1].concentration;
    const double c = pair.c;
    const std::vector<double>& xs = solution.grid->nodes();
    const std::vector<double>& phi = solution.values;
    std::size_t n = phi.size();

    if (pair.t - pair.c < 1e-6) {
        CheckResult r;
        r.name = "envelope-sandwich";
        r.value = 0.0;
        r.tolerance = 1e-9;
        r.pass = true;
        r.advisory = true;
        r.detail = "layer gap below 1e-6; region empty, vacuous pass";
        return r;
    }

    // Layer regions: outermost nodes where |phi - c| exceeds the threshold.
    std::size_t y_plus = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(phi[i] - c) <= threshold) y_plus = i;
    }
    std::size_t y_minus = n - 1;
    for (std::size_t i = n; i-- > 0;) {
        if (std::abs(phi[i] - c) <= threshold) y_minus = i;
    }

    // delta(eps): max first-integral defect over both layer regions.
    std::vector<double> grad = nodal_gradient(solution);
    double delta = 0.0;
    auto defect = [&](std::size_t i) {
        double v = phi[i] - c;
        return std::abs(eps * eps * grad[i] * grad[i] - sys.f_minus_f0(v));
    };
    for (std::size_t i = y_plus + 1; i < n; ++i) delta = std::max(delta, defect(i));
    for (std::size_t i = 0; i < y_minus; ++i) delta = std::max(delta, defect(i));

    CheckResult r;
    r.name = "envelope-sandwich";
    r.reference = 0.0;
    r.tolerance = 1e-9;
    r.advisory = true;

    double L = std::sqrt(alpha1 + beta2);
    if (!(delta < 1.0)) {
        r.value = delta;
        r.pass = false;
        r.detail = "first-integral defect delta >= 1; envelopes degenerate at this eps";
        return r;
    }
    double K = 1.0 - std::sqrt(delta);
    double t_eps = 1.0 + std::sqrt(delta / (alpha1 + beta2));
    double Bq = beta2 / alpha1;

    double worst = 0.0;
    std::string where;

    // Plus side. Exact layer profile: e^{v} = 1 + (1+Bq) csch^2(theta/2),
    // theta = (L/eps)(1-x) + log D, D = (q(1)+L)/(q(1)-L); rate and amplitude
    // widened by K and t_eps for the finite-eps defect.
    {
        double v1 = phi[n - 1] - c;
        double q1 = std::sqrt(alpha1 * std::exp(v1) + beta2);
        if (q1 > L) {
            double L1 = std::sqrt(alpha1 / t_eps + beta2);
            double D1 = (q1 + L1) / (q1 - L1);
            double D2 = (q1 + L) / (q1 - L);
            for (std::size_t i = y_plus + 1; i < n; ++i) {
                double th1 = t_eps * L1 / eps * (1.0 - xs[i]) + std::log(D1);
                double th2 = std::sqrt(K) * L / eps * (1.0 - xs[i]) + std::log(D2);
                double lower = c + std::log(1.0 / t_eps +
                                            (1.0 / t_eps + Bq) * csch2(0.5 * th1));
                double upper = c + std::log1p((1.0 + Bq) * csch2(0.5 * th2));
                if (lower - phi[i] > worst) {
                    worst = lower - phi[i];
                    where = "lower envelope at x = " + std::to_string(xs[i]);
                }
                if (phi[i] - upper > worst) {
                    worst = phi[i] - upper;
                    where = "upper envelope at x = " + std::to_string(xs[i]);
                }
            }
        }
    }

    // Minus side. Exact profile: e^{v} = 1 - (1+Bq) sech^2(psi/2),
    // psi = (L/eps)(1+x) + log H, H = (L+q(-1))/(L-q(-1)); the rate bracket
    // [sqrt(K) L, L/sqrt(K)] absorbs the defect.
    {
        double vm = phi[0] - c;
        double qm = std::sqrt(alpha1 * std::exp(vm) + beta2);
        if (qm < L) {
            double H0 = (L + qm) / (L - qm);
            for (std::size_t i = 0; i < y_minus; ++i) {
                double ps_lo = std::sqrt(K) * L / eps * (1.0 + xs[i]) + std::log(H0);
                double ps_hi = L / std::sqrt(K) / eps * (1.0 + xs[i]) + std::log(H0);
                double arg_lo = 1.0 - (1.0 + Bq) * sech2(0.5 * ps_lo);
                double lower = (arg_lo > 0.0)
                                   ? c + std::log(arg_lo)
                                   : -std::numeric_limits<double>::infinity();
                double arg_hi = 1.0 - (1.0 + Bq) * sech2(0.5 * ps_hi);
                double upper = (arg_hi > 0.0)
                                   ? c + std::log(arg_hi)
                                   : -std::numeric_limits<double>::infinity();
                if (lower - phi[i] > worst) {
                    worst = lower - phi[i];
                    where = "minus lower envelope at x = " + std::to_string(xs[i]);
                }
                if (phi[i] - upper > worst) {
                    worst = phi[i] - upper;
                    where = "minus upper envelope at x = " + std::to_string(xs[i]);
                }
            }
        }
    }

    r.value = worst;
    r.pass = worst <= r.tolerance;
    r.detail = r.pass ? ("delta(eps) = " + std::to_string(delta)) : where;
    return r;
}

CheckResult gradient_bound_check(const Field& solution, const IonSystem& sys,
                                 const BoundaryData& bd, double eps) {
    if (!sys.electroneutral() || std::abs(bd.phi_plus + bd.phi_minus) > 1e-12) {
        throw std::invalid_argument(
            "gradient_bound_check: needs an electroneutral antisymmetric preset");
    }
    double m1 = 0.0;
    for (const Species& a : sys.anions()) {
        m1 += sq(a.valence) * a.concentration * std::exp(2.0 * a.valence * bd.phi_minus);
    }
    for (const Species& b : sys.cations()) {
        m1 += sq(b.valence) * b.concentration * std::exp(2.0 * b.valence * bd.phi_minus);
    }
    m1 = 0.5 * std::sqrt(m1);

    std::vector<double> grad = nodal_gradient(solution);
    double c1 = eps * grad.back();
    const std::vector<double>& xs = solution.grid->nodes();

    double max_ratio = 0.0;
    double min_grad = 0.0;
    for (std::size_t i = 0; i < grad.size(); ++i) {
        double bound = c1 / eps *
                       (std::exp(-m1 * (1.0 + xs[i]) / eps) +
                        std::exp(-m1 * (1.0 - xs[i]) / eps));
        if (bound > 0.0) max_ratio = std::max(max_ratio, grad[i] / bound);
        min_grad = std::min(min_grad, grad[i]);
    }

    CheckResult r;
    r.name = "gradient-bound";
    r.value = max_ratio;
    r.reference = 1.0;
    r.tolerance = 0.05;
    r.pass = max_ratio <= 1.05 && min_grad >= -1e-9;
    r.detail = "M1 = " + std::to_string(m1) + ", C1 = " + std::to_string(c1);
    return r;
}

double pb_decay_rate_constant(const IonSystem& sys) {
    auto value = [&](double s) {
        return (std::abs(s) < 1e-8) ? sys.f_second(0.0) : sys.f_prime(s) / s;
    };
    double best_s = 0.0;
    double best = value(0.0);
    for (int i = 0; i <= 4000; ++i) {
        double s = -10.0 + 20.0 * i / 4000.0;
        double v = value(s);
        if (v < best) {
            best = v;
            best_s = s;
        }
    }
    double lo = best_s - 0.01, hi = best_s + 0.01;
    for (int i = 0; i < 100; ++i) {
        double m1 = lo + (hi - lo) / 3.0;
        double m2 = hi - (hi - lo) / 3.0;
        if (value(m1) < value(m2)) hi = m2;
        else lo = m1;
    }
    return std::min(best, value(0.5 * (lo + hi)));
}

CheckResult pb_decay_check(const Field& solution, const IonSystem& sys,
                           const BoundaryData& bd, double eps) {
    double c5 = pb_decay_rate_constant(sys);
    double rate = 0.5 * std::sqrt(c5);
    double amp = std::max(std::abs(bd.phi_plus), std::abs(bd.phi_minus));
    const std::vector<double>& xs = solution.grid->nodes();

    double max_ratio = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double bound = amp * (std::exp(-rate * (1.0 + xs[i]) / eps) +
                              std::exp(-rate * (1.0 - xs[i]) / eps));
        if (bound > 0.0) {
            max_ratio = std::max(max_ratio, std::abs(solution.values[i]) / bound);
        }
    }
    CheckResult r;
    r.name = "pb-decay-bound";
    r.value = max_ratio;
    r.reference = 1.0;
    r.tolerance = 0.05;
    r.pass = max_ratio <= 1.05;
    r.detail = "C5 = " + std::to_string(c5);
    return r;
}

DiagnosticsReport nonneutral_checks(const Field& solution, double alpha, double beta,
                                    double eps, double kappa) {
    if (!(alpha > 0.0) || !(alpha < beta)) {
        throw std::invalid_argument(
            "nonneutral_checks: needs 0 < alpha < beta (swap the species roles)");
    }
    if (!(kappa > 0.0) || !(kappa < 1.0)) {
        throw std::invalid_argument("nonneutral_checks: kappa must lie in (0,1)");
    }
    const Grid& grid = *solution.grid;
    const std::vector<double>& xs = grid.nodes();
    const std::vector<double>& phi = solution.values;
    std::size_t n = phi.size();
    NPFields np = np_fields(solution, alpha, beta);

    DiagnosticsReport rep;
    double p_ref = sq(alpha - beta) / 8.0;
    rep.add(CheckResult::make("eps2-p-minus", eps * eps * np.p.front(), p_ref,
                              0.10 * p_ref));
    rep.add(CheckResult::make("eps2-p-plus", eps * eps * np.p.back(), p_ref,
                              0.10 * p_ref));

    double cut = std::pow(eps, kappa);
    double left = -1.0 + cut;
    double right = 1.0 - cut;
    double sup_n = std::abs(interp(grid, np.n, left) - 0.5 * alpha);
    double sup_p = std::abs(interp(grid, np.p, left) - 0.5 * alpha);
    std::size_t center = grid.index_nearest(0.0);
    double lam = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (xs[i] < left || xs[i] > right) continue;
        sup_n = std::max(sup_n, std::abs(np.n[i] - 0.5 * alpha));
        sup_p = std::max(sup_p, std::abs(np.p[i] - 0.5 * alpha));
        lam = std::max(lam, std::max(std::abs(np.n[i] - np.n[center]),
                                     std::abs(np.p[i] - np.p[center])));
    }
    sup_n = std::max(sup_n, std::abs(interp(grid, np.n, right) - 0.5 * alpha));
    sup_p = std::max(sup_p, std::abs(interp(grid, np.p, right) - 0.5 * alpha));
    rep.add(CheckResult::make("interior-sup-n", sup_n, 0.0, 0.05));
    rep.add(CheckResult::make("interior-sup-p", sup_p, 0.0, 0.05));

    double coll_ref = 0.5 * (beta - alpha);
    rep.add(CheckResult::make("collar-n-left",
                              integrate_between(grid, np.n, -1.0, left), 0.0, 0.15,
                              true));
    rep.add(CheckResult::make("collar-n-right",
                              integrate_between(grid, np.n, right, 1.0), 0.0, 0.15,
                              true));
    rep.add(CheckResult::make("collar-p-left",
                              integrate_between(grid, np.p, -1.0, left), coll_ref,
                              0.15 * coll_ref));
    rep.add(CheckResult::make("collar-p-right",
                              integrate_between(grid, np.p, right, 1.0), coll_ref,
                              0.15 * coll_ref));

    double gap = phi[center] - phi[n - 1] - std::log(1.0 / (eps * eps));
    rep.add(CheckResult::make("interior-gap", gap,
                              std::log(sq(alpha - beta) / (4.0 * alpha)), 0.15));

    double slope = (phi[n - 1] - phi[n - 2]) / (xs[n - 1] - xs[n - 2]);
    double slope_ref = 0.5 * (alpha - beta);
    rep.add(CheckResult::make("eps2-slope-plus", eps * eps * slope, slope_ref,
                              0.10 * std::abs(slope_ref)));

    rep.add(CheckResult::make("lambda-eps", lam, 0.0,
                              std::numeric_limits<double>::infinity(), true,
                              "sup deviation from the center values"));
    return rep;
}

} // namespace ccpb
