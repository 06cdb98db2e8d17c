#include "ccpb/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ccpb/rootfind.hpp"

namespace ccpb {

namespace {

constexpr double kScalarTol = 1e-13;
constexpr double kMonotoneSlack = 1e-10;

void require_electroneutral(const IonSystem& sys, const char* who) {
    if (!sys.electroneutral()) {
        throw std::invalid_argument(std::string(who) +
                                    ": system must be electroneutral");
    }
}

// Two-variable Newton polish on (eq1, eq2) with step clipping so the iterate
// stays inside |c| < t.
void newton_polish(const IonSystem& sys, double phi_plus, double gamma, double& t,
                   double& c) {
    for (int iter = 0; iter < 20; ++iter) {
        double d = sys.f_minus_f0(t - c);
        if (!(d > 0.0)) break;
        double r = std::sqrt(d);
        double F1 = phi_plus - t - gamma * r;
        double F2 = sys.f(t - c) - sys.f(-t - c);
        double fp = sys.f_prime(t - c);
        double fm = sys.f_prime(-t - c);
        double J11 = -1.0 - gamma * fp / (2.0 * r);
        double J12 = gamma * fp / (2.0 * r);
        double J21 = fp + fm;
        double J22 = -fp + fm;
        double det = J11 * J22 - J12 * J21;
        if (det == 0.0) break;
        double dt = (-F1 * J22 + F2 * J12) / det;
        double dc = (-J11 * F2 + J21 * F1) / det;
        double tn = t + dt;
        double cn = c + dc;
        double scale = 1.0;
        while (scale > 1e-4 && !(std::abs(cn) < tn && tn <= phi_plus + 1e-12)) {
            scale *= 0.5;
            tn = t + scale * dt;
            cn = c + scale * dc;
        }
        if (!(std::abs(cn) < tn)) break;
        t = tn;
        c = cn;
        if (std::abs(F1) < 1e-14 && std::abs(F2) < 1e-14) break;
    }
}

} // namespace

double c_star_neutral(const IonSystem& sys, double phi_plus) {
    require_electroneutral(sys, "c_star_neutral");
    if (!(phi_plus > 0.0)) {
        throw std::invalid_argument("c_star_neutral: phi_plus must be positive");
    }
    // g(c) = f(phi_plus - c) - f(-phi_plus - c) is strictly decreasing on
    // (-phi_plus, phi_plus) with a sign change.
    auto g = [&](double c) { return sys.f(phi_plus - c) - sys.f(-phi_plus - c); };
    return bisect(g, -phi_plus + 1e-15, phi_plus - 1e-15, kScalarTol, 300);
}

LimitPair solve_tc(const IonSystem& sys, double phi_plus, double gamma) {
    require_electroneutral(sys, "solve_tc");
    if (!(phi_plus > 0.0)) {
        throw std::invalid_argument("solve_tc: phi_plus must be positive");
    }
    if (gamma < 0.0) {
        throw std::invalid_argument("solve_tc: gamma must be nonnegative");
    }

    LimitPair pair;
    pair.gamma = gamma;
    if (gamma == 0.0) {
        pair.t = phi_plus;
        pair.c = c_star_neutral(sys, phi_plus);
    } else {
        // k is strictly increasing on (0, inf) with k(0) = -2 phi_plus < 0.
        auto k = [&](double s) {
            return s - 2.0 * phi_plus + 2.0 * gamma * std::sqrt(sys.f_minus_f0(s));
        };
        double s1 = bisect(k, 1e-300, 2.0 * phi_plus, kScalarTol, 300);
        auto h = [&](double s) { return sys.f(s) - sys.f(k(s)); };
        double s2 = bisect(h, 1e-300, s1, kScalarTol, 300);
        pair.t = phi_plus - gamma * std::sqrt(sys.f_minus_f0(s2));
        pair.c = pair.t - s2;
        newton_polish(sys, phi_plus, gamma, pair.t, pair.c);
    }
    pair.eq1_residual =
        phi_plus - pair.t - gamma * std::sqrt(std::max(sys.f_minus_f0(pair.t - pair.c), 0.0));
    pair.eq2_residual = sys.f(pair.t - pair.c) - sys.f(-pair.t - pair.c);
    return pair;
}

double c_star_bracket(double t) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("c_star_bracket: t must be positive");
    }
    return std::log(1.0 / std::cosh(t)) / 3.0;
}

double ratio_ca1(double t, double c) {
    if (c == 0.0) {
        throw std::domain_error("ratio_ca1: c = 0 is a removable singularity");
    }
    if (!(t > 0.0)) {
        throw std::invalid_argument("ratio_ca1: t must be positive");
    }
    return (1.0 - std::exp(3.0 * c) * std::cosh(t)) / (std::exp(c) * std::sinh(c));
}

double ratio_ca2(double t, double c, double z) {
    if (c == 0.0 || !(t > 0.0) || std::sinh(t) == 0.0) {
        throw std::domain_error("ratio_ca2: degenerate arguments");
    }
    if (z < 2.0) {
        throw std::invalid_argument("ratio_ca2: z must be >= 2");
    }
    return (z - std::exp((1.0 + z) * c) * std::sinh(z * t) / std::sinh(t)) /
           (2.0 * std::exp(c) * std::sinh(c));
}

double pb_t_hat(const IonSystem& sys, double phi_plus, double gamma) {
    require_electroneutral(sys, "pb_t_hat");
    if (gamma < 0.0) {
        throw std::invalid_argument("pb_t_hat: gamma must be nonnegative");
    }
    if (phi_plus == 0.0 || gamma == 0.0) {
        return phi_plus;
    }
    double lo = std::min(0.0, phi_plus);
    double hi = std::max(0.0, phi_plus);
    // g > 0 at t = 0 and g < 0 at t = phi_plus.
    auto g = [&](double t) {
        return std::abs(phi_plus - t) -
               gamma * std::sqrt(std::max(sys.f_minus_f0(t), 0.0));
    };
    return bisect(g, lo, hi, kScalarTol, 300);
}

double pb_nonneutral_r(const IonSystem& sys) {
    // f is strictly convex, so f' is increasing with a single root.
    auto g = [&](double s) { return sys.f_prime(s); };
    return bisect_expanding(g, -1.0, 1.0, kScalarTol);
}

SweepTable gamma_sweep(const IonSystem& sys, double phi_plus,
                       const std::vector<double>& gammas) {
    require_electroneutral(sys, "gamma_sweep");
    for (std::size_t i = 0; i + 1 < gammas.size(); ++i) {
        if (!(gammas[i] < gammas[i + 1])) {
            throw std::invalid_argument("gamma_sweep: gammas must be strictly increasing");
        }
    }
    if (!gammas.empty() && gammas.front() < 0.0) {
        throw std::invalid_argument("gamma_sweep: gammas must be nonnegative");
    }

    SweepTable table;
    table.rows.reserve(gammas.size());
    for (double g : gammas) {
        LimitPair p;
        try {
            p = solve_tc(sys, phi_plus, g);
        } catch (const std::exception& e) {
            throw std::runtime_error("gamma_sweep failed at gamma = " +
                                     std::to_string(g) + ": " + e.what());
        }
        table.rows.push_back({g, p.t, p.c});
    }

    table.monotone_t = true;
    table.monotone_tc = true;
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
        if (table.rows[i + 1].t > table.rows[i].t + kMonotoneSlack) {
            table.monotone_t = false;
        }
        double tc0 = table.rows[i].t - table.rows[i].c;
        double tc1 = table.rows[i + 1].t - table.rows[i + 1].c;
        if (tc1 > tc0 + kMonotoneSlack) {
            table.monotone_tc = false;
        }
    }

    // Sign changes of consecutive c differences; steps within the slack are
    // treated as flat and skipped.
    int last_sign = 0;
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
        double dc = table.rows[i + 1].c - table.rows[i].c;
        int sign = (dc > kMonotoneSlack) ? 1 : (dc < -kMonotoneSlack ? -1 : 0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) {
            table.c_extrema.push_back(i);
        }
        last_sign = sign;
    }
    return table;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw std::invalid_argument("log_spaced: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> out(n);
    double llo = std::log10(lo);
    double lhi = std::log10(hi);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) /
                                    static_cast<double>(n - 1));
    }
    return out;
}

} // namespace ccpb
