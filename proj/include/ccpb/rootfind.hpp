#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace ccpb {

/// Bisection for a continuous function with f(lo) and f(hi) of opposite sign.
/// Runs until the bracket width drops below tol_x (absolute).
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol_x, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::runtime_error("bisect: endpoints do not bracket a root");
    }
    for (int i = 0; i < max_iter && hi - lo > tol_x; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Expands [lo, hi] symmetrically (doubling the width) until f changes sign,
/// then bisects. Used for roots of strictly monotone functions whose bracket
/// is not known a priori.
inline double bisect_expanding(const std::function<double(double)>& f, double lo,
                               double hi, double tol_x, int max_expand = 100) {
    for (int i = 0; i < max_expand; ++i) {
        if ((f(lo) > 0.0) != (f(hi) > 0.0)) {
            return bisect(f, lo, hi, tol_x);
        }
        double width = hi - lo;
        lo -= width;
        hi += width;
    }
    throw std::runtime_error("bisect_expanding: no sign change found");
}

} // namespace ccpb
