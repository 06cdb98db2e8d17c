#include "ccpb/fem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ccpb {

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys) {
    std::size_t n = sys.size();
    if (n == 0 || sys.rhs.size() != n || sys.sub.size() != n - 1 ||
        sys.super.size() != n - 1) {
        throw std::invalid_argument("inconsistent tridiagonal system sizes");
    }
    std::vector<double> c(n, 0.0), d(n, 0.0);
    if (sys.diag[0] == 0.0) {
        throw std::runtime_error("zero pivot in tridiagonal solve at row 0");
    }
    c[0] = (n > 1) ? sys.super[0] / sys.diag[0] : 0.0;
    d[0] = sys.rhs[0] / sys.diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        double m = sys.diag[i] - sys.sub[i - 1] * c[i - 1];
        if (m == 0.0) {
            throw std::runtime_error("zero pivot in tridiagonal solve at row " +
                                     std::to_string(i));
        }
        if (i + 1 < n) c[i] = sys.super[i] / m;
        d[i] = (sys.rhs[i] - sys.sub[i - 1] * d[i - 1]) / m;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    return x;
}

double trapz(const Grid& grid, std::span<const double> values) {
    if (values.size() != grid.n_nodes()) {
        throw std::invalid_argument("trapz: value count does not match grid");
    }
    const std::vector<double>& w = grid.weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) sum += w[i] * values[i];
    return sum;
}

double trapz_weighted_exp(const Field& field, double z, double cap) {
    const std::vector<double>& w = field.grid->weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        sum += w[i] * checked_exp(z * field.values[i], cap);
    }
    return sum;
}

TridiagonalSystem assemble_step_problem(const Grid& grid, double eps,
                                        const BoundaryData& bd,
                                        std::span<const double> g) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("assemble_step_problem: eps must be positive");
    }
    std::size_t n = grid.n_nodes();
    if (g.size() != n) {
        throw std::invalid_argument("assemble_step_problem: load length mismatch");
    }
    const double e2 = eps * eps;
    TridiagonalSystem sys;
    sys.sub.assign(n - 1, 0.0);
    sys.super.assign(n - 1, 0.0);
    sys.diag.assign(n, 0.0);
    sys.rhs.assign(n, 0.0);

    const std::vector<double>& w = grid.weights();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double k = e2 / grid.cell_size(i);
        sys.diag[i] += k;
        sys.diag[i + 1] += k;
        sys.sub[i] -= k;
        sys.super[i] -= k;
    }
    for (std::size_t i = 0; i < n; ++i) sys.rhs[i] = -w[i] * g[i];

    if (bd.dirichlet()) {
        sys.diag[0] = 1.0;
        sys.super[0] = 0.0;
        sys.rhs[0] = bd.phi_minus;
        sys.diag[n - 1] = 1.0;
        sys.sub[n - 2] = 0.0;
        sys.rhs[n - 1] = bd.phi_plus;
    } else {
        sys.diag[0] += e2 / bd.eta;
        sys.rhs[0] += e2 / bd.eta * bd.phi_minus;
        sys.diag[n - 1] += e2 / bd.eta;
        sys.rhs[n - 1] += e2 / bd.eta * bd.phi_plus;
    }
    return sys;
}

} // namespace ccpb
