#include "ccpb/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccpb {

Grid::Grid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 3) {
        throw std::invalid_argument("grid needs at least 3 nodes");
    }
    if (nodes_.front() != -1.0 || nodes_.back() != 1.0) {
        throw std::invalid_argument("grid must span [-1, 1] exactly");
    }
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        if (!(nodes_[i] < nodes_[i + 1])) {
            throw std::invalid_argument("grid nodes must be strictly increasing");
        }
    }
    weights_.assign(nodes_.size(), 0.0);
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        double h = nodes_[i + 1] - nodes_[i];
        weights_[i] += 0.5 * h;
        weights_[i + 1] += 0.5 * h;
    }
}

Grid Grid::uniform(int n_cells) {
    if (n_cells < 2) {
        throw std::invalid_argument("uniform grid needs n_cells >= 2");
    }
    std::vector<double> nodes(static_cast<std::size_t>(n_cells) + 1);
    for (int i = 0; i <= n_cells; ++i) {
        nodes[static_cast<std::size_t>(i)] = static_cast<double>(2 * i - n_cells) / n_cells;
    }
    return Grid(std::move(nodes));
}

Grid Grid::graded(double min_cell, double growth, double interior_h) {
    if (!(min_cell > 0.0) || !(interior_h > 0.0) || min_cell > interior_h) {
        throw std::invalid_argument("graded grid needs 0 < min_cell <= interior_h");
    }
    if (!(growth > 1.0)) {
        throw std::invalid_argument("graded grid needs growth > 1");
    }

    std::vector<double> sizes;
    double c = min_cell;
    while (c < interior_h * (1.0 - 1e-12)) {
        sizes.push_back(std::min(c, interior_h));
        c *= growth;
    }
    double graded_len = 0.0;
    for (double s : sizes) graded_len += s;
    if (graded_len >= 1.0) {
        throw std::invalid_argument("graded block exceeds half domain; raise growth");
    }

    int n_interior = static_cast<int>(std::ceil((2.0 - 2.0 * graded_len) / interior_h));
    if (n_interior < 1) n_interior = 1;
    double h_int = (2.0 - 2.0 * graded_len) / n_interior;

    // Build the left half then mirror it so the mesh is symmetric and the
    // right endpoint is exactly +1.
    std::vector<double> left;
    left.push_back(-1.0);
    for (double s : sizes) left.push_back(left.back() + s);

    std::vector<double> nodes = left;
    for (int i = 1; i < n_interior; ++i) {
        nodes.push_back(left.back() + i * h_int);
    }
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        nodes.push_back(-*it);
    }
    return Grid(std::move(nodes));
}

std::size_t Grid::index_nearest(double x) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
    if (it == nodes_.begin()) return 0;
    if (it == nodes_.end()) return nodes_.size() - 1;
    std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
    return (x - nodes_[hi - 1] <= nodes_[hi] - x) ? hi - 1 : hi;
}

Field::Field(std::shared_ptr<const Grid> g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (!grid) {
        throw std::invalid_argument("field needs a grid");
    }
    if (values.size() != grid->n_nodes()) {
        throw std::invalid_argument("field length does not match grid");
    }
    for (double x : values) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("field values must be finite");
        }
    }
}

Field Field::constant(std::shared_ptr<const Grid> g, double value) {
    std::vector<double> v(g->n_nodes(), value);
    return Field(std::move(g), std::move(v));
}

Field Field::linear(std::shared_ptr<const Grid> g, double left, double right) {
    std::vector<double> v(g->n_nodes());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = left + (g->node(i) + 1.0) * 0.5 * (right - left);
    }
    return Field(std::move(g), std::move(v));
}

std::vector<double> nodal_gradient(const Field& field) {
    const std::vector<double>& x = field.grid->nodes();
    const std::vector<double>& u = field.values;
    std::size_t n = u.size();
    std::vector<double> g(n);
    g[0] = (u[1] - u[0]) / (x[1] - x[0]);
    g[n - 1] = (u[n - 1] - u[n - 2]) / (x[n - 1] - x[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        g[i] = (u[i + 1] - u[i - 1]) / (x[i + 1] - x[i - 1]);
    }
    return g;
}

} // namespace ccpb
