#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace ccpb {

/// 1D mesh on [-1, 1]. Nodes are strictly increasing, first node exactly -1,
/// last exactly +1. Immutable after construction.
class Grid {
public:
    /// n_cells + 1 equally spaced nodes. Rejects n_cells < 2.
    static Grid uniform(int n_cells);

    /// Symmetric mesh refined geometrically toward both endpoints: cell sizes
    /// grow from `min_cell` at +-1 by factor `growth` until `interior_h` is
    /// reached, then a uniform interior block. min_cell == interior_h reduces
    /// to uniform spacing.
    static Grid graded(double min_cell, double growth, double interior_h);

    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t n_nodes() const { return nodes_.size(); }
    std::size_t n_cells() const { return nodes_.size() - 1; }
    double node(std::size_t i) const { return nodes_[i]; }
    double cell_size(std::size_t i) const { return nodes_[i + 1] - nodes_[i]; }

    /// Trapezoid quadrature weights per node.
    const std::vector<double>& weights() const { return weights_; }

    /// Index of the node closest to x.
    std::size_t index_nearest(double x) const;

private:
    explicit Grid(std::vector<double> nodes);
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Nodal potential values on a grid.
struct Field {
    std::shared_ptr<const Grid> grid;
    std::vector<double> values;

    Field(std::shared_ptr<const Grid> g, std::vector<double> v);

    static Field constant(std::shared_ptr<const Grid> g, double value);
    /// Linear interpolant of (left, right) across [-1, 1].
    static Field linear(std::shared_ptr<const Grid> g, double left, double right);

    std::size_t size() const { return values.size(); }
    double at_left() const { return values.front(); }
    double at_right() const { return values.back(); }
};

/// Nodal derivative: central differences at interior nodes, one-sided at the
/// endpoints.
std::vector<double> nodal_gradient(const Field& field);

} // namespace ccpb
