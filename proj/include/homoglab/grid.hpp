#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "homoglab/errors.hpp"

namespace homog {

// Uniform structured node grid on an interval (1D) or rectangle (2D).
// Nodes per axis include both endpoints: x_i = lower + i*h, i = 0..count-1,
// and (upper - lower) == h*(count - 1).
//
// The same type also carries periodic lattices (used by the cell module):
// there the nodes 0..count-1 represent one period of length h*count and the
// operator wraps neighbor indices; `upper` is then the last node, not the
// period end.
struct Grid {
    int dim = 1;
    std::array<double, 2> lower{0.0, 0.0};
    std::array<double, 2> upper{1.0, 0.0};
    std::array<int, 2> count{2, 1};
    std::array<double, 2> spacing{1.0, 0.0};

    static Grid line(double a, double b, int n) {
        if (n < 3 || !(b > a)) throw InvalidInput("grid: need n >= 3 nodes and upper > lower");
        Grid g;
        g.dim = 1;
        g.lower = {a, 0.0};
        g.upper = {b, 0.0};
        g.count = {n, 1};
        g.spacing = {(b - a) / (n - 1), 0.0};
        return g;
    }

    static Grid rect(double ax, double ay, double bx, double by, int nx, int ny) {
        if (nx < 3 || ny < 3 || !(bx > ax) || !(by > ay))
            throw InvalidInput("grid: need >= 3 nodes per axis and upper > lower");
        Grid g;
        g.dim = 2;
        g.lower = {ax, ay};
        g.upper = {bx, by};
        g.count = {nx, ny};
        g.spacing = {(bx - ax) / (nx - 1), (by - ay) / (ny - 1)};
        return g;
    }

    // Periodic lattice covering [a, a + period) with n independent nodes per axis.
    static Grid periodic_lattice(int dim, double a0, double period, int n) {
        if (n < 3) throw InvalidInput("grid: need n >= 3 nodes");
        Grid g;
        g.dim = dim;
        const double h = period / n;
        g.lower = {a0, dim == 2 ? a0 : 0.0};
        g.upper = {a0 + h * (n - 1), dim == 2 ? a0 + h * (n - 1) : 0.0};
        g.count = {n, dim == 2 ? n : 1};
        g.spacing = {h, dim == 2 ? h : 0.0};
        return g;
    }

    int nx() const { return count[0]; }
    int ny() const { return count[1]; }
    std::int64_t nodes() const { return std::int64_t(count[0]) * count[1]; }
    int index(int i, int j = 0) const { return j * count[0] + i; }
    double x(int i) const { return lower[0] + i * spacing[0]; }
    double y(int j) const { return dim == 2 ? lower[1] + j * spacing[1] : 0.0; }

    bool is_boundary(int i, int j = 0) const {
        if (i == 0 || i == count[0] - 1) return true;
        return dim == 2 && (j == 0 || j == count[1] - 1);
    }

    double hx() const { return spacing[0]; }
    double hy() const { return dim == 2 ? spacing[1] : 1.0; }
    // Volume weight of one node cell.
    double cell_volume() const { return dim == 1 ? spacing[0] : spacing[0] * spacing[1]; }

    bool same_as(const Grid& o) const {
        return dim == o.dim && count == o.count && lower == o.lower && upper == o.upper;
    }
};

// Scalar field on a grid, stored row-major (x fastest).
struct GridFunction {
    Grid grid;
    std::vector<double> v;

    GridFunction() = default;
    explicit GridFunction(const Grid& g, double fill = 0.0) : grid(g), v(g.nodes(), fill) {}

    double& operator()(int i, int j = 0) { return v[grid.index(i, j)]; }
    double operator()(int i, int j = 0) const { return v[grid.index(i, j)]; }
    std::size_t size() const { return v.size(); }
};

// Discrete norms: h^d-weighted sums (vi_solver conventions).
double norm_l2(const GridFunction& u);
double norm_l1(const GridFunction& u);
double norm_linf(const GridFunction& u);
// Squared L2 norm of the forward-difference gradient (edge-based).
double grad_norm_l2_sq(const GridFunction& u);
double dot_h(const GridFunction& a, const GridFunction& b);  // h^d-weighted inner product

GridFunction diff(const GridFunction& a, const GridFunction& b);

}  // namespace homog
