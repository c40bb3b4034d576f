#include "homoglab/grid.hpp"

#include <cmath>

namespace homog {

double norm_l2(const GridFunction& u) {
    double s = 0.0;
    for (double x : u.v) s += x * x;
    return std::sqrt(s * u.grid.cell_volume());
}

double norm_l1(const GridFunction& u) {
    double s = 0.0;
    for (double x : u.v) s += std::fabs(x);
    return s * u.grid.cell_volume();
}

double norm_linf(const GridFunction& u) {
    double s = 0.0;
    for (double x : u.v) s = std::max(s, std::fabs(x));
    return s;
}

double grad_norm_l2_sq(const GridFunction& u) {
    const Grid& g = u.grid;
    const double vol = g.cell_volume();
    double s = 0.0;
    const double ihx = 1.0 / g.hx();
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i + 1 < g.nx(); ++i) {
            const double d = (u(i + 1, j) - u(i, j)) * ihx;
            s += d * d;
        }
    if (g.dim == 2) {
        const double ihy = 1.0 / g.hy();
        for (int j = 0; j + 1 < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) {
                const double d = (u(i, j + 1) - u(i, j)) * ihy;
                s += d * d;
            }
    }
    return s * vol;
}

double dot_h(const GridFunction& a, const GridFunction& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.v.size(); ++k) s += a.v[k] * b.v[k];
    return s * a.grid.cell_volume();
}

GridFunction diff(const GridFunction& a, const GridFunction& b) {
    if (!a.grid.same_as(b.grid)) throw InvalidInput("diff: grids differ");
    GridFunction d(a.grid);
    for (std::size_t k = 0; k < a.v.size(); ++k) d.v[k] = a.v[k] - b.v[k];
    return d;
}

}  // namespace homog
