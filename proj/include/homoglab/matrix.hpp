#pragma once

#include <array>
#include <cmath>

#include "homoglab/errors.hpp"

namespace homog {

// Symmetric 2x2 matrix (a12 = a21). For 1D fields only a11 is meaningful;
// the other entries are kept at zero so the same type serves both dimensions.
struct SymMat {
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;

    static SymMat identity(int dim) {
        return dim == 1 ? SymMat{1.0, 0.0, 0.0} : SymMat{1.0, 0.0, 1.0};
    }
    static SymMat scalar(double c, int dim) {
        return dim == 1 ? SymMat{c, 0.0, 0.0} : SymMat{c, 0.0, c};
    }
    static SymMat diag(double d1, double d2) { return SymMat{d1, 0.0, d2}; }

    SymMat operator+(const SymMat& o) const { return {a11 + o.a11, a12 + o.a12, a22 + o.a22}; }
    SymMat operator-(const SymMat& o) const { return {a11 - o.a11, a12 - o.a12, a22 - o.a22}; }
    SymMat operator*(double c) const { return {a11 * c, a12 * c, a22 * c}; }

    std::array<double, 2> apply(const std::array<double, 2>& v) const {
        return {a11 * v[0] + a12 * v[1], a12 * v[0] + a22 * v[1]};
    }

    // Eigenvalues; for dim == 1 the pair is (a11, a11).
    std::array<double, 2> eigenvalues(int dim) const {
        if (dim == 1) return {a11, a11};
        const double tr = a11 + a22;
        const double det = a11 * a22 - a12 * a12;
        double disc = tr * tr / 4.0 - det;
        if (disc < 0.0) disc = 0.0;  // symmetric => real spectrum; clamp roundoff
        const double s = std::sqrt(disc);
        return {tr / 2.0 - s, tr / 2.0 + s};
    }

    double spectral_norm(int dim) const {
        auto ev = eigenvalues(dim);
        return std::max(std::fabs(ev[0]), std::fabs(ev[1]));
    }

    double quad(const std::array<double, 2>& v) const {
        return a11 * v[0] * v[0] + 2.0 * a12 * v[0] * v[1] + a22 * v[1] * v[1];
    }

    bool is_diagonal(double tol = 0.0) const { return std::fabs(a12) <= tol; }
};

// Validates I <= a <= Lambda*I (both bounds as eigenvalue bounds).
inline void check_elliptic(const SymMat& a, double lambda, int dim, double slack = 1e-12) {
    auto ev = a.eigenvalues(dim);
    if (!(ev[0] >= 1.0 - slack) || !(ev[1] <= lambda + slack))
        throw InvalidInput("matrix violates ellipticity bounds [1, Lambda]");
}

}  // namespace homog
