#pragma once

#include "notch/basis.hpp"
#include "notch/fields.hpp"

#include <functional>

namespace notch {

// Concentrated line forces at the corners A (theta = +a) and B (theta = -a) of
// the circular sector r < r0, in polar components at each corner.
struct CornerForces {
    double Er_A = 0.0, Et_A = 0.0;
    double Er_B = 0.0, Et_B = 0.0;
};

struct ArcResultants {
    double H = 0.0, V = 0.0, T = 0.0;  // exact antiderivatives
    double H_quad = 0.0, V_quad = 0.0, T_quad = 0.0;
    int quad_nodes = 0;  // largest node count used by the quadrature
};

struct EquilibriumReport {
    double r0 = 0.0, a = 0.0;
    ArcResultants arc;
    CornerForces edge;
    double sum_fx = 0.0, sum_fy = 0.0, sum_m = 0.0;
    double scale = 0.0;  // |H| + |V| + |T|/r0 + sum |E|
    double tol = 1e-8;
    bool pass = false;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_value = 0.0;  // same rule applied to |f|
    int nodes = 0;
    bool converged = false;
};

// Composite Gauss-Legendre on [t0, t1]: 64 nodes per quarter turn, panel count
// doubled until successive estimates agree to rel_tol (at most max_nodes nodes).
QuadratureResult gauss_legendre(const std::function<double(double)>& f, double t0, double t1, double rel_tol = 1e-12,
                                int max_nodes = 4096);

CornerForces edge_forces(const FieldSeries& s, double r0, double a);
CornerForces edge_forces(const EigenSolution& sol, std::size_t amp_index, double r0, double a);

// Throws QuadratureDisagreement when quadrature and antiderivative differ by more
// than 1e-8 relative.
ArcResultants resultant_on_arc(const FieldSeries& s, double r0, double a);
ArcResultants resultant_on_arc(const EigenSolution& sol, std::size_t amp_index, double r0);

EquilibriumReport check_equilibrium(const FieldSeries& s, double r0, double a);
EquilibriumReport check_equilibrium(const EigenSolution& sol, std::size_t amp_index, double r0);

}  // namespace notch
