#pragma once

#include "notch/basis.hpp"
#include "notch/eigensolver.hpp"
#include "notch/equilibrium.hpp"
#include "notch/fields.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace notch {

struct ResidualVector {
    Mode mode = Mode::PlaneSym;
    PolarSeries s_r, s_theta;                   // plane intermediates
    PolarSeries residual_r, residual_theta;     // leading-order operator
    PolarSeries full_r, full_theta;             // s - c (leading operator)
    PolarSeries residual_w, full_w;             // anti-plane: biharmonic, c biharmonic - laplacian
    double field_scale = 0.0;                   // max abs coefficient of the displacement

    double leading_relative() const;
    double full_relative() const;
};

ResidualVector pde_residual(const DisplacementField& u, const MaterialParams& mat);

struct BCResidual {
    std::vector<std::string> names;  // t_tr, t_tt, m_ttr, m_ttt | t_tz, m_ttz
    std::vector<double> values;      // max over r in {0.5, 1, 2} and theta = +-a
    double max() const;
};

// Couple conditions are divided by the largest dipolar-stress magnitude bound
// (sum |coef| r^alpha) at the same r, traction conditions by the larger of that
// bound over r and the monopolar bound. A field with no stresses scores 0.
BCResidual bc_residual(const DisplacementField& u, const MaterialParams& mat, double a);
BCResidual bc_residual(const EigenSolution& sol);

struct DetCharSample {
    double p = 0.0;
    double sigma_ratio = 0.0;
    double bracket = 0.0;
    double distance = 0.0;  // to the nearest bracket root or to {1, 2}
    bool is_root = false;
    bool judged = false;
    bool pass = false;
};
struct DetCharReport {
    std::vector<DetCharSample> samples;
    bool pass = true;
};

// Pairs sigma_min / sigma_max of the boundary matrix with the bracket value. Every
// bracket root in (1, 4] is checked for ratio < 1e-6; samples at distance >= 0.02
// from roots and from {1, 2} must have ratio > 1e-4.
DetCharReport det_vs_charfn(const WedgeCase& wc, double nu, const std::vector<double>& p_samples);

struct EnergyScaling {
    double U_r0 = 0.0, U_2r0 = 0.0;
    double exponent = 0.0;  // log2(U(2 r0) / U(r0))
    double expected = 0.0;  // 2p - 2
};
EnergyScaling energy_scaling(const DisplacementField& u, const MaterialParams& mat, double a, double p, double r0);
EnergyScaling energy_scaling(const EigenSolution& sol, std::size_t amp_index, double r0);

// Largest coefficient of m_rpq - c d_r tau_pq over the r-normal dipolar
// components, relative to the largest m coefficient.
double gradient_consistency(const FieldSeries& s, const MaterialParams& mat);

// Largest pointwise gap between two field sets over the mode's columns, divided
// by the largest magnitude bound in the column's group (u, eps, tau, m, t) at the
// point. W and the named columns are skipped.
double field_gap(const FieldSeries& a, const FieldSeries& b, const std::vector<PolarPoint>& pts,
                 const std::vector<std::string>& skip = {});

// Columns not produced by direct_field_series.
std::vector<std::string> direct_route_gaps();

struct FdCheck {
    double first_order = 0.0;  // strains, m from tau, t from m: central differences
    double residual = 0.0;     // leading PDE residual, outer derivatives differenced, over |u| / r^4
};
// Central differences with step 1e-5 r at the given points.
FdCheck fd_spot_check(const DisplacementField& u, const MaterialParams& mat, const std::vector<PolarPoint>& pts);

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;  // sorted by name
    bool pass() const;
    nlohmann::json to_json() const;
};

// suite: all | crack | halfspace | sweep | equilibrium
VerifyReport run_suite(const std::string& suite, std::uint64_t seed);
std::vector<std::string> suite_names();

}  // namespace notch
