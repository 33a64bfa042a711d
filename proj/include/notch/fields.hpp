#pragma once

#include "notch/basis.hpp"
#include "notch/polar_series.hpp"

#include <string>
#include <vector>

namespace notch {

// Total tractions either keep only the gradient terms (the singular part that
// enters the face conditions) or add the monopolar stress as well.
enum class TotalForm { Leading, Full };

// Every physical field of one solution. Plane modes use the u/eps/tau/m/t
// plane members, the anti-plane mode uses w and the *z members.
template <class T>
struct FieldSet {
    Mode mode = Mode::PlaneSym;
    T u_r{}, u_t{}, w{};
    T eps_rr{}, eps_tt{}, eps_rt{}, eps_rz{}, eps_tz{};
    T tau_rr{}, tau_tt{}, tau_rt{}, tau_zz{}, tau_rz{}, tau_tz{};
    T m_rrr{}, m_rrt{}, m_rtt{}, m_trr{}, m_ttr{}, m_ttt{};
    T m_rrz{}, m_rtz{}, m_trz{}, m_ttz{};
    T t_tr{}, t_tt{}, t_rr{}, t_rt{}, t_tz{};
    T W{};
};

using FieldSeries = FieldSet<PolarSeries>;
using FieldValues = FieldSet<double>;

// Visits the mode's components in output-column order as f(name, member).
template <class S, class F>
void for_each_component(S& s, F&& f) {
    if (is_plane(s.mode)) {
        f("u_r", s.u_r), f("u_t", s.u_t);
        f("eps_rr", s.eps_rr), f("eps_tt", s.eps_tt), f("eps_rt", s.eps_rt);
        f("tau_rr", s.tau_rr), f("tau_tt", s.tau_tt), f("tau_rt", s.tau_rt), f("tau_zz", s.tau_zz);
        f("m_rrr", s.m_rrr), f("m_rrt", s.m_rrt), f("m_rtt", s.m_rtt);
        f("m_trr", s.m_trr), f("m_ttr", s.m_ttr), f("m_ttt", s.m_ttt);
        f("t_tr", s.t_tr), f("t_tt", s.t_tt), f("t_rr", s.t_rr), f("t_rt", s.t_rt);
    } else {
        f("w", s.w);
        f("eps_rz", s.eps_rz), f("eps_tz", s.eps_tz);
        f("tau_rz", s.tau_rz), f("tau_tz", s.tau_tz);
        f("m_rrz", s.m_rrz), f("m_rtz", s.m_rtz), f("m_trz", s.m_trz), f("m_ttz", s.m_ttz);
        f("t_tz", s.t_tz);
    }
    f("W", s.W);
}

std::vector<std::string> component_names(Mode m);

// Constitutive pipeline: strain, then tau = lambda tr(eps) I + 2 mu eps,
// m_rpq = c d_r tau_pq with its covariant theta companions, then total tractions.
FieldSeries field_series(const DisplacementField& u, const MaterialParams& mat, TotalForm form = TotalForm::Leading);
FieldSeries field_series(const EigenSolution& sol, std::size_t amp_index, TotalForm form = TotalForm::Leading);

// Strain-energy density from the strain series of s (W member is ignored).
PolarSeries energy_density(const FieldSeries& s, const MaterialParams& mat);

FieldValues evaluate(const FieldSeries& s, double r, double theta);

// Closed-form component formulas written directly in terms of the basis
// amplitudes (original, unscaled basis) and the p = 1 constants. Independent of
// field_series. Covers strains, tau, m and the theta-face total tractions.
FieldSeries direct_field_series(Mode m, double p, const MaterialParams& mat, const std::vector<double>& amps,
                                const std::vector<double>& p1_coefs);

struct Displacement {
    double u_r = 0.0, u_t = 0.0, w = 0.0;
};
struct StrainTensor {
    double eps_rr = 0.0, eps_tt = 0.0, eps_rt = 0.0;
    double eps_rz = 0.0, eps_tz = 0.0;
};
struct MonopolarStress {
    double tau_rr = 0.0, tau_tt = 0.0, tau_rt = 0.0, tau_zz = 0.0;
    double tau_rz = 0.0, tau_tz = 0.0;
};
struct DipolarStress {
    double m_rrr = 0.0, m_rrt = 0.0, m_rtt = 0.0, m_trr = 0.0, m_ttr = 0.0, m_ttt = 0.0;
    double m_rrz = 0.0, m_rtz = 0.0, m_trz = 0.0, m_ttz = 0.0;
};
struct ThetaTraction {
    double t_tr = 0.0, t_tt = 0.0, t_tz = 0.0;
};
struct RadialTraction {
    double t_rr = 0.0, t_rt = 0.0;
};

Displacement displacement(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt);
StrainTensor strain(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt);
MonopolarStress monopolar_stress(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt);
DipolarStress dipolar_stress(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt);
ThetaTraction total_stress_theta(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt,
                                 TotalForm form = TotalForm::Leading);
RadialTraction total_stress_r(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt,
                              TotalForm form = TotalForm::Leading);
double strain_energy_density(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt);

// Crack-tip closed forms. Amplitudes: I -> {C1, C3, A1, A2}, II -> {C2, B1, B2},
// III -> {E, D}.
enum class CrackMode { I, II, III };
std::string crack_mode_tag(CrackMode m);
std::size_t crack_amplitude_count(CrackMode m);
FieldSeries crack_reference_series(CrackMode m, const std::vector<double>& amps, const MaterialParams& mat);
FieldValues crack_reference_fields(CrackMode m, const std::vector<double>& amps, const MaterialParams& mat,
                                   const PolarPoint& pt);

// Least-squares weights reproducing the target displacement at the sample points
// with the solution's eigenfields and its p = 1 members. Result: nullity eigen
// weights followed by the p = 1 constants.
struct AmplitudeFit {
    std::vector<double> eigen_weights;
    std::vector<double> p1_coefs;
    double residual = 0.0;  // max abs displacement misfit at the samples
};
AmplitudeFit match_amplitudes(const EigenSolution& sol, const FieldSeries& target, const std::vector<PolarPoint>& pts);

}  // namespace notch
