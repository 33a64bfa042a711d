#include "notch/fields.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace notch {

namespace {

PolarSeries R(double k, const PolarSeries& s) { return s.mul_rpow(k); }
PolarSeries sq(const PolarSeries& s) { return s * s; }

void plane_pipeline(FieldSeries& f, const MaterialParams& mat, TotalForm form) {
    const double lam = mat.lambda(), mu = mat.mu, c = mat.c;
    const PolarSeries& ur = f.u_r;
    const PolarSeries& ut = f.u_t;

    f.eps_rr = ur.d_r();
    f.eps_tt = R(-1, ur + ut.d_theta());
    f.eps_rt = 0.5 * (R(-1, ur.d_theta() - ut) + ut.d_r());

    const PolarSeries tr = f.eps_rr + f.eps_tt;
    f.tau_rr = lam * tr + 2 * mu * f.eps_rr;
    f.tau_tt = lam * tr + 2 * mu * f.eps_tt;
    f.tau_rt = 2 * mu * f.eps_rt;
    f.tau_zz = lam * tr;

    f.m_rrr = c * f.tau_rr.d_r();
    f.m_rrt = c * f.tau_rt.d_r();
    f.m_rtt = c * f.tau_tt.d_r();
    f.m_trr = c * R(-1, f.tau_rr.d_theta() - 2.0 * f.tau_rt);
    f.m_ttr = c * R(-1, f.tau_rt.d_theta() + f.tau_rr - f.tau_tt);
    f.m_ttt = c * R(-1, f.tau_tt.d_theta() + 2.0 * f.tau_rt);

    f.t_tr = -(f.m_trr.d_r() + f.m_rrt.d_r()) - R(-1, f.m_ttr.d_theta() + f.m_trr + f.m_rrt - f.m_ttt);
    f.t_tt = -(f.m_ttr.d_r() + f.m_rtt.d_r()) - R(-1, f.m_ttt.d_theta() + f.m_rtt + 2.0 * f.m_ttr);
    f.t_rr = -f.m_rrr.d_r() - R(-1, f.m_trr.d_theta() + f.m_rrt.d_theta() + f.m_rrr - 2.0 * f.m_ttr - f.m_rtt);
    f.t_rt = -f.m_rrt.d_r() - R(-1, f.m_rtt.d_theta() + f.m_ttr.d_theta() + f.m_trr + 2.0 * f.m_rrt - f.m_ttt);
    if (form == TotalForm::Full) {
        f.t_tr += f.tau_rt;
        f.t_tt += f.tau_tt;
        f.t_rr += f.tau_rr;
        f.t_rt += f.tau_rt;
    }
}

void antiplane_pipeline(FieldSeries& f, const MaterialParams& mat, TotalForm form) {
    const double mu = mat.mu, c = mat.c;
    f.eps_rz = 0.5 * f.w.d_r();
    f.eps_tz = 0.5 * R(-1, f.w.d_theta());
    f.tau_rz = 2 * mu * f.eps_rz;
    f.tau_tz = 2 * mu * f.eps_tz;

    f.m_rrz = c * f.tau_rz.d_r();
    f.m_rtz = c * f.tau_tz.d_r();
    f.m_trz = c * R(-1, f.tau_rz.d_theta() - f.tau_tz);
    f.m_ttz = c * R(-1, f.tau_tz.d_theta() + f.tau_rz);

    f.t_tz = -(f.m_rtz.d_r() + f.m_trz.d_r()) - R(-1, f.m_ttz.d_theta() + f.m_rtz + f.m_trz);
    if (form == TotalForm::Full) f.t_tz += f.tau_tz;
}

}  // namespace

std::vector<std::string> component_names(Mode m) {
    FieldValues v;
    v.mode = m;
    std::vector<std::string> names;
    for_each_component(v, [&](const char* n, double) { names.emplace_back(n); });
    return names;
}

PolarSeries energy_density(const FieldSeries& s, const MaterialParams& mat) {
    const double lam = mat.lambda(), mu = mat.mu, c = mat.c;
    if (is_plane(s.mode)) {
        const PolarSeries &err = s.eps_rr, &ett = s.eps_tt, &ert = s.eps_rt;
        const PolarSeries tr = err + ett;
        // theta-direction components of grad(eps), with the basis-rotation terms
        const PolarSeries g_rr = R(-1, err.d_theta() - 2.0 * ert);
        const PolarSeries g_rt = R(-1, ert.d_theta() + err - ett);
        const PolarSeries g_tt = R(-1, ett.d_theta() + 2.0 * ert);
        PolarSeries W = 0.5 * lam * sq(tr) + mu * (sq(err) + sq(ett) + 2.0 * sq(ert));
        W += 0.5 * lam * c * (sq(tr.d_r()) + sq(R(-1, tr.d_theta())));
        W += mu * c * (sq(err.d_r()) + 2.0 * sq(ert.d_r()) + sq(ett.d_r()) + sq(g_rr) + 2.0 * sq(g_rt) + sq(g_tt));
        return W;
    }
    const PolarSeries &erz = s.eps_rz, &etz = s.eps_tz;
    PolarSeries W = 2 * mu * (sq(erz) + sq(etz));
    W += 2 * mu * c *
         (sq(erz.d_r()) + sq(etz.d_r()) + sq(R(-1, erz.d_theta() - etz)) + sq(R(-1, etz.d_theta() + erz)));
    return W;
}

FieldSeries field_series(const DisplacementField& u, const MaterialParams& mat, TotalForm form) {
    FieldSeries f;
    f.mode = u.mode;
    if (is_plane(u.mode)) {
        f.u_r = u.u_r;
        f.u_t = u.u_t;
        plane_pipeline(f, mat, form);
    } else {
        f.w = u.w;
        antiplane_pipeline(f, mat, form);
    }
    f.W = energy_density(f, mat);
    return f;
}

FieldSeries field_series(const EigenSolution& sol, std::size_t amp_index, TotalForm form) {
    return field_series(sol.field(amp_index), sol.mat, form);
}

FieldValues evaluate(const FieldSeries& s, double r, double theta) {
    FieldValues v;
    v.mode = s.mode;
    v.u_r = s.u_r(r, theta), v.u_t = s.u_t(r, theta), v.w = s.w(r, theta);
    v.eps_rr = s.eps_rr(r, theta), v.eps_tt = s.eps_tt(r, theta), v.eps_rt = s.eps_rt(r, theta);
    v.eps_rz = s.eps_rz(r, theta), v.eps_tz = s.eps_tz(r, theta);
    v.tau_rr = s.tau_rr(r, theta), v.tau_tt = s.tau_tt(r, theta), v.tau_rt = s.tau_rt(r, theta);
    v.tau_zz = s.tau_zz(r, theta), v.tau_rz = s.tau_rz(r, theta), v.tau_tz = s.tau_tz(r, theta);
    v.m_rrr = s.m_rrr(r, theta), v.m_rrt = s.m_rrt(r, theta), v.m_rtt = s.m_rtt(r, theta);
    v.m_trr = s.m_trr(r, theta), v.m_ttr = s.m_ttr(r, theta), v.m_ttt = s.m_ttt(r, theta);
    v.m_rrz = s.m_rrz(r, theta), v.m_rtz = s.m_rtz(r, theta), v.m_trz = s.m_trz(r, theta);
    v.m_ttz = s.m_ttz(r, theta);
    v.t_tr = s.t_tr(r, theta), v.t_tt = s.t_tt(r, theta), v.t_rr = s.t_rr(r, theta), v.t_rt = s.t_rt(r, theta);
    v.t_tz = s.t_tz(r, theta);
    v.W = s.W(r, theta);
    return v;
}

FieldSeries direct_field_series(Mode m, double p, const MaterialParams& mat, const std::vector<double>& amps,
                                const std::vector<double>& p1) {
    using S = PolarSeries;
    const double mu = mat.mu, c = mat.c, nu = mat.nu, q = 1 - 2 * nu;
    FieldSeries f;
    f.mode = m;

    if (m == Mode::AntiplaneOdd) {
        const double D1 = amps.at(0), D2 = amps.at(1), E = p1.empty() ? 0.0 : p1.at(0);
        f.w = S::sin(E, 1, 1) + S::sin(D1, p, p) + S::sin(D2, p, p - 2);
        f.tau_rz = S::sin(mu * E, 0, 1) + S::sin(mu * p * D1, p - 1, p) + S::sin(mu * p * D2, p - 1, p - 2);
        f.tau_tz = S::cos(mu * E, 0, 1) + S::cos(mu * p * D1, p - 1, p) + S::cos(mu * (p - 2) * D2, p - 1, p - 2);
        f.eps_rz = (0.5 / mu) * f.tau_rz;
        f.eps_tz = (0.5 / mu) * f.tau_tz;
        const double K = mu * c * (p - 1);
        f.m_rtz = S::cos(K * p * D1, p - 2, p) + S::cos(K * (p - 2) * D2, p - 2, p - 2);
        f.m_trz = f.m_rtz;
        f.m_ttz = S::sin(-K * p * D1, p - 2, p) + S::sin(-K * (p - 4) * D2, p - 2, p - 2);
        f.m_rrz = S::sin(K * p * D1, p - 2, p) + S::sin(K * p * D2, p - 2, p - 2);
        const double K3 = mu * c * (p - 1) * (p - 2);
        f.t_tz = S::cos(-K3 * p * D1, p - 3, p) + S::cos(-K3 * (p + 2) * D2, p - 3, p - 2);
        f.W = energy_density(f, mat);
        return f;
    }

    const bool sym = m == Mode::PlaneSym;
    const double d = p + 8 * nu - 7;
    double A[4] = {amps.at(0), amps.at(1), amps.at(2), amps.at(3)};
    double e = p - 1;  // r exponent of the current group

    // sym: A cos(fr t), anti: B sin(fr t)
    auto C = [&](int k, double fr, double coef) {
        return sym ? S::cos(coef * A[k], e, fr) : S::sin(coef * A[k], e, fr);
    };
    // sym: sa A sin(fr t), anti: sb B cos(fr t)
    auto Sn = [&](int k, double fr, double sa, double sb, double coef) {
        return sym ? S::sin(sa * coef * A[k], e, fr) : S::cos(sb * coef * A[k], e, fr);
    };
    // sym: A4 cos((p-1) t), anti: -B4 sin((p-1) t)
    auto F4 = [&](double coef) { return C(3, p - 1, sym ? coef : -coef); };

    S err, ett, ert, trr, ttt, trt;
    if (sym) {
        const double C1 = p1.empty() ? 0.0 : p1.at(0), C3 = p1.empty() ? 0.0 : p1.at(1);
        err = S::cos(C1, 0, 0) + S::cos(C3, 0, 2);
        ett = S::cos(C1, 0, 0) + S::cos(-C3, 0, 2);
        ert = S::sin(-C3, 0, 2);
        trr = S::cos(2 * mu * C1 / q, 0, 0) + S::cos(2 * mu * C3, 0, 2);
        ttt = S::cos(2 * mu * C1 / q, 0, 0) + S::cos(-2 * mu * C3, 0, 2);
        trt = S::sin(-2 * mu * C3, 0, 2);
    } else {
        const double C2 = p1.empty() ? 0.0 : p1.at(0);
        err = S::sin(C2, 0, 2);
        ett = S::sin(-C2, 0, 2);
        ert = S::cos(C2, 0, 2);
        trr = S::sin(2 * mu * C2, 0, 2);
        ttt = S::sin(-2 * mu * C2, 0, 2);
        trt = S::cos(2 * mu * C2, 0, 2);
    }

    e = p - 1;
    f.eps_rr = err + C(0, p - 1, p) + C(1, p + 1, p) + C(2, p - 3, p);
    f.eps_tt = ett + C(0, p - 1, 1) + C(1, p + 1, -p) + C(2, p - 3, -(p * p + p - 8 * p * nu + 16 * nu - 8) / d) +
               F4(p - 1);
    f.eps_rt = ert + Sn(0, p - 1, -1, 1, (p - 1) / 2) + Sn(1, p + 1, -1, 1, p) +
               Sn(2, p - 3, -1, 1, (p * p - 3 * p - 8 * nu + 8) / d) + Sn(3, p - 1, 1, 1, (p - 1) / 2);
    f.tau_rr = trr + 2 * mu *
                         (C(0, p - 1, (p + nu - p * nu) / q) + C(1, p + 1, p) + C(2, p - 3, (p * p - 7 * p + 8 * nu) / d) +
                          F4(nu * (p - 1) / q));
    f.tau_tt = ttt + 2 * mu *
                         (C(0, p - 1, (1 - nu + p * nu) / q) + C(1, p + 1, -p) +
                          C(2, p - 3, -(p * p + p + 8 * nu - 8) / d) + F4((1 - nu) / q * (p - 1)));
    f.tau_rt = trt + mu * (Sn(0, p - 1, -1, 1, p - 1) + Sn(1, p + 1, -1, 1, 2 * p) +
                           Sn(2, p - 3, -1, 1, 2 * (p * p - 3 * p - 8 * nu + 8) / d) + Sn(3, p - 1, 1, 1, p - 1));
    f.tau_zz = nu * (f.tau_rr + f.tau_tt);

    e = p - 2;
    const double K = 2 * c * mu * (p - 1);
    f.m_rrr = K * (C(0, p - 1, (p + nu - p * nu) / q) + C(1, p + 1, p) + C(2, p - 3, (p * p - 7 * p + 8 * nu) / d) +
                   F4(nu * (p - 1) / q));
    f.m_ttt = K * (Sn(0, p - 1, 1, -1, (3 * nu - 2 - p * nu) / q) + Sn(1, p + 1, 1, -1, p) +
                   Sn(2, p - 3, 1, -1, (p * p - 3 * p + 8 * nu - 8) / d) + Sn(3, p - 1, 1, 1, (2 - p - 3 * nu + p * nu) / q));
    f.m_ttr = (-K / 2) * (C(0, p - 1, p - 3) + C(1, p + 1, 2 * p) + C(2, p - 3, 2 * (p * p - 7 * p - 8 * nu + 16) / d) -
                          F4(p - 3));
    f.m_rrt = (K / 2) * (Sn(0, p - 1, -1, 1, p - 1) + Sn(1, p + 1, -1, 1, 2 * p) +
                         Sn(2, p - 3, -1, 1, 2 * (p * p - 3 * p - 8 * nu + 8) / d) + Sn(3, p - 1, 1, 1, p - 1));
    f.m_trr = K * (Sn(0, p - 1, 1, -1, (1 - 3 * nu - p + p * nu) / q) + Sn(1, p + 1, -1, 1, p) +
                   Sn(2, p - 3, -1, 1, (p * p - 11 * p + 8 * nu + 16) / d) - Sn(3, p - 1, 1, 1, (1 - 3 * nu + p * nu) / q));
    f.m_rtt = K * (C(0, p - 1, (1 - nu + p * nu) / q) + C(1, p + 1, -p) + C(2, p - 3, -(p * p + p + 8 * nu - 8) / d) +
                   F4((1 - nu) * (p - 1) / q));

    e = p - 3;
    const double K3 = c * mu * (p - 1) * (p - 2);
    f.t_tr = 2 * K3 *
             (Sn(0, p - 1, 1, -1, (1 + p) * (1 - nu) / q) + Sn(1, p + 1, 1, -1, p) +
              Sn(2, p - 3, 1, -1, (p * p - 3 * p + 8 * nu - 8) / d) + Sn(3, p - 1, 1, 1, (nu - 1 + p * nu) / q));
    f.t_tt = K3 * (C(0, p - 1, p + 1) + C(1, p + 1, 2 * p) + C(2, p - 3, 2 * (p * p + p - 8 * nu + 8) / d) - F4(p + 1));
    f.W = energy_density(f, mat);
    return f;
}

namespace {

FieldValues eval_solution(const EigenSolution& sol, std::size_t idx, const PolarPoint& pt, TotalForm form) {
    return evaluate(field_series(sol, idx, form), pt.r, pt.theta);
}

}  // namespace

Displacement displacement(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt) {
    const DisplacementField u = sol.field(amp_index);
    return {u.u_r(pt.r, pt.theta), u.u_t(pt.r, pt.theta), u.w(pt.r, pt.theta)};
}

StrainTensor strain(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt) {
    const auto v = eval_solution(sol, amp_index, pt, TotalForm::Leading);
    return {v.eps_rr, v.eps_tt, v.eps_rt, v.eps_rz, v.eps_tz};
}

MonopolarStress monopolar_stress(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt) {
    const auto v = eval_solution(sol, amp_index, pt, TotalForm::Leading);
    return {v.tau_rr, v.tau_tt, v.tau_rt, v.tau_zz, v.tau_rz, v.tau_tz};
}

DipolarStress dipolar_stress(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt) {
    const auto v = eval_solution(sol, amp_index, pt, TotalForm::Leading);
    return {v.m_rrr, v.m_rrt, v.m_rtt, v.m_trr, v.m_ttr, v.m_ttt, v.m_rrz, v.m_rtz, v.m_trz, v.m_ttz};
}

ThetaTraction total_stress_theta(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt, TotalForm form) {
    const auto v = eval_solution(sol, amp_index, pt, form);
    return {v.t_tr, v.t_tt, v.t_tz};
}

RadialTraction total_stress_r(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt, TotalForm form) {
    const auto v = eval_solution(sol, amp_index, pt, form);
    return {v.t_rr, v.t_rt};
}

double strain_energy_density(const EigenSolution& sol, std::size_t amp_index, const PolarPoint& pt) {
    return eval_solution(sol, amp_index, pt, TotalForm::Leading).W;
}

AmplitudeFit match_amplitudes(const EigenSolution& sol, const FieldSeries& target, const std::vector<PolarPoint>& pts) {
    const bool plane = is_plane(sol.wcase.mode);
    const auto p1 = special_p1_field(sol.wcase.mode);
    std::vector<DisplacementField> cols = sol.fields;
    if (!sol.special_p1) cols.insert(cols.end(), p1.begin(), p1.end());
    const auto ncomp = plane ? 2 : 1;
    Eigen::MatrixXd A(static_cast<Eigen::Index>(pts.size()) * ncomp, static_cast<Eigen::Index>(cols.size()));
    Eigen::VectorXd b(A.rows());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto [r, t] = pts[i];
        const auto row = static_cast<Eigen::Index>(i) * ncomp;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            if (plane) {
                A(row, jj) = cols[j].u_r(r, t);
                A(row + 1, jj) = cols[j].u_t(r, t);
            } else {
                A(row, jj) = cols[j].w(r, t);
            }
        }
        if (plane) {
            b(row) = target.u_r(r, t);
            b(row + 1) = target.u_t(r, t);
        } else {
            b(row) = target.w(r, t);
        }
    }
    const Eigen::VectorXd x = A.completeOrthogonalDecomposition().solve(b);
    AmplitudeFit fit;
    const auto n_eig = sol.fields.size();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (sol.special_p1 || j < n_eig)
            fit.eigen_weights.push_back(x(static_cast<Eigen::Index>(j)));
        else
            fit.p1_coefs.push_back(x(static_cast<Eigen::Index>(j)));
    }
    fit.residual = b.size() ? (A * x - b).cwiseAbs().maxCoeff() : 0.0;
    return fit;
}

}  // namespace notch
