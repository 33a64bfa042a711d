// Crack-tip closed forms, written out term by term so they stay independent of
// the constitutive pipeline in fields.cpp.
#include "notch/fields.hpp"

namespace notch {

namespace {

using S = PolarSeries;

S cs(double coef, double e, double fr) { return S::cos(coef, e, fr); }
S sn(double coef, double e, double fr) { return S::sin(coef, e, fr); }

void check_count(CrackMode m, const std::vector<double>& amps) {
    if (amps.size() != crack_amplitude_count(m))
        throw Error("crack mode " + crack_mode_tag(m) + " takes " + std::to_string(crack_amplitude_count(m)) +
                    " amplitudes, got " + std::to_string(amps.size()));
}

FieldSeries mode_one(const std::vector<double>& a, const MaterialParams& mat) {
    const double C1 = a[0], C3 = a[1], A1 = a[2], A2 = a[3];
    const double mu = mat.mu, c = mat.c, nu = mat.nu, N = 41 - 32 * nu;
    const double h = 0.5, e3 = 1.5;
    FieldSeries f;
    f.mode = Mode::PlaneSym;
    f.u_r = cs(C1, 1, 0) + cs(C3, 1, 2) + A1 * (cs(3 - 8 * nu, e3, h) + cs(3 * (11 - 16 * nu) / N, e3, 3 * h)) -
            A2 * (cs(3 * (11 - 16 * nu) / N, e3, 3 * h) - cs(1, e3, 5 * h));
    f.u_t = sn(-C3, 1, 2) + A1 * (sn(9 - 8 * nu, e3, h) - sn(3 * (13 - 16 * nu) / N, e3, 3 * h)) +
            A2 * (sn(3 * (13 - 16 * nu) / N, e3, 3 * h) - sn(1, e3, 5 * h));

    const double e = 0.5;
    f.eps_rr = cs(C1, 0, 0) + cs(C3, 0, 2) + 1.5 * A1 * (cs((33 - 48 * nu) / N, e, 3 * h) + cs(3 - 8 * nu, e, h)) -
               1.5 * A2 * (cs((33 - 48 * nu) / N, e, 3 * h) - cs(1, e, 5 * h));
    f.eps_tt = cs(C1, 0, 0) + cs(-C3, 0, 2) - 1.5 * A1 * (cs((17 - 16 * nu) / N, e, 3 * h) - cs(5 - 8 * nu, e, h)) +
               1.5 * A2 * (cs((17 - 16 * nu) / N, e, 3 * h) - cs(1, e, 5 * h));
    f.eps_rt = sn(-C3, 0, 2) - 1.5 * A1 * (sn((23 - 32 * nu) / N, e, 3 * h) - sn(1, e, h)) +
               1.5 * A2 * (sn((23 - 32 * nu) / N, e, 3 * h) - sn(1, e, 5 * h));
    f.tau_rr = cs(2 * mu * C1 / (1 - 2 * nu), 0, 0) + cs(2 * mu * C3, 0, 2) +
               3 * mu * A1 * (cs(3, e, h) + cs((33 - 32 * nu) / N, e, 3 * h)) -
               3 * mu * A2 * (cs((33 - 32 * nu) / N, e, 3 * h) - cs(1, e, 5 * h));
    f.tau_tt = cs(2 * mu * C1 / (1 - 2 * nu), 0, 0) + cs(-2 * mu * C3, 0, 2) +
               3 * mu * A1 * (cs(5, e, h) - cs((17 - 32 * nu) / N, e, 3 * h)) -
               3 * mu * A2 * (cs(-(17 - 32 * nu) / N, e, 3 * h) + cs(1, e, 5 * h));
    f.tau_rt = sn(-2 * mu * C3, 0, 2) + 3 * mu * A1 * (sn(1, e, h) - sn((23 - 32 * nu) / N, e, 3 * h)) -
               3 * mu * A2 * (sn(-(23 - 32 * nu) / N, e, 3 * h) + sn(1, e, 5 * h));
    f.tau_zz = nu * (f.tau_rr + f.tau_tt);

    const double em = -0.5, k = 1.5 * mu * c;
    f.m_ttr = k * A1 * (cs(-3, em, h) + cs((31 - 32 * nu) / N, em, 3 * h)) -
              k * A2 * (cs((31 - 32 * nu) / N, em, 3 * h) + cs(1, em, 5 * h));
    f.m_ttt = -k * A1 * (sn(1, em, h) + sn(1, em, 3 * h)) + k * A2 * (sn(1, em, 3 * h) + sn(1, em, 5 * h));
    f.m_rrr = k * A1 * (cs(3, em, h) + cs((33 - 32 * nu) / N, em, 3 * h)) -
              k * A2 * (cs((33 - 32 * nu) / N, em, 3 * h) - cs(1, em, 5 * h));
    f.m_rrt = k * A1 * (sn(1, em, h) - sn((23 - 32 * nu) / N, em, 3 * h)) +
              k * A2 * (sn((23 - 32 * nu) / N, em, 3 * h) - sn(1, em, 5 * h));
    f.m_trr = -k * A1 * (sn(7, em, h) + sn((7 + 32 * nu) / N, em, 3 * h)) +
              k * A2 * (sn((7 + 32 * nu) / N, em, 3 * h) - sn(1, em, 5 * h));
    f.m_rtt = k * A1 * (cs(5, em, h) - cs((17 - 32 * nu) / N, em, 3 * h)) +
              k * A2 * (cs((17 - 32 * nu) / N, em, 3 * h) - cs(1, em, 5 * h));

    const double et = -1.5, kt = 0.75 * mu * c;
    f.t_tr = kt * A1 * (sn(1, et, h) + sn(1, et, 3 * h)) - kt * A2 * (sn(1, et, 3 * h) + sn(1, et, 5 * h));
    f.t_tt = kt * A1 * (cs((47 - 32 * nu) / N, et, 3 * h) + cs(5, et, h)) -
             kt * A2 * (cs((47 - 32 * nu) / N, et, 3 * h) + cs(1, et, 5 * h));
    f.t_rr = (kt / N) * A1 * (cs(147 - 32 * nu, et, 3 * h) + cs(N, et, h)) +
             (kt / N) * A2 * (cs(123 - 96 * nu, et, 5 * h) - cs(147 - 32 * nu, et, 3 * h));
    f.t_rt = (kt / N) * A1 * (sn(43 + 32 * nu, et, 3 * h) + sn(451 - 352 * nu, et, h)) -
             (kt / N) * A2 * (sn(123 - 96 * nu, et, 5 * h) + sn(43 + 32 * nu, et, 3 * h));
    return f;
}

FieldSeries mode_two(const std::vector<double>& a, const MaterialParams& mat) {
    const double C2 = a[0], B1 = a[1], B2 = a[2];
    const double mu = mat.mu, c = mat.c, nu = mat.nu, N = 37 - 32 * nu, q = 1 - 2 * nu;
    const double h = 0.5, e3 = 1.5;
    FieldSeries f;
    f.mode = Mode::PlaneAnti;
    f.u_r = sn(C2, 1, 2) + sn(B1, e3, h) + B2 * (sn(-3 * (11 - 16 * nu) / N, e3, 3 * h) + sn(1, e3, 5 * h));
    f.u_t = cs(C2, 1, 2) + cs(-B1, e3, h) +
            B2 * (cs(1, e3, 5 * h) - cs(3 * (13 - 16 * nu) / N, e3, 3 * h) + cs(12 / N, e3, h));

    const double e = 0.5;
    f.eps_rr = sn(C2, 0, 2) + sn(1.5 * B1, e, h) - 1.5 * B2 * (sn((33 - 48 * nu) / N, e, 3 * h) - sn(1, e, 5 * h));
    f.eps_tt = sn(-C2, 0, 2) -
               1.5 * B2 * (sn(4 / N, e, h) - sn((17 - 16 * nu) / N, e, 3 * h) + sn(1, e, 5 * h)) + sn(1.5 * B1, e, h);
    f.eps_rt = cs(C2, 0, 2) + 1.5 * B2 * (cs(2 / N, e, h) - cs((23 - 32 * nu) / N, e, 3 * h) + cs(1, e, 5 * h));
    f.tau_rr = sn(2 * mu * C2, 0, 2) -
               3 * mu * B2 * (sn(4 * nu / (q * N), e, h) + sn((33 - 32 * nu) / N, e, 3 * h) - sn(1, e, 5 * h)) +
               sn(3 * mu / q * B1, e, h);
    f.tau_tt = sn(-2 * mu * C2, 0, 2) -
               3 * mu * B2 * (sn(4 * (1 - nu) / (q * N), e, h) - sn((17 - 32 * nu) / N, e, 3 * h) + sn(1, e, 5 * h)) +
               sn(3 * mu / q * B1, e, h);
    f.tau_rt = cs(2 * mu * C2, 0, 2) +
               3 * mu * B2 * (cs(2 / N, e, h) - cs((23 - 32 * nu) / N, e, 3 * h) + cs(1, e, 5 * h));
    f.tau_zz = nu * (f.tau_rr + f.tau_tt);

    const double em = -0.5, k = 1.5 * mu * c;
    f.m_ttt = -k * B2 * (cs(-4 * (1 - 3 * nu) / (q * N), em, h) + cs((41 - 32 * nu) / N, em, 3 * h) + cs(1, em, 5 * h)) +
              cs(k / q * B1, em, h);
    f.m_ttr = -k * B2 * (sn(-6 / N, em, h) + sn((31 - 32 * nu) / N, em, 3 * h) + sn(1, em, 5 * h));
    f.m_rrr = -k * B2 * (sn(-1, em, 5 * h) + sn((33 - 32 * nu) / N, em, 3 * h) + sn(4 * nu / (N * q), em, h)) +
              sn(k / q * B1, em, h);
    f.m_trr = -k * B2 * (cs(4 * (2 - 3 * nu) / (q * N), em, h) + cs((7 + 32 * nu) / N, em, 3 * h) - cs(1, em, 5 * h)) +
              cs(k / q * B1, em, h);
    f.m_rrt = -k * B2 * (cs(-2 / N, em, h) + cs((23 - 32 * nu) / N, em, 3 * h) - cs(1, em, 5 * h));
    f.m_rtt = -k * B2 * (sn(4 * (1 - nu) / (N * q), em, h) - sn((17 - 32 * nu) / N, em, 3 * h) + sn(1, em, 5 * h)) +
              sn(k / q * B1, em, h);

    const double et = -1.5, kt = 0.75 * mu * c;
    f.t_tr = kt * B2 * (cs(4 * (2 - 5 * nu) / (q * N), et, h) + cs((41 - 32 * nu) / N, et, 3 * h) + cs(1, et, 5 * h)) +
             cs(kt / q * B1, et, h);
    f.t_tt = -kt * B2 * (sn(10 / N, et, h) + sn((47 - 32 * nu) / N, et, 3 * h) + sn(1, et, 5 * h));
    f.t_rr = (kt / N) * B2 * (sn((10 - 28 * nu) / q, et, h) + sn(3 * N, et, 5 * h) - sn(147 - 32 * nu, et, 3 * h)) +
             sn(2 * kt / q * B1, et, h);
    f.t_rt = (kt / N) * B2 * (cs((16 - 28 * nu) / q, et, h) + cs(3 * N, et, 5 * h) + cs(43 + 32 * nu, et, 3 * h)) -
             cs(kt / q * B1, et, h);
    return f;
}

FieldSeries mode_three(const std::vector<double>& a, const MaterialParams& mat) {
    const double E = a[0], D = a[1];
    const double mu = mat.mu, c = mat.c;
    FieldSeries f;
    f.mode = Mode::AntiplaneOdd;
    f.w = sn(E, 1, 1) + (D / 3) * (sn(5, 1.5, 1.5) - sn(3, 1.5, 0.5));
    f.tau_tz = cs(mu * E, 0, 1) + (mu * D / 2) * (cs(5, 0.5, 1.5) - cs(1, 0.5, 0.5));
    f.tau_rz = sn(mu * E, 0, 1) + (mu * D / 2) * (sn(5, 0.5, 1.5) - sn(3, 0.5, 0.5));
    f.eps_rz = (0.5 / mu) * f.tau_rz;
    f.eps_tz = (0.5 / mu) * f.tau_tz;
    f.m_rtz = (mu * c * D / 4) * (cs(5, -0.5, 1.5) - cs(1, -0.5, 0.5));
    f.m_trz = f.m_rtz;
    f.m_ttz = (-5 * mu * c * D / 4) * (sn(1, -0.5, 1.5) + sn(1, -0.5, 0.5));
    f.m_rrz = (mu * c * D / 4) * (sn(5, -0.5, 1.5) - sn(3, -0.5, 0.5));
    f.t_tz = (mu * c * D / 8) * (cs(5, -1.5, 1.5) + cs(7, -1.5, 0.5));
    return f;
}

}  // namespace

std::string crack_mode_tag(CrackMode m) {
    switch (m) {
        case CrackMode::I: return "I";
        case CrackMode::II: return "II";
        case CrackMode::III: return "III";
    }
    return "?";
}

std::size_t crack_amplitude_count(CrackMode m) {
    switch (m) {
        case CrackMode::I: return 4;
        case CrackMode::II: return 3;
        case CrackMode::III: return 2;
    }
    return 0;
}

FieldSeries crack_reference_series(CrackMode m, const std::vector<double>& amps, const MaterialParams& mat) {
    check_count(m, amps);
    FieldSeries f;
    switch (m) {
        case CrackMode::I: f = mode_one(amps, mat); break;
        case CrackMode::II: f = mode_two(amps, mat); break;
        case CrackMode::III: f = mode_three(amps, mat); break;
    }
    f.W = energy_density(f, mat);
    return f;
}

FieldValues crack_reference_fields(CrackMode m, const std::vector<double>& amps, const MaterialParams& mat,
                                   const PolarPoint& pt) {
    return evaluate(crack_reference_series(m, amps, mat), pt.r, pt.theta);
}

}  // namespace notch
