#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "notch/fields.hpp"
#include "notch/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace notch;
using std::numbers::pi;

namespace {

DisplacementField antiplane(PolarSeries w) {
    DisplacementField u;
    u.mode = Mode::AntiplaneOdd;
    u.w = std::move(w);
    return u;
}

}  // namespace

TEST_CASE("uniform dilatation") {
    const MaterialParams mat{1.7, 0.3, 0.4};
    const auto u = special_p1_field(Mode::PlaneSym)[0];  // u_r = r
    const auto v = evaluate(field_series(u, mat), 1.9, 0.6);
    CHECK(v.eps_rr == doctest::Approx(1.0));
    CHECK(v.eps_tt == doctest::Approx(1.0));
    CHECK(v.tau_rr == doctest::Approx(2 * mat.mu / (1 - 2 * mat.nu)));
    CHECK(v.tau_zz == doctest::Approx(2 * mat.lambda()));
    CHECK(v.m_rrr == 0.0);
    CHECK(v.m_ttt == 0.0);
    // W = (tau_rr eps_rr + tau_tt eps_tt) / 2
    CHECK(v.W == doctest::Approx(2 * mat.mu / (1 - 2 * mat.nu)));
}

TEST_CASE("anti-plane half-space member") {
    const MaterialParams mat{1.3, 0.3, 0.7};
    const auto fs = field_series(antiplane(PolarSeries::sin(1.0, 2.0, 2.0)), mat);
    for (double t : {-1.2, 0.0, 0.9}) {
        CHECK(fs.tau_tz(1.5, t) == doctest::Approx(2 * mat.mu * 1.5 * std::cos(2 * t)));
        CHECK(fs.m_rtz(1.5, t) == doctest::Approx(2 * mat.mu * mat.c * std::cos(2 * t)));
    }
}

TEST_CASE("strains match finite differences of the displacement") {
    const auto sol = eigenfield({2.5, Mode::PlaneAnti}, 0.22, smallest_exponents({2.5, Mode::PlaneAnti}, 0.22).p);
    const auto u = sol.field(0);
    const auto v = evaluate(field_series(u, sol.mat), 1.4, 0.3);
    const double h = 1e-6;
    CHECK(v.eps_rr == doctest::Approx((u.u_r(1.4 + h, 0.3) - u.u_r(1.4 - h, 0.3)) / (2 * h)).epsilon(1e-7));
    const double dut_dr = (u.u_t(1.4 + h, 0.3) - u.u_t(1.4 - h, 0.3)) / (2 * h);
    const double dur_dt = (u.u_r(1.4, 0.3 + h) - u.u_r(1.4, 0.3 - h)) / (2 * h);
    CHECK(v.eps_rt == doctest::Approx(0.5 * (dur_dt / 1.4 + dut_dr - u.u_t(1.4, 0.3) / 1.4)).epsilon(1e-7));
}

TEST_CASE("crack closed forms at fixed points") {
    const auto mat = material_with_nu(0.3);
    const auto I = crack_reference_series(CrackMode::I, {0, 0, 1, 0}, mat);
    CHECK(I.t_rr(1.0, 0.0) == doctest::Approx(3.0 / 125.6 * 168.8).epsilon(1e-12));
    const auto III = crack_reference_series(CrackMode::III, {0, 1}, mat);
    CHECK(III.t_tz(1.0, 0.0) == doctest::Approx(1.5));
    CHECK(III.w(2.0, pi) == doctest::Approx(-8.0 / 3.0 * std::pow(2.0, 1.5)));
    CHECK(crack_amplitude_count(CrackMode::I) == 4);
    CHECK(crack_amplitude_count(CrackMode::II) == 3);
    CHECK(crack_amplitude_count(CrackMode::III) == 2);
    CHECK_THROWS(crack_reference_series(CrackMode::II, {1, 2}, mat));
}

TEST_CASE("general fields reproduce the crack closed forms") {
    const auto mat = material_with_nu(0.31);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> amp(-1, 1), rad(0.2, 3.0), ang(-pi, pi);
    std::vector<PolarPoint> pts;
    for (int i = 0; i < 60; ++i) pts.push_back({rad(rng), ang(rng)});
    for (CrackMode cm : {CrackMode::I, CrackMode::II, CrackMode::III}) {
        CAPTURE(crack_mode_tag(cm));
        const Mode m = cm == CrackMode::I ? Mode::PlaneSym : cm == CrackMode::II ? Mode::PlaneAnti : Mode::AntiplaneOdd;
        std::vector<double> a;
        for (std::size_t i = 0; i < crack_amplitude_count(cm); ++i) a.push_back(amp(rng));
        const auto ref = crack_reference_series(cm, a, mat);
        auto sol = eigenfield({pi, m}, mat, 1.5);
        const auto fit = match_amplitudes(sol, ref, pts);
        CHECK(fit.residual < 1e-12);
        attach_p1_part(sol, fit.p1_coefs);
        CHECK(field_gap(field_series(sol.combine(fit.eigen_weights), mat), ref, pts) < 1e-10);
    }
}

TEST_CASE("point accessors agree with the series") {
    const auto sol = eigenfield({pi, Mode::PlaneSym}, 0.3, 1.5);
    const PolarPoint pt{0.8, 1.9};
    const auto v = evaluate(field_series(sol, 1), pt.r, pt.theta);
    CHECK(displacement(sol, 1, pt).u_t == doctest::Approx(v.u_t));
    CHECK(strain(sol, 1, pt).eps_tt == doctest::Approx(v.eps_tt));
    CHECK(monopolar_stress(sol, 1, pt).tau_rt == doctest::Approx(v.tau_rt));
    CHECK(dipolar_stress(sol, 1, pt).m_ttr == doctest::Approx(v.m_ttr));
    CHECK(total_stress_theta(sol, 1, pt).t_tt == doctest::Approx(v.t_tt));
    CHECK(total_stress_r(sol, 1, pt).t_rr == doctest::Approx(v.t_rr));
    CHECK(strain_energy_density(sol, 1, pt) == doctest::Approx(v.W));
    // the full form adds the monopolar stress
    CHECK(total_stress_theta(sol, 1, pt, TotalForm::Full).t_tt == doctest::Approx(v.t_tt + v.tau_tt));
    CHECK_THROWS_AS(displacement(sol, 5, pt), IndexOutOfRange);
}

TEST_CASE("column lists") {
    CHECK(component_names(Mode::PlaneSym).size() == 20);
    CHECK(component_names(Mode::AntiplaneOdd).size() == 11);
    CHECK(component_names(Mode::PlaneAnti).back() == "W");
}

TEST_CASE("energy density of the crack field has the expected radial power") {
    const auto sol = eigenfield({pi, Mode::AntiplaneOdd}, 0.3, 1.5);
    const auto w = energy_density(field_series(sol, 0), sol.mat);
    // the dipolar part dominates: r^(2p - 4) = r^-1
    CHECK(w.min_r_exp() == doctest::Approx(-1.0));
}
