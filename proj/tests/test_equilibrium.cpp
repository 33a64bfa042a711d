#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "notch/eigensolver.hpp"
#include "notch/equilibrium.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace notch;
using std::numbers::pi;

TEST_CASE("Gauss-Legendre rule") {
    const auto q = gauss_legendre([](double t) { return std::cos(t); }, 0.0, pi / 2);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(q.converged);
    CHECK(q.nodes == 128);
    // polynomial of degree 127 is exact with 64 nodes
    const auto p = gauss_legendre([](double t) { return std::pow(t, 20); }, -1.0, 1.0);
    CHECK(p.value == doctest::Approx(2.0 / 21.0).epsilon(1e-14));
    // a kink defeats convergence within the node budget
    const auto k = gauss_legendre([](double t) { return std::abs(t - 0.3); }, -1.0, 1.0, 1e-15, 512);
    CHECK_FALSE(k.converged);
    CHECK(k.nodes <= 512);
}

TEST_CASE("mode I corner force") {
    const auto f = crack_reference_series(CrackMode::I, {0, 0, 1, 0}, material_with_nu(0.3));
    const auto e = edge_forces(f, 1.0, pi);
    CHECK(e.Er_A == doctest::Approx(-237.6 / 31.4).epsilon(1e-5));
    // symmetric loading: equal radial forces, opposite tangential ones
    CHECK(e.Er_B == doctest::Approx(e.Er_A));
    CHECK(std::abs(e.Et_A + e.Et_B) < 1e-12);
}

TEST_CASE("corner forces scale like r^(p - 2)") {
    const auto f = crack_reference_series(CrackMode::II, {0, 0.3, -1.1}, material_with_nu(0.2));
    const auto e1 = edge_forces(f, 1.0, pi), e4 = edge_forces(f, 4.0, pi);
    CHECK(e4.Et_A == doctest::Approx(e1.Et_A * std::pow(4.0, -0.5)));
}

TEST_CASE("arc resultants from antiderivatives and quadrature agree") {
    const auto sol = eigenfield({2.0, Mode::PlaneSym}, 0.3, smallest_exponents({2.0, Mode::PlaneSym}, 0.3).p);
    const auto r = resultant_on_arc(sol, 0, 0.5);
    CHECK(r.H == doctest::Approx(r.H_quad).epsilon(1e-10));
    CHECK(r.V == doctest::Approx(0.0).scale(std::abs(r.H)));
    CHECK(r.quad_nodes >= 128);
}

TEST_CASE("sector equilibrium") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    const auto mat = material_with_nu(0.3);
    for (auto wc : {WedgeCase{pi, Mode::PlaneSym}, WedgeCase{pi, Mode::PlaneAnti}, WedgeCase{2.0, Mode::PlaneSym},
                    WedgeCase{2.6, Mode::PlaneAnti}}) {
        const auto sol = eigenfield(wc, mat, smallest_exponents(wc, mat.nu).p);
        std::vector<double> w;
        for (int i = 0; i < sol.nullity; ++i) w.push_back(u(rng));
        const auto f = field_series(sol.combine(w), mat);
        for (double r0 : {0.1, 1.0}) {
            const auto rep = check_equilibrium(f, r0, wc.half_angle_a);
            CHECK(rep.pass);
            CHECK(std::abs(rep.sum_m) < 1e-8 * rep.scale);
        }
    }
}

TEST_CASE("a non-solution is out of balance") {
    // crack field on a narrower sector: its faces carry traction
    const auto f = crack_reference_series(CrackMode::I, {0, 0, 1, 0.4}, material_with_nu(0.3));
    const auto rep = check_equilibrium(f, 1.0, 2.0);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("invalid requests") {
    const auto mat = material_with_nu(0.3);
    const auto f = crack_reference_series(CrackMode::I, {0, 0, 1, 0}, mat);
    CHECK_THROWS_AS(check_equilibrium(f, 0.0, pi), OutOfRange);
    const auto g = crack_reference_series(CrackMode::III, {0, 1}, mat);
    CHECK_THROWS_AS(check_equilibrium(g, 1.0, pi), Error);
}
