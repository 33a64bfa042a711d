#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "notch/basis.hpp"
#include "notch/charfn.hpp"

#include <cmath>
#include <numbers>

using namespace notch;
using std::numbers::pi;

TEST_CASE("crack exponent is a zero of every bracket") {
    for (double nu : {0.0, 0.25, 0.49}) {
        CHECK(std::abs(char_plane_sym(1.5, pi, nu)) < 1e-12);
        CHECK(std::abs(char_plane_anti(1.5, pi, nu)) < 1e-12);
    }
    CHECK(std::abs(char_antiplane(1.5, pi)) < 1e-12);
}

TEST_CASE("half-space zeros") {
    for (double p : {2.0, 3.0}) {
        CHECK(std::abs(char_plane_sym(p, pi / 2, 0.3)) < 1e-12);
        CHECK(std::abs(char_plane_anti(p, pi / 2, 0.3)) < 1e-12);
    }
    CHECK(std::abs(char_antiplane(2.0, pi / 2)) < 1e-12);
}

TEST_CASE("derivative agrees with central differences") {
    const double h = 1e-6;
    for (Mode m : {Mode::PlaneSym, Mode::PlaneAnti, Mode::AntiplaneOdd}) {
        for (double p : {1.2, 1.77, 2.9}) {
            const WedgeCase wc{2.3, m};
            const double fd = (char_bracket(p + h, wc, 0.31) - char_bracket(p - h, wc, 0.31)) / (2 * h);
            CHECK(char_bracket_dp(p, wc, 0.31) == doctest::Approx(fd).epsilon(1e-7));
        }
    }
}

TEST_CASE("scale bounds the bracket") {
    for (double p = 1.0; p <= 4.0; p += 0.05) {
        const WedgeCase wc{2.0, Mode::PlaneSym};
        CHECK(std::abs(char_bracket(p, wc, 0.2)) <= char_bracket_scale(p, wc, 0.2) + 1e-12);
    }
}

TEST_CASE("full characteristic function carries the polynomial prefactor") {
    CHECK(char_prefactor(2.0, Mode::PlaneSym) == 0.0);
    CHECK(char_prefactor(3.0, Mode::PlaneAnti) == doctest::Approx(16.0));
    CHECK(char_prefactor(3.0, Mode::AntiplaneOdd) == doctest::Approx(4.0));
    CHECK(char_eval(CharKind::PlaneSymFull, 1.7, 2.5, 0.3) ==
          doctest::Approx(char_prefactor(1.7, Mode::PlaneSym) * char_plane_sym(1.7, 2.5, 0.3)));
}

TEST_CASE("bracket zero coincides with a singular boundary matrix") {
    // a zero found by bisection on the bracket, checked against the SVD of the BC matrix
    const WedgeCase wc{2.4, Mode::PlaneSym};
    double lo = 1.0 + 1e-3, hi = lo;
    while (char_bracket(lo, wc, 0.3) * char_bracket(hi + 1e-2, wc, 0.3) > 0 && hi < 4.0) lo = hi += 1e-2;
    hi += 1e-2;
    REQUIRE(hi < 4.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (char_bracket(lo, wc, 0.3) * char_bracket(mid, wc, 0.3) <= 0 ? hi : lo) = mid;
    }
    CHECK(sigma_ratio(bc_matrix(wc, lo, 0.3)) < 1e-8);
    CHECK(sigma_ratio(bc_matrix(wc, lo + 0.1, 0.3)) > 1e-4);
}
