#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "notch/charfn.hpp"
#include "notch/eigensolver.hpp"

#include <cmath>
#include <numbers>

using namespace notch;
using std::numbers::pi;

TEST_CASE("crack limit") {
    for (Mode m : {Mode::PlaneSym, Mode::PlaneAnti, Mode::AntiplaneOdd})
        for (double nu : {0.0, 0.25, 0.49}) CHECK(std::abs(smallest_exponents({pi, m}, nu).p - 1.5) < 1e-9);
}

TEST_CASE("half-space limit") {
    for (Mode m : {Mode::PlaneSym, Mode::PlaneAnti}) {
        const auto v = find_roots({pi / 2, m}, 0.3).values();
        REQUIRE(v.size() >= 2);
        CHECK(std::abs(v[0] - 2.0) < 1e-9);
        CHECK(std::abs(v[1] - 3.0) < 1e-9);
    }
    CHECK(std::abs(smallest_exponents({pi / 2, Mode::AntiplaneOdd}, 0.3).p - 2.0) < 1e-9);
}

TEST_CASE("anti-plane roots have a closed form for the crack") {
    // sin(2 (p-1) pi) = 0 at a = pi: p = 1.5, 2, 2.5, ...
    const auto v = find_roots({pi, Mode::AntiplaneOdd}, 0.3).values();
    REQUIRE(v.size() >= 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(v[i] == doctest::Approx(1.5 + 0.5 * i).epsilon(1e-12));
}

TEST_CASE("roots are zeros of the bracket") {
    const WedgeCase wc{2.7, Mode::PlaneAnti};
    const auto scan = find_roots(wc, 0.2);
    REQUIRE_FALSE(scan.roots.empty());
    for (const auto& r : scan.roots) CHECK(std::abs(char_bracket(r.p, wc, 0.2)) < 1e-9 * char_bracket_scale(r.p, wc, 0.2));
}

TEST_CASE("admissible list starts with the constant-strain solution") {
    const auto evs = admissible_eigenvalues({pi, Mode::PlaneSym}, 0.3);
    REQUIRE(evs.size() >= 2);
    CHECK(evs[0].p == 1.0);
    CHECK(evs[0].origin == RootOrigin::SpecialP1);
    CHECK(evs[1].origin == RootOrigin::BracketRoot);
    for (const auto& e : evs) CHECK(e.admissible);
}

TEST_CASE("roots below one are inadmissible") {
    RootScanOptions o;
    o.p_min = 0.1;
    bool saw_low = false;
    for (const auto& e : admissible_eigenvalues({pi, Mode::AntiplaneOdd}, 0.3, o)) {
        if (e.p < 1.0) {
            saw_low = true;
            CHECK_FALSE(e.admissible);
        }
    }
    CHECK(saw_low);
}

TEST_CASE("exponents") {
    const auto e = exponents_for(1.5);
    CHECK(e.exp_monopolar == 0.5);
    CHECK(e.exp_dipolar == -0.5);
    CHECK(e.exp_total == -1.5);
}

TEST_CASE("bad scan options") {
    RootScanOptions o;
    o.p_max = 0.5;
    CHECK_THROWS_AS(validate_options(o), OutOfRange);
    o = {};
    o.grid_step = 0.0;
    CHECK_THROWS_AS(find_roots({pi, Mode::PlaneSym}, 0.3, o), OutOfRange);
}

TEST_CASE("no root in an empty window") {
    RootScanOptions o;
    o.p_min = 1.01;
    o.p_max = 1.4;
    CHECK_THROWS_AS(smallest_exponents({pi, Mode::PlaneSym}, 0.3, o), NoRootFound);
}
