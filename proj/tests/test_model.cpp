#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "notch/model.hpp"

#include <numbers>

using namespace notch;

TEST_CASE("mode tags round-trip") {
    for (Mode m : {Mode::PlaneSym, Mode::PlaneAnti, Mode::AntiplaneOdd}) CHECK(parse_mode_tag(mode_tag(m)) == m);
    CHECK_THROWS_AS(parse_mode_tag("ps"), Error);
}

TEST_CASE("Lame constant") {
    const MaterialParams m{2.0, 0.25, 1.0};
    CHECK(m.lambda() == doctest::Approx(2.0));
}

TEST_CASE("admissible cases pass validation") {
    CHECK(case_violations({1.0, 0.3, 1.0}, {std::numbers::pi, Mode::PlaneSym}).empty());
    CHECK(case_violations({1.0, 0.0, 1.0}, {std::numbers::pi / 2, Mode::PlaneAnti}).empty());
        CHECK_NOTHROW(validate_case({1.0, 0.49, 1.0}, {2.0, Mode::AntiplaneOdd}));
}

TEST_CASE("every violation is reported") {
    const auto v = case_violations({-1.0, 0.5, 0.0}, {1.0, Mode::PlaneSym});
    CHECK(v.size() == 4);
    try {
        validate_case({1.0, 0.6, 1.0}, {deg2rad(200.0), Mode::PlaneSym});
        FAIL("expected OutOfRange");
    } catch (const OutOfRange& e) {
        CHECK(e.violations().size() == 2);
    }
}
