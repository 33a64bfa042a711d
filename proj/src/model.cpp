#include "notch/model.hpp"

#include <cmath>

namespace notch {

namespace {

std::string describe(const std::vector<Violation>& v) {
    std::string s = "out of range:";
    for (const auto& x : v) s += " " + x.field + "=" + std::to_string(x.value) + " (allowed " + x.allowed + ")";
    return s;
}

}  // namespace

OutOfRange::OutOfRange(std::vector<Violation> v) : Error(describe(v)), violations_(std::move(v)) {}

std::string mode_tag(Mode m) {
    switch (m) {
        case Mode::PlaneSym: return "ps-sym";
        case Mode::PlaneAnti: return "ps-anti";
        case Mode::AntiplaneOdd: return "ap";
    }
    return "?";
}

Mode parse_mode_tag(const std::string& tag) {
    if (tag == "ps-sym") return Mode::PlaneSym;
    if (tag == "ps-anti") return Mode::PlaneAnti;
    if (tag == "ap") return Mode::AntiplaneOdd;
    throw Error("unknown mode '" + tag + "' (expected ps-sym, ps-anti or ap)");
}

std::vector<Violation> case_violations(const MaterialParams& m, const WedgeCase& c) {
    std::vector<Violation> v;
    if (!(m.mu > 0)) v.push_back({"mu", m.mu, "mu > 0"});
    if (!(m.c > 0)) v.push_back({"c", m.c, "c > 0"});
    if (!(m.nu > -1.0 && m.nu < 0.5)) v.push_back({"nu", m.nu, "-1 < nu < 0.5"});
    const double slack = 1e-12;
    const double a = c.half_angle_a;
    if (!(a >= std::numbers::pi / 2 - slack && a <= std::numbers::pi + slack))
        v.push_back({"a", a, "pi/2 <= a <= pi"});
    return v;
}

void validate_case(const MaterialParams& m, const WedgeCase& c) {
    auto v = case_violations(m, c);
    if (!v.empty()) throw OutOfRange(std::move(v));
}

}  // namespace notch
