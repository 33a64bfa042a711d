#include "notch/charfn.hpp"

#include <cmath>

namespace notch {

namespace {

// Common part of both plane brackets; sgn selects +cos4a-1 (sym) or -cos4a+1 (anti).
double plane_core(double p, double a, double sgn) {
    const double q = p - 1.0;
    return 2.0 * q * (std::cos(2 * q * a) + sgn * (std::cos(4 * a) - 1.0)) - (p - 2.0) * std::cos(2 * (p + 1) * a) -
           p * std::cos(2 * (p - 3) * a);
}

double plane_core_dp(double p, double a, double sgn) {
    const double q = p - 1.0;
    return 2.0 * (std::cos(2 * q * a) + sgn * (std::cos(4 * a) - 1.0)) - 4.0 * a * q * std::sin(2 * q * a) -
           std::cos(2 * (p + 1) * a) + 2.0 * a * (p - 2.0) * std::sin(2 * (p + 1) * a) - std::cos(2 * (p - 3) * a) +
           2.0 * a * p * std::sin(2 * (p - 3) * a);
}

double plane(double p, double a, double nu, double sgn) {
    const double q = p - 1.0;
    return q * plane_core(p, a, sgn) + sgn * 2.0 * (5.0 - 4.0 * nu) * (1.0 - std::cos(4 * q * a));
}

double plane_dp(double p, double a, double nu, double sgn) {
    const double q = p - 1.0;
    return plane_core(p, a, sgn) + q * plane_core_dp(p, a, sgn) +
           sgn * 8.0 * a * (5.0 - 4.0 * nu) * std::sin(4 * q * a);
}

}  // namespace

double char_plane_sym(double p, double a, double nu) { return plane(p, a, nu, 1.0); }

double char_plane_anti(double p, double a, double nu) { return plane(p, a, nu, -1.0); }

double char_antiplane(double p, double a) { return (p - 1.0) * std::sin(2 * a) + 3.0 * std::sin(2 * (p - 1.0) * a); }

double char_bracket(double p, const WedgeCase& wc, double nu) {
    switch (wc.mode) {
        case Mode::PlaneSym: return char_plane_sym(p, wc.half_angle_a, nu);
        case Mode::PlaneAnti: return char_plane_anti(p, wc.half_angle_a, nu);
        case Mode::AntiplaneOdd: return char_antiplane(p, wc.half_angle_a);
    }
    return NAN;
}

double char_bracket_dp(double p, const WedgeCase& wc, double nu) {
    const double a = wc.half_angle_a;
    switch (wc.mode) {
        case Mode::PlaneSym: return plane_dp(p, a, nu, 1.0);
        case Mode::PlaneAnti: return plane_dp(p, a, nu, -1.0);
        case Mode::AntiplaneOdd: return std::sin(2 * a) + 6.0 * a * std::cos(2 * (p - 1.0) * a);
    }
    return NAN;
}

double char_bracket_scale(double p, const WedgeCase& wc, double nu) {
    const double q = std::abs(p - 1.0);
    if (wc.mode == Mode::AntiplaneOdd) return q + 3.0;
    return q * (6.0 * q + std::abs(p - 2.0) + std::abs(p)) + 4.0 * (5.0 - 4.0 * nu);
}

double char_prefactor(double p, Mode m) {
    const double q = p - 1.0, s = p - 2.0;
    if (m == Mode::AntiplaneOdd) return q * q * s;
    return q * q * q * q * s * s;
}

double char_full(double p, const WedgeCase& wc, double nu) { return char_prefactor(p, wc.mode) * char_bracket(p, wc, nu); }

double char_eval(CharKind k, double p, double a, double nu) {
    switch (k) {
        case CharKind::PlaneSymBracket: return char_plane_sym(p, a, nu);
        case CharKind::PlaneAntiBracket: return char_plane_anti(p, a, nu);
        case CharKind::AntiplaneBracket: return char_antiplane(p, a);
        case CharKind::PlaneSymFull: return char_full(p, {a, Mode::PlaneSym}, nu);
        case CharKind::PlaneAntiFull: return char_full(p, {a, Mode::PlaneAnti}, nu);
        case CharKind::AntiplaneFull: return char_full(p, {a, Mode::AntiplaneOdd}, nu);
    }
    return NAN;
}

}  // namespace notch
