#pragma once

#include "notch/model.hpp"

namespace notch {

enum class CharKind { PlaneSymBracket, PlaneAntiBracket, AntiplaneBracket, PlaneSymFull, PlaneAntiFull, AntiplaneFull };

// Transcendental factors of the boundary-condition determinant.
double char_plane_sym(double p, double a, double nu);
double char_plane_anti(double p, double a, double nu);
double char_antiplane(double p, double a);

double char_bracket(double p, const WedgeCase& wc, double nu);
// d/dp of char_bracket, in closed form.
double char_bracket_dp(double p, const WedgeCase& wc, double nu);
// Magnitude scale of the bracket at p (sum of absolute summand bounds).
double char_bracket_scale(double p, const WedgeCase& wc, double nu);

// (p-1)^4 (p-2)^2 for plane modes, (p-1)^2 (p-2) for anti-plane.
double char_prefactor(double p, Mode m);
double char_full(double p, const WedgeCase& wc, double nu);

double char_eval(CharKind k, double p, double a, double nu);

}  // namespace notch
