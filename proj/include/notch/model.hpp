#pragma once

#include "notch/errors.hpp"

#include <numbers>
#include <string>
#include <vector>

namespace notch {

enum class Mode { PlaneSym, PlaneAnti, AntiplaneOdd };

inline bool is_plane(Mode m) { return m != Mode::AntiplaneOdd; }
std::string mode_tag(Mode m);          // ps-sym | ps-anti | ap
Mode parse_mode_tag(const std::string& tag);

struct MaterialParams {
    double mu = 1.0;
    double nu = 0.3;
    double c = 1.0;

    double lambda() const { return 2.0 * mu * nu / (1.0 - 2.0 * nu); }
};

inline MaterialParams material_with_nu(double nu) { return MaterialParams{1.0, nu, 1.0}; }

struct WedgeCase {
    double half_angle_a = std::numbers::pi;
    Mode mode = Mode::PlaneSym;
};

struct PolarPoint {
    double r = 1.0;
    double theta = 0.0;
};

inline double deg2rad(double deg) { return deg * (std::numbers::pi / 180.0); }

std::vector<Violation> case_violations(const MaterialParams& m, const WedgeCase& c);
// Throws OutOfRange listing every violated invariant.
void validate_case(const MaterialParams& m, const WedgeCase& c);

}  // namespace notch
