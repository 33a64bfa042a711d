#pragma once

#include "notch/model.hpp"
#include "notch/polar_series.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace notch {

struct DisplacementField {
    Mode mode = Mode::PlaneSym;
    PolarSeries u_r, u_t;  // plane modes
    PolarSeries w;         // anti-plane

    bool is_zero() const { return u_r.empty() && u_t.empty() && w.empty(); }
    DisplacementField& operator+=(const DisplacementField& o);
    DisplacementField& operator*=(double s);
    friend DisplacementField operator+(DisplacementField a, const DisplacementField& b) { return a += b; }
    friend DisplacementField operator*(double s, DisplacementField a) { return a *= s; }
};

// Member labels: A1..A4 (PlaneSym), B1..B4 (PlaneAnti), D1, D2 (AntiplaneOdd).
std::vector<std::string> basis_labels(Mode m);

// Throws DegenerateBasis if a member vanishes identically.
std::vector<DisplacementField> basis_fields(Mode m, double p, double nu);

struct BasisSet {
    std::vector<DisplacementField> members;
    // Factor (p - 7 + 8 nu) multiplied into the third plane member near its pole, else 1.
    double third_scale = 1.0;
    bool pole_rescaled = false;
};
BasisSet basis_set(Mode m, double p, double nu);

// Displacement-form boundary operators: four for plane modes (shear and normal
// total traction, then the two dipolar conditions), two for anti-plane.
std::vector<PolarSeries> apply_bc_operators(const DisplacementField& f, double nu);

struct BCMatrix {
    Mode mode = Mode::PlaneSym;
    double p = 0.0, a = 0.0, nu = 0.0;
    Eigen::MatrixXd entries;
    // Frobenius norm of the entrywise bounds sum |coef| r^alpha at r = 1. Used as
    // the singular-value reference when the matrix itself is round-off.
    double scale = 0.0;
    double third_scale = 1.0;
    bool pole_rescaled = false;
};
BCMatrix bc_matrix(const WedgeCase& wc, double p, double nu);

Eigen::VectorXd singular_values(const BCMatrix& m);
// sigma_max, or the bound scale when sigma_max < 1e-10 scale.
double reference_sigma(const BCMatrix& m, double sigma_max);
double sigma_ratio(const BCMatrix& m);

// Right singular vectors with sigma < tol * sigma_max, sign-normalized.
std::vector<Eigen::VectorXd> null_space(const BCMatrix& m, double tol);
void normalize_amplitude(Eigen::VectorXd& v);

struct EigenSolution {
    WedgeCase wcase;
    MaterialParams mat;
    double p = 0.0;
    int nullity = 0;
    std::vector<std::vector<double>> amplitudes;
    std::vector<DisplacementField> members;
    std::vector<DisplacementField> fields;
    bool pole_rescaled = false;
    bool special_p1 = false;

    bool includes_p1_part = false;
    std::vector<double> p1_coefs;  // C1, C3 | C2 | E
    DisplacementField p1_field;

    // Assembled field for one null vector, plus the p = 1 part if attached.
    DisplacementField field(std::size_t amp_index) const;
    // Sum of weights[k] * fields[k], plus the p = 1 part if attached.
    DisplacementField combine(const std::vector<double>& weights) const;
    // Eigen part only.
    DisplacementField pure(std::size_t amp_index) const;
};

EigenSolution eigenfield(const WedgeCase& wc, const MaterialParams& mat, double p, double tol = 1e-7);
inline EigenSolution eigenfield(const WedgeCase& wc, double nu, double p) { return eigenfield(wc, material_with_nu(nu), p); }

// Unit constant-strain members: {C1, C3} | {C2} | {E}.
std::vector<DisplacementField> special_p1_field(Mode m);
std::vector<std::string> special_p1_labels(Mode m);
DisplacementField special_p1_field(Mode m, const std::vector<double>& coefs);
void attach_p1_part(EigenSolution& sol, const std::vector<double>& coefs);

}  // namespace notch
