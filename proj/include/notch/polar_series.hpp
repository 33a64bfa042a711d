#pragma once

#include <string>
#include <vector>

namespace notch {

enum class Trig { Cos, Sin };

// One term coef * r^r_exp * trig(freq * theta).
struct Term {
    double coef = 0.0;
    double r_exp = 0.0;
    double freq = 0.0;
    Trig kind = Trig::Cos;
};

// Finite sum of r-power times trig terms, kept in canonical form:
// nonnegative frequencies, no sin(0) terms, merged keys, sorted by
// (kind, r_exp, freq), coefficients below 1e-14 of the largest dropped.
class PolarSeries {
public:
    PolarSeries() = default;
    explicit PolarSeries(std::vector<Term> terms);

    static PolarSeries term(double coef, double r_exp, double freq, Trig kind);
    static PolarSeries cos(double coef, double r_exp, double freq) { return term(coef, r_exp, freq, Trig::Cos); }
    static PolarSeries sin(double coef, double r_exp, double freq) { return term(coef, r_exp, freq, Trig::Sin); }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    double operator()(double r, double theta) const { return eval(r, theta); }
    double eval(double r, double theta) const;

    double max_abs_coef() const;
    // Sum of |coef| r^alpha; an upper bound for |s(r, .)|.
    double magnitude(double r) const;

    PolarSeries d_r() const;
    PolarSeries d_theta() const;
    PolarSeries mul_rpow(double k) const;
    PolarSeries canonical() const { return PolarSeries(terms_); }

    PolarSeries& operator+=(const PolarSeries& o);
    PolarSeries& operator-=(const PolarSeries& o);
    PolarSeries& operator*=(double s);

    friend PolarSeries operator+(PolarSeries a, const PolarSeries& b) { return a += b; }
    friend PolarSeries operator-(PolarSeries a, const PolarSeries& b) { return a -= b; }
    friend PolarSeries operator-(PolarSeries a) { return a *= -1.0; }
    friend PolarSeries operator*(PolarSeries a, double s) { return a *= s; }
    friend PolarSeries operator*(double s, PolarSeries a) { return a *= s; }
    friend PolarSeries operator*(const PolarSeries& a, const PolarSeries& b);

    // Integral over theta in [t0, t1] at fixed r, using exact antiderivatives.
    double integrate_theta(double r, double t0, double t1) const;
    // Integral of s(r, theta) r dr dtheta over 0 < r < r0, -a < theta < a.
    // Throws DivergentEnergy when some term has r_exp <= -2.
    double integrate_sector(double r0, double a) const;

    // Single r-exponent shared by all terms, if any.
    bool homogeneous(double* degree = nullptr) const;
    double min_r_exp() const;

    std::string str() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

bool same_terms(const PolarSeries& a, const PolarSeries& b);

}  // namespace notch
