#include "notch/polar_series.hpp"
#include "notch/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace notch {

namespace {

constexpr double kFreqZero = 1e-13;
constexpr double kKeySnap = 1e-11;
constexpr double kPrune = 1e-14;

bool close_key(double a, double b) {
    return std::abs(a - b) <= kKeySnap * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Replace each value by the first member of its chain of near-equal values.
template <class Get>
void snap(std::vector<Term>& t, Get get) {
    std::vector<std::size_t> idx(t.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return get(t[a]) < get(t[b]); });
    double rep = 0.0, prev = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        double& v = get(t[idx[k]]);
        if (k == 0 || !close_key(v, prev)) rep = v;
        prev = v;
        v = rep;
    }
}

double trig(Trig k, double x) { return k == Trig::Cos ? std::cos(x) : std::sin(x); }

}  // namespace

PolarSeries::PolarSeries(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

PolarSeries PolarSeries::term(double coef, double r_exp, double freq, Trig kind) {
    return PolarSeries({Term{coef, r_exp, freq, kind}});
}

void PolarSeries::canonicalize() {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (Term x : terms_) {
        if (x.coef == 0.0 || !std::isfinite(x.coef)) {
            if (!std::isfinite(x.coef)) t.push_back(x);
            continue;
        }
        if (x.freq < 0) {
            x.freq = -x.freq;
            if (x.kind == Trig::Sin) x.coef = -x.coef;
        }
        if (x.freq < kFreqZero) {
            if (x.kind == Trig::Sin) continue;
            x.freq = 0.0;
        }
        t.push_back(x);
    }
    snap(t, [](Term& x) -> double& { return x.r_exp; });
    snap(t, [](Term& x) -> double& { return x.freq; });
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.r_exp != b.r_exp) return a.r_exp < b.r_exp;
        return a.freq < b.freq;
    });
    std::vector<Term> merged;
    for (const Term& x : t) {
        if (!merged.empty() && merged.back().kind == x.kind && merged.back().r_exp == x.r_exp &&
            merged.back().freq == x.freq)
            merged.back().coef += x.coef;
        else
            merged.push_back(x);
    }
    double big = 0.0;
    for (const Term& x : merged) big = std::max(big, std::abs(x.coef));
    terms_.clear();
    for (const Term& x : merged)
        if (!std::isfinite(x.coef) || (x.coef != 0.0 && std::abs(x.coef) > kPrune * big)) terms_.push_back(x);
}

double PolarSeries::eval(double r, double theta) const {
    double s = 0.0;
    for (const Term& x : terms_) s += x.coef * std::pow(r, x.r_exp) * trig(x.kind, x.freq * theta);
    return s;
}

double PolarSeries::max_abs_coef() const {
    double m = 0.0;
    for (const Term& x : terms_) m = std::max(m, std::abs(x.coef));
    return m;
}

double PolarSeries::magnitude(double r) const {
    double m = 0.0;
    for (const Term& x : terms_) m += std::abs(x.coef) * std::pow(r, x.r_exp);
    return m;
}

PolarSeries PolarSeries::d_r() const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const Term& x : terms_) t.push_back({x.coef * x.r_exp, x.r_exp - 1.0, x.freq, x.kind});
    return PolarSeries(std::move(t));
}

PolarSeries PolarSeries::d_theta() const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const Term& x : terms_) {
        if (x.kind == Trig::Cos)
            t.push_back({-x.coef * x.freq, x.r_exp, x.freq, Trig::Sin});
        else
            t.push_back({x.coef * x.freq, x.r_exp, x.freq, Trig::Cos});
    }
    return PolarSeries(std::move(t));
}

PolarSeries PolarSeries::mul_rpow(double k) const {
    std::vector<Term> t = terms_;
    for (Term& x : t) x.r_exp += k;
    return PolarSeries(std::move(t));
}

PolarSeries& PolarSeries::operator+=(const PolarSeries& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize();
    return *this;
}

PolarSeries& PolarSeries::operator-=(const PolarSeries& o) {
    for (Term x : o.terms_) {
        x.coef = -x.coef;
        terms_.push_back(x);
    }
    canonicalize();
    return *this;
}

PolarSeries& PolarSeries::operator*=(double s) {
    for (Term& x : terms_) x.coef *= s;
    canonicalize();
    return *this;
}

PolarSeries operator*(const PolarSeries& a, const PolarSeries& b) {
    std::vector<Term> t;
    t.reserve(2 * a.size() * b.size());
    for (const Term& x : a.terms()) {
        for (const Term& y : b.terms()) {
            const double c = 0.5 * x.coef * y.coef;
            const double e = x.r_exp + y.r_exp;
            const double dm = x.freq - y.freq, dp = x.freq + y.freq;
            if (x.kind == Trig::Cos && y.kind == Trig::Cos) {
                t.push_back({c, e, dm, Trig::Cos});
                t.push_back({c, e, dp, Trig::Cos});
            } else if (x.kind == Trig::Sin && y.kind == Trig::Sin) {
                t.push_back({c, e, dm, Trig::Cos});
                t.push_back({-c, e, dp, Trig::Cos});
            } else if (x.kind == Trig::Sin) {
                t.push_back({c, e, dp, Trig::Sin});
                t.push_back({c, e, dm, Trig::Sin});
            } else {
                t.push_back({c, e, dp, Trig::Sin});
                t.push_back({-c, e, dm, Trig::Sin});
            }
        }
    }
    return PolarSeries(std::move(t));
}

double PolarSeries::integrate_theta(double r, double t0, double t1) const {
    double s = 0.0;
    for (const Term& x : terms_) {
        double ang;
        if (x.freq == 0.0)
            ang = x.kind == Trig::Cos ? t1 - t0 : 0.0;
        else if (x.kind == Trig::Cos)
            ang = (std::sin(x.freq * t1) - std::sin(x.freq * t0)) / x.freq;
        else
            ang = (std::cos(x.freq * t0) - std::cos(x.freq * t1)) / x.freq;
        s += x.coef * std::pow(r, x.r_exp) * ang;
    }
    return s;
}

double PolarSeries::integrate_sector(double r0, double a) const {
    double s = 0.0;
    for (const Term& x : terms_) {
        if (x.r_exp <= -2.0 + 1e-12) throw DivergentEnergy(x.r_exp);
        double ang = 0.0;
        if (x.kind == Trig::Cos) ang = x.freq == 0.0 ? 2.0 * a : 2.0 * std::sin(x.freq * a) / x.freq;
        s += x.coef * ang * std::pow(r0, x.r_exp + 2.0) / (x.r_exp + 2.0);
    }
    return s;
}

bool PolarSeries::homogeneous(double* degree) const {
    if (terms_.empty()) return false;
    const double e = terms_.front().r_exp;
    for (const Term& x : terms_)
        if (x.r_exp != e) return false;
    if (degree) *degree = e;
    return true;
}

double PolarSeries::min_r_exp() const {
    double m = INFINITY;
    for (const Term& x : terms_) m = std::min(m, x.r_exp);
    return m;
}

std::string PolarSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (const Term& x : terms_) {
        if (!first) os << " + ";
        first = false;
        os << x.coef << "*r^" << x.r_exp << "*" << (x.kind == Trig::Cos ? "cos(" : "sin(") << x.freq << "t)";
    }
    return os.str();
}

bool same_terms(const PolarSeries& a, const PolarSeries& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Term& x = a.terms()[i];
        const Term& y = b.terms()[i];
        if (x.coef != y.coef || x.r_exp != y.r_exp || x.freq != y.freq || x.kind != y.kind) return false;
    }
    return true;
}

}  // namespace notch
