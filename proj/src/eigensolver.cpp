#include "notch/eigensolver.hpp"
#include "notch/charfn.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace notch {

namespace {

constexpr double kEvenTol = 1e-10;
constexpr double kWarnTol = 1e-6;
// The bracket vanishes like (p-1)^2 at p = 1; that zero belongs to the prefactor.
constexpr double kPrefactorGuard = 1e-5;

template <class F>
double refine(F f, double a, double b, double fa, double fb, double width) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    std::uintmax_t iters = 200;
    auto tol = [width](double x, double y) {
        return std::abs(y - x) <= std::max(width, 4 * std::numeric_limits<double>::epsilon() * std::max(std::abs(x), std::abs(y)));
    };
    auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
    const double m = 0.5 * (r.first + r.second);
    return std::abs(f(r.first)) < std::abs(f(m)) ? r.first : (std::abs(f(r.second)) < std::abs(f(m)) ? r.second : m);
}

}  // namespace

std::vector<double> RootScan::values() const {
    std::vector<double> v;
    v.reserve(roots.size());
    for (const auto& r : roots) v.push_back(r.p);
    return v;
}

void validate_options(const RootScanOptions& o) {
    std::vector<Violation> v;
    if (!(o.p_min < o.p_max)) v.push_back({"p_min", o.p_min, "p_min < p_max"});
    if (!(o.grid_step > 0)) v.push_back({"grid_step", o.grid_step, "> 0"});
    if (!(o.refine_tol > 0)) v.push_back({"refine_tol", o.refine_tol, "> 0"});
    if (!(o.cluster_merge >= 0)) v.push_back({"cluster_merge", o.cluster_merge, ">= 0"});
    if (!v.empty()) throw OutOfRange(std::move(v));
}

RootScan find_roots(const WedgeCase& wc, double nu, const RootScanOptions& opts) {
    validate_options(opts);
    auto f = [&](double p) { return char_bracket(p, wc, nu); };
    auto g = [&](double p) { return char_bracket_dp(p, wc, nu); };
    auto scale = [&](double p) { return std::max(1.0, char_bracket_scale(p, wc, nu)); };

    const double lo = opts.p_min, hi = opts.p_max + opts.grid_step;
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / opts.grid_step));
    const double h = (hi - lo) / static_cast<double>(n);
    const double crit_width = std::min(opts.refine_tol, 1e-14);

    std::vector<double> crit;
    double x0 = lo, g0 = g(x0);
    if (g0 == 0.0) crit.push_back(x0);
    for (std::size_t i = 1; i <= n; ++i) {
        const double x1 = i == n ? hi : lo + h * static_cast<double>(i);
        const double g1 = g(x1);
        if (g1 == 0.0)
            crit.push_back(x1);
        else if (g0 != 0.0 && (g0 < 0) != (g1 < 0))
            crit.push_back(refine(g, x0, x1, g0, g1, crit_width));
        x0 = x1;
        g0 = g1;
    }

    std::vector<double> bp;
    bp.push_back(lo);
    for (double c : crit)
        if (c > bp.back() && c < hi) bp.push_back(c);
    bp.push_back(hi);

    std::vector<double> fv(bp.size());
    for (std::size_t i = 0; i < bp.size(); ++i) fv[i] = f(bp[i]);

    RootScan out;
    std::vector<Root> cand;
    std::vector<bool> crossing(bp.size() - 1, false);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        if (fv[k] != 0.0 && fv[k + 1] != 0.0 && (fv[k] < 0) != (fv[k + 1] < 0)) {
            crossing[k] = true;
            const double p = refine(f, bp[k], bp[k + 1], fv[k], fv[k + 1], opts.refine_tol);
            cand.push_back({p, std::abs(f(p)), false});
        }
    }
    for (std::size_t k = 0; k < bp.size(); ++k) {
        const bool interior = k > 0 && k + 1 < bp.size();
        if (fv[k] == 0.0) {
            cand.push_back({bp[k], 0.0, interior});
            continue;
        }
        if (!interior) continue;
        const double rel = std::abs(fv[k]) / scale(bp[k]);
        if (crossing[k - 1] || crossing[k]) continue;
        if (rel <= kEvenTol) {
            cand.push_back({bp[k], std::abs(fv[k]), true});
        } else if (rel <= kWarnTol && bp[k] <= opts.p_max) {
            out.warnings.push_back({"NoSignChange", bp[k], fv[k],
                                    "local minimum of |f| without sign change (possible even-multiplicity or complex pair)"});
        }
    }

    std::sort(cand.begin(), cand.end(), [](const Root& a, const Root& b) { return a.p < b.p; });
    for (const Root& r : cand) {
        if (std::abs(r.p - 1.0) < kPrefactorGuard || r.p <= opts.p_min || r.p > opts.p_max + 1e-9) continue;
        if (!out.roots.empty() && r.p - out.roots.back().p <= opts.cluster_merge) {
            Root& last = out.roots.back();
            last.even_multiplicity = last.even_multiplicity && r.even_multiplicity;
            if (r.residual < last.residual) {
                last.p = r.p;
                last.residual = r.residual;
            }
            continue;
        }
        out.roots.push_back(r);
    }
    return out;
}

std::vector<AdmissibleEigenvalue> admissible_eigenvalues(const WedgeCase& wc, double nu, const RootScanOptions& opts) {
    std::vector<AdmissibleEigenvalue> out;
    out.push_back({1.0, RootOrigin::SpecialP1, false, true, "special constant-strain solution (bounded energy)"});
    for (const Root& r : find_roots(wc, nu, opts).roots) {
        if (r.p < 1.0)
            out.push_back({r.p, RootOrigin::BracketRoot, r.even_multiplicity, false, "unbounded energy"});
        else
            out.push_back({r.p, RootOrigin::BracketRoot, r.even_multiplicity, true, "bracket root with p > 1 (bounded energy)"});
    }
    return out;
}

ExponentSummary exponents_for(double p) { return {p, p - 1.0, p - 2.0, p - 3.0}; }

ExponentSummary smallest_exponents(const WedgeCase& wc, double nu, const RootScanOptions& opts) {
    auto scan = find_roots(wc, nu, opts);
    for (const Root& r : scan.roots)
        if (r.p > 1.0) return exponents_for(r.p);
    throw NoRootFound("no bracket root in (" + std::to_string(opts.p_min) + ", " + std::to_string(opts.p_max) + "]");
}

}  // namespace notch
