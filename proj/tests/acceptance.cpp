// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "notch/basis.hpp"
#include "notch/charfn.hpp"
#include "notch/eigensolver.hpp"
#include "notch/equilibrium.hpp"
#include "notch/fields.hpp"
#include "notch/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace notch;
using std::numbers::pi;

namespace {

const Mode kModes[] = {Mode::PlaneSym, Mode::PlaneAnti, Mode::AntiplaneOdd};

std::mt19937_64 rng(20240611);

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::vector<PolarPoint> random_points(int n, double a) {
    std::vector<PolarPoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back({uniform(0.2, 3.0), uniform(-a, a)});
    return pts;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Outcome crack_limit() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (Mode m : kModes)
        for (double nu : {0.0, 0.25, 0.49}) worst = std::max(worst, std::abs(smallest_exponents({pi, m}, nu).p - 1.5));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst <= 1e-9 && secs < 1.0, fmt("max |p - 1.5| = %.2e", worst) + fmt(", %.3f s", secs)};
}

Outcome halfspace_limit() {
    double worst = 0.0;
    for (Mode m : kModes) {
        const auto v = find_roots({pi / 2, m}, 0.3).values();
        if (v.empty() || (is_plane(m) && v.size() < 2)) return {false, "missing roots for " + mode_tag(m)};
        worst = std::max(worst, std::abs(v[0] - 2.0));
        if (is_plane(m)) worst = std::max(worst, std::abs(v[1] - 3.0));
    }
    return {worst <= 1e-9, fmt("max deviation from 2 and 3: %.2e", worst)};
}

Outcome sweep_curves() {
    bool ok = true;
    double end_err = 0.0, mono_lo = INFINITY, mono_hi = -INFINITY;
    for (Mode m : kModes) {
        double prev = INFINITY;
        for (int deg = 90; deg <= 180; ++deg) {
            const auto e = smallest_exponents({deg2rad(deg), m}, 0.3);
            ok = ok && e.p < prev;
            prev = e.p;
            if (deg == 90) end_err = std::max(end_err, std::abs(e.exp_total + 1.0));
            if (deg == 180) end_err = std::max(end_err, std::abs(e.exp_total + 1.5));
            mono_lo = std::min(mono_lo, e.exp_monopolar);
            mono_hi = std::max(mono_hi, e.exp_monopolar);
        }
    }
    ok = ok && end_err <= 1e-6 && mono_lo >= 0.5 - 1e-12 && mono_hi <= 1.0 + 1e-12;
    return {ok, fmt("endpoint error %.2e", end_err) + fmt(", exp_monopolar in [%.6f, ", mono_lo) + fmt("%.6f]", mono_hi)};
}

Outcome null_space_structure() {
    const int ns = eigenfield({pi, Mode::PlaneSym}, 0.3, 1.5).nullity;
    const int na = eigenfield({pi, Mode::PlaneAnti}, 0.3, 1.5).nullity;
    const auto ap = eigenfield({pi, Mode::AntiplaneOdd}, 0.3, 1.5);
    const double ratio = ap.nullity == 1 ? ap.amplitudes[0][0] / ap.amplitudes[0][1] : NAN;
    const bool ok = ns == 2 && na == 2 && ap.nullity == 1 && std::abs(ratio - 5.0 / 3.0) <= 1e-9;
    return {ok, "nullities " + std::to_string(ns) + "/" + std::to_string(na) + "/" + std::to_string(ap.nullity) +
                    fmt(", D1:D2 = %.12f", ratio)};
}

Outcome bc_residuals() {
    double worst = 0.0;
    for (Mode m : kModes) {
        for (int i = 0; i < 10; ++i) {
            const WedgeCase wc{uniform(pi / 2, pi), m};
            const double nu = uniform(0.0, 0.49);
            const auto sol = eigenfield(wc, material_with_nu(nu), smallest_exponents(wc, nu).p);
            worst = std::max(worst, bc_residual(sol).max());
        }
    }
    return {worst < 1e-8, fmt("max relative residual %.2e over 30 cases", worst)};
}

Outcome pde_residuals() {
    double lead = 0.0, fd1 = 0.0, fdr = 0.0;
    for (Mode m : kModes) {
        for (int i = 0; i < 5; ++i) {
            const double a = uniform(pi / 2, pi), nu = uniform(0.0, 0.49);
            const double p = smallest_exponents({a, m}, nu).p;
            const auto mat = material_with_nu(nu);
            const auto pts = random_points(10, a);
            for (const auto& f : basis_fields(m, p, nu)) {
                lead = std::max(lead, pde_residual(f, mat).leading_relative());
                const auto fd = fd_spot_check(f, mat, pts);
                fd1 = std::max(fd1, fd.first_order);
                fdr = std::max(fdr, fd.residual);
            }
        }
    }
    return {lead < 1e-12 && fd1 < 1e-6 && fdr < 1e-6,
            fmt("series %.2e", lead) + fmt(", FD first order %.2e", fd1) + fmt(", FD residual %.2e", fdr)};
}

Outcome det_zero_set() {
    double worst_root = 0.0, worst_non = INFINITY;
    int non_roots = 0;
    for (Mode m : kModes) {
        const WedgeCase wc{uniform(pi / 2, pi), m};
        const double nu = uniform(0.0, 0.49);
        std::vector<double> samples;
        for (int i = 0; i < 50; ++i) samples.push_back(uniform(1.0, 4.0));
        const auto rep = det_vs_charfn(wc, nu, samples);
        for (const auto& s : rep.samples) {
            if (s.is_root) worst_root = std::max(worst_root, s.sigma_ratio);
            else if (s.judged) {
                worst_non = std::min(worst_non, s.sigma_ratio);
                ++non_roots;
            }
        }
        if (!rep.pass) return {false, "zero-set mismatch for " + mode_tag(m)};
    }
    return {worst_root < 1e-6 && worst_non > 1e-4 && non_roots >= 50,
            fmt("roots <= %.2e", worst_root) + fmt(", non-roots >= %.2e", worst_non) + " (" +
                std::to_string(non_roots) + " samples)"};
}

Outcome crack_oracle() {
    double worst = 0.0;
    for (CrackMode cm : {CrackMode::I, CrackMode::II, CrackMode::III}) {
        const Mode m = cm == CrackMode::I ? Mode::PlaneSym : cm == CrackMode::II ? Mode::PlaneAnti : Mode::AntiplaneOdd;
        const auto mat = material_with_nu(uniform(0.0, 0.49));
        std::vector<double> amps;
        for (std::size_t i = 0; i < crack_amplitude_count(cm); ++i) amps.push_back(uniform(-1, 1));
        const auto ref = crack_reference_series(cm, amps, mat);
        auto sol = eigenfield({pi, m}, mat, 1.5);
        const auto pts = random_points(100, pi);
        const auto fit = match_amplitudes(sol, ref, pts);
        attach_p1_part(sol, fit.p1_coefs);
        worst = std::max(worst, field_gap(field_series(sol.combine(fit.eigen_weights), mat), ref, pts));
    }
    return {worst < 1e-10, fmt("max relative gap %.2e at 100 points per mode", worst)};
}

Outcome constitutive() {
    double worst = 0.0;
    for (Mode m : kModes) {
        for (int i = 0; i < 5; ++i) {
            const WedgeCase wc{uniform(pi / 2, pi), m};
            const double nu = uniform(0.0, 0.49);
            const auto mat = material_with_nu(nu);
            for (const auto& ev : admissible_eigenvalues(wc, nu)) {
                if (ev.p > 3.0) break;
                const auto sol = eigenfield(wc, mat, ev.p);
                for (std::size_t k = 0; k < sol.fields.size(); ++k) {
                    worst = std::max(worst, gradient_consistency(field_series(sol, k), mat));
                    if (!sol.special_p1) {
                        const auto direct = direct_field_series(m, ev.p, mat, sol.amplitudes[k], {});
                        worst = std::max(worst, gradient_consistency(direct, mat));
                    }
                }
            }
        }
    }
    return {worst < 1e-12, fmt("max relative term gap %.2e (pipeline and closed-form routes)", worst)};
}

Outcome equilibrium() {
    const auto mat = material_with_nu(0.3);
    double worst = 0.0;
    for (const WedgeCase wc : {WedgeCase{pi, Mode::PlaneSym}, WedgeCase{pi, Mode::PlaneAnti}, WedgeCase{2.0, Mode::PlaneSym}}) {
        const auto sol = eigenfield(wc, mat, smallest_exponents(wc, mat.nu).p);
        std::vector<double> w;
        for (int i = 0; i < sol.nullity; ++i) w.push_back(uniform(-1, 1));
        const auto f = field_series(sol.combine(w), mat);
        for (double r0 : {0.1, 1.0}) {
            const auto rep = check_equilibrium(f, r0, wc.half_angle_a);
            worst = std::max(worst, std::max({std::abs(rep.sum_fx), std::abs(rep.sum_fy), std::abs(rep.sum_m)}) / rep.scale);
        }
    }
    const double er = edge_forces(crack_reference_series(CrackMode::I, {0, 0, 1, 0}, mat), 1.0, pi).Er_A;
    const double expected = -237.6 / 31.4;
    const double rel = std::abs(er / expected - 1.0);
    return {worst < 1e-8 && rel < 1e-5, fmt("max residual / scale %.2e", worst) + fmt(", E_r^A = %.6f", er)};
}

Outcome energy() {
    double worst = 0.0;
    for (double a : {pi, pi / 2}) {
        for (Mode m : kModes) {
            const WedgeCase wc{a, m};
            const auto sol = eigenfield(wc, material_with_nu(0.3), a == pi ? 1.5 : 2.0);
            for (std::size_t k = 0; k < sol.fields.size(); ++k) {
                const auto e = energy_scaling(sol, k, 1e-4);
                worst = std::max(worst, std::abs(e.exponent - e.expected));
            }
        }
    }
    bool raised = false;
    DisplacementField bad;
    bad.mode = Mode::AntiplaneOdd;
    bad.w = PolarSeries::sin(1.0, 0.5, 0.5);
    try {
        energy_scaling(bad, material_with_nu(0.3), pi, 0.5, 1.0);
    } catch (const DivergentEnergy&) {
        raised = true;
    }
    return {worst < 1e-6 && raised,
            fmt("max |exponent - (2p - 2)| = %.2e", worst) + (raised ? ", p = 0.5 diverges" : ", p = 0.5 not rejected")};
}

Outcome zero_total_stress() {
    double worst = 0.0;
    for (Mode m : kModes) {
        const auto sol = eigenfield({pi / 2, m}, material_with_nu(0.3), 2.0);
        for (std::size_t k = 0; k < sol.fields.size(); ++k) {
            const auto f = field_series(sol, k);
            worst = std::max({worst, f.t_tr.max_abs_coef(), f.t_tt.max_abs_coef(), f.t_tz.max_abs_coef()});
        }
    }
    return {worst < 1e-14, fmt("max |coef| %.2e", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"crack limit p = 1.5", crack_limit},
        {"half-space limit p = 2, 3", halfspace_limit},
        {"exponent-angle curves", sweep_curves},
        {"crack null-space structure", null_space_structure},
        {"face boundary residuals", bc_residuals},
        {"field-equation residuals", pde_residuals},
        {"determinant and bracket zero sets", det_zero_set},
        {"crack closed-form equivalence", crack_oracle},
        {"dipolar constitutive consistency", constitutive},
        {"sector equilibrium and corner force", equilibrium},
        {"energy criterion", energy},
        {"zero total stress at p = 2", zero_total_stress},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %2zu %-38s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
