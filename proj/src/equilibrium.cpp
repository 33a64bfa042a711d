#include "notch/equilibrium.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace notch {

namespace {

constexpr int kBaseNodes = 64;
constexpr double kAgreeTol = 1e-8;

struct Rule {
    std::vector<double> x, w;
};

const Rule& legendre_rule(int n) {
    static std::mutex mtx;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Rule rule;
    for (double z : boost::math::legendre_p_zeros<double>(n)) {
        const double dp = boost::math::legendre_p_prime(n, z);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.x.push_back(z);
        rule.w.push_back(w);
        if (z != 0.0) {
            rule.x.push_back(-z);
            rule.w.push_back(w);
        }
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

std::pair<double, double> composite(const std::function<double(double)>& f, double t0, double t1, int panels) {
    const Rule& rule = legendre_rule(kBaseNodes);
    const double h = (t1 - t0) / panels;
    double sum = 0.0, abs_sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double mid = t0 + (k + 0.5) * h;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double v = f(mid + 0.5 * h * rule.x[i]) * rule.w[i];
            sum += v;
            abs_sum += std::abs(v);
        }
    }
    return {0.5 * h * sum, 0.5 * h * abs_sum};
}

double rel_gap(double a, double b, double floor) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor}); }

double agreed(double exact, const QuadratureResult& q) {
    const double floor = std::max(q.abs_value, 1e-300);
    if (rel_gap(exact, q.value, floor) > kAgreeTol) throw QuadratureDisagreement(exact, q.value);
    return q.value;
}

}  // namespace

QuadratureResult gauss_legendre(const std::function<double(double)>& f, double t0, double t1, double rel_tol,
                                int max_nodes) {
    int panels = std::max(1, static_cast<int>(std::ceil(std::abs(t1 - t0) / (std::numbers::pi / 2) - 1e-12)));
    auto [prev, prev_abs] = composite(f, t0, t1, panels);
    QuadratureResult out{prev, prev_abs, panels * kBaseNodes, false};
    while (2 * panels * kBaseNodes <= max_nodes) {
        panels *= 2;
        auto [cur, cur_abs] = composite(f, t0, t1, panels);
        out = {cur, cur_abs, panels * kBaseNodes, false};
        if (rel_gap(cur, prev, std::max(cur_abs, 1e-300)) <= rel_tol) {
            out.converged = true;
            break;
        }
        prev = cur;
    }
    return out;
}

CornerForces edge_forces(const FieldSeries& s, double r0, double a) {
    CornerForces e;
    e.Er_A = s.m_rrt(r0, a) + s.m_trr(r0, a);
    e.Et_A = s.m_rtt(r0, a) + s.m_ttr(r0, a);
    e.Er_B = -(s.m_trr(r0, -a) + s.m_rrt(r0, -a));
    e.Et_B = -(s.m_ttr(r0, -a) + s.m_rtt(r0, -a));
    return e;
}

CornerForces edge_forces(const EigenSolution& sol, std::size_t amp_index, double r0, double a) {
    return edge_forces(field_series(sol, amp_index), r0, a);
}

ArcResultants resultant_on_arc(const FieldSeries& s, double r0, double a) {
    const PolarSeries cth = PolarSeries::cos(1, 0, 1), sth = PolarSeries::sin(1, 0, 1);
    const PolarSeries h_int = s.t_rr * cth - s.t_rt * sth;
    const PolarSeries v_int = s.t_rr * sth + s.t_rt * cth;

    ArcResultants out;
    out.H = r0 * h_int.integrate_theta(r0, -a, a);
    out.V = r0 * v_int.integrate_theta(r0, -a, a);
    out.T = r0 * r0 * s.t_rt.integrate_theta(r0, -a, a) + r0 * s.m_rrt.integrate_theta(r0, -a, a);

    // Quadrature works on pointwise values only.
    auto qh = gauss_legendre([&](double t) { return s.t_rr(r0, t) * std::cos(t) - s.t_rt(r0, t) * std::sin(t); }, -a, a);
    auto qv = gauss_legendre([&](double t) { return s.t_rr(r0, t) * std::sin(t) + s.t_rt(r0, t) * std::cos(t); }, -a, a);
    auto qt = gauss_legendre([&](double t) { return r0 * s.t_rt(r0, t) + s.m_rrt(r0, t); }, -a, a);
    for (auto* q : {&qh, &qv, &qt}) {
        q->value *= r0;
        q->abs_value *= r0;
    }
    out.H_quad = agreed(out.H, qh);
    out.V_quad = agreed(out.V, qv);
    out.T_quad = agreed(out.T, qt);
    out.quad_nodes = std::max({qh.nodes, qv.nodes, qt.nodes});
    return out;
}

ArcResultants resultant_on_arc(const EigenSolution& sol, std::size_t amp_index, double r0) {
    return resultant_on_arc(field_series(sol, amp_index), r0, sol.wcase.half_angle_a);
}

EquilibriumReport check_equilibrium(const FieldSeries& s, double r0, double a) {
    if (!(r0 > 0)) throw OutOfRange({{"r0", r0, "> 0"}});
    if (!is_plane(s.mode)) throw Error("corner-force equilibrium is defined for plane modes only");
    EquilibriumReport rep;
    rep.r0 = r0;
    rep.a = a;
    rep.arc = resultant_on_arc(s, r0, a);
    rep.edge = edge_forces(s, r0, a);
    const auto& e = rep.edge;
    const double ca = std::cos(a), sa = std::sin(a);
    // corner B sits at -a: cos(-a) = ca, sin(-a) = -sa
    rep.sum_fx = rep.arc.H + (e.Er_A * ca - e.Et_A * sa) + (e.Er_B * ca + e.Et_B * sa);
    rep.sum_fy = rep.arc.V + (e.Er_A * sa + e.Et_A * ca) + (-e.Er_B * sa + e.Et_B * ca);
    rep.sum_m = rep.arc.T + r0 * (e.Et_A + e.Et_B);
    rep.scale = std::abs(rep.arc.H) + std::abs(rep.arc.V) + std::abs(rep.arc.T) / r0 + std::abs(e.Er_A) +
                std::abs(e.Et_A) + std::abs(e.Er_B) + std::abs(e.Et_B);
    const double lim = rep.tol * rep.scale;
    rep.pass = std::abs(rep.sum_fx) <= lim && std::abs(rep.sum_fy) <= lim && std::abs(rep.sum_m) <= lim;
    return rep;
}

EquilibriumReport check_equilibrium(const EigenSolution& sol, std::size_t amp_index, double r0) {
    return check_equilibrium(field_series(sol, amp_index), r0, sol.wcase.half_angle_a);
}

}  // namespace notch
