#include "notch/basis.hpp"

#include <algorithm>
#include <cmath>

namespace notch {

namespace {

constexpr double kPoleGuard = 1e-6;
constexpr double kFieldRankTol = 1e-10;

PolarSeries R(double k, const PolarSeries& s) { return s.mul_rpow(k); }

DisplacementField plane(Mode m, PolarSeries ur, PolarSeries ut) {
    DisplacementField f;
    f.mode = m;
    f.u_r = std::move(ur);
    f.u_t = std::move(ut);
    return f;
}

DisplacementField antiplane(PolarSeries w) {
    DisplacementField f;
    f.mode = Mode::AntiplaneOdd;
    f.w = std::move(w);
    return f;
}

std::vector<DisplacementField> raw_members(Mode m, double p, double nu, double third_scale, bool rescaled) {
    using S = PolarSeries;
    const double d = p - 7.0 + 8.0 * nu, num = p + 5.0 - 8.0 * nu;
    // third member is (ur, ut) = (t*cos, -k*sin) (sym) or (t*sin, k*cos) (anti), scaled by t
    const double t = rescaled ? third_scale : 1.0;
    const double k = rescaled ? num : num / d;
    std::vector<DisplacementField> v;
    switch (m) {
        case Mode::PlaneSym:
            v.push_back(plane(m, S::cos(1, p, p - 1), S()));
            v.push_back(plane(m, S::cos(1, p, p + 1), S::sin(-1, p, p + 1)));
            v.push_back(plane(m, S::cos(t, p, p - 3), S::sin(-k, p, p - 3)));
            v.push_back(plane(m, S(), S::sin(1, p, p - 1)));
            break;
        case Mode::PlaneAnti:
            v.push_back(plane(m, S::sin(1, p, p - 1), S()));
            v.push_back(plane(m, S::sin(1, p, p + 1), S::cos(1, p, p + 1)));
            v.push_back(plane(m, S::sin(t, p, p - 3), S::cos(k, p, p - 3)));
            v.push_back(plane(m, S(), S::cos(1, p, p - 1)));
            break;
        case Mode::AntiplaneOdd:
            v.push_back(antiplane(S::sin(1, p, p)));
            v.push_back(antiplane(S::sin(1, p, p - 2)));
            break;
    }
    return v;
}

// Columns: amplitude -> coefficients of every (component, term key) of the field.
Eigen::MatrixXd field_map(const std::vector<DisplacementField>& members) {
    struct Key {
        int comp;
        Trig kind;
        double r_exp, freq;
    };
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-11 * std::max(1.0, std::max(std::abs(a), std::abs(b))); };
    std::vector<Key> keys;
    std::vector<std::vector<std::pair<std::size_t, double>>> cols(members.size());
    for (std::size_t j = 0; j < members.size(); ++j) {
        const PolarSeries* comps[3] = {&members[j].u_r, &members[j].u_t, &members[j].w};
        for (int c = 0; c < 3; ++c) {
            for (const Term& x : comps[c]->terms()) {
                std::size_t idx = keys.size();
                for (std::size_t i = 0; i < keys.size(); ++i)
                    if (keys[i].comp == c && keys[i].kind == x.kind && close(keys[i].r_exp, x.r_exp) && close(keys[i].freq, x.freq)) {
                        idx = i;
                        break;
                    }
                if (idx == keys.size()) keys.push_back({c, x.kind, x.r_exp, x.freq});
                cols[j].push_back({idx, x.coef});
            }
        }
    }
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(keys.size(), 1)),
                                              static_cast<Eigen::Index>(members.size()));
    for (std::size_t j = 0; j < members.size(); ++j)
        for (auto [i, v] : cols[j]) F(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += v;
    return F;
}

BCMatrix assemble(const WedgeCase& wc, double p, double nu, const BasisSet& bs) {
    BCMatrix M;
    M.mode = wc.mode;
    M.p = p;
    M.a = wc.half_angle_a;
    M.nu = nu;
    M.third_scale = bs.third_scale;
    M.pole_rescaled = bs.pole_rescaled;
    const auto n = static_cast<Eigen::Index>(bs.members.size());
    M.entries = Eigen::MatrixXd::Zero(n, n);
    double bound2 = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        auto ops = apply_bc_operators(bs.members[static_cast<std::size_t>(j)], nu);
        for (Eigen::Index i = 0; i < n; ++i) {
            const PolarSeries& op = ops[static_cast<std::size_t>(i)];
            M.entries(i, j) = op.eval(1.0, wc.half_angle_a);
            bound2 += op.magnitude(1.0) * op.magnitude(1.0);
        }
    }
    M.scale = std::sqrt(bound2);
    return M;
}

}  // namespace

DisplacementField& DisplacementField::operator+=(const DisplacementField& o) {
    u_r += o.u_r;
    u_t += o.u_t;
    w += o.w;
    return *this;
}

DisplacementField& DisplacementField::operator*=(double s) {
    u_r *= s;
    u_t *= s;
    w *= s;
    return *this;
}

std::vector<std::string> basis_labels(Mode m) {
    switch (m) {
        case Mode::PlaneSym: return {"A1", "A2", "A3", "A4"};
        case Mode::PlaneAnti: return {"B1", "B2", "B3", "B4"};
        case Mode::AntiplaneOdd: return {"D1", "D2"};
    }
    return {};
}

BasisSet basis_set(Mode m, double p, double nu) {
    BasisSet bs;
    const double d = p - 7.0 + 8.0 * nu;
    if (is_plane(m) && std::abs(d) < kPoleGuard) {
        bs.pole_rescaled = true;
        bs.third_scale = d;
    }
    bs.members = raw_members(m, p, nu, bs.third_scale, bs.pole_rescaled);
    return bs;
}

std::vector<DisplacementField> basis_fields(Mode m, double p, double nu) {
    auto bs = basis_set(m, p, nu);
    const auto labels = basis_labels(m);
    for (std::size_t j = 0; j < bs.members.size(); ++j)
        if (bs.members[j].is_zero()) throw DegenerateBasis(labels[j], p);
    return bs.members;
}

std::vector<PolarSeries> apply_bc_operators(const DisplacementField& f, double nu) {
    if (f.mode == Mode::AntiplaneOdd) {
        const PolarSeries& w = f.w;
        const PolarSeries wt = w.d_theta(), wr = w.d_r();
        PolarSeries shear = 2.0 * R(2, wt.d_r().d_r()) + 2.0 * wt + wt.d_theta().d_theta() - R(1, wt.d_r());
        PolarSeries couple = R(1, wr) + wt.d_theta();
        return {shear, couple};
    }
    const PolarSeries& ur = f.u_r;
    const PolarSeries& ut = f.u_t;
    const PolarSeries urt = ur.d_theta(), utt = ut.d_theta();
    const PolarSeries urr = ur.d_r(), utr = ut.d_r();

    PolarSeries shear = -(3 - 4 * nu) * R(2, urt.d_r().d_r()) + (3 - 2 * nu) * urt + (5 - 6 * nu) * utt.d_theta() -
                        R(1, utt.d_theta().d_r()) +
                        (1 - 2 * nu) * (-1.0 * R(3, utr.d_r().d_r()) + 2.0 * R(2, utr.d_r()) + R(1, urt.d_r()) - R(1, utr) -
                                        urt.d_theta().d_theta() + ut);
    PolarSeries normal = (3 - 4 * nu) * R(2, utt.d_r().d_r()) + 2 * (2 - 3 * nu) * urt.d_theta() + 2 * nu * R(3, urr.d_r().d_r()) +
                         2 * nu * utt + R(1, urt.d_theta().d_r()) +
                         (1 - nu) * (4.0 * R(2, urr.d_r()) + 2.0 * utt.d_theta().d_theta() - 2.0 * R(1, utt.d_r()) -
                                     2.0 * R(1, urr) + 2.0 * ur);
    PolarSeries m_ttr = R(-1, 2.0 * ur + utt).d_r() + R(-2, (urt - 2.0 * ut).d_theta());
    PolarSeries m_ttt = (1 - nu) * (R(-1, ut).d_r() + R(-2, (2.0 * ur + utt).d_theta())) + nu * R(-1, urt - ut).d_r();
    return {shear, normal, m_ttr, m_ttt};
}

BCMatrix bc_matrix(const WedgeCase& wc, double p, double nu) { return assemble(wc, p, nu, basis_set(wc.mode, p, nu)); }

Eigen::VectorXd singular_values(const BCMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.entries);
    return svd.singularValues();
}

double reference_sigma(const BCMatrix& m, double sigma_max) {
    return sigma_max >= 1e-10 * m.scale ? sigma_max : m.scale;
}

double sigma_ratio(const BCMatrix& m) {
    auto s = singular_values(m);
    const double ref = reference_sigma(m, s(0));
    return ref > 0 ? s(s.size() - 1) / ref : 0.0;
}

void normalize_amplitude(Eigen::VectorXd& v) {
    const double n = v.norm();
    if (n > 0) v /= n;
    Eigen::Index k = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(k)) * (1 + 1e-12)) k = i;
    if (v(k) < 0) v = -v;
}

std::vector<Eigen::VectorXd> null_space(const BCMatrix& m, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.entries, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double ref = reference_sigma(m, s(0));
    std::vector<Eigen::VectorXd> out;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) <= tol * ref) {
            Eigen::VectorXd v = svd.matrixV().col(i);
            normalize_amplitude(v);
            out.push_back(v);
        }
    }
    if (out.empty()) throw EmptyNullSpace(ref > 0 ? s(s.size() - 1) / ref : 0.0);
    return out;
}

std::vector<DisplacementField> special_p1_field(Mode m) {
    using S = PolarSeries;
    switch (m) {
        case Mode::PlaneSym: return {plane(m, S::cos(1, 1, 0), S()), plane(m, S::cos(1, 1, 2), S::sin(-1, 1, 2))};
        case Mode::PlaneAnti: return {plane(m, S::sin(1, 1, 2), S::cos(1, 1, 2))};
        case Mode::AntiplaneOdd: return {antiplane(S::sin(1, 1, 1))};
    }
    return {};
}

std::vector<std::string> special_p1_labels(Mode m) {
    switch (m) {
        case Mode::PlaneSym: return {"C1", "C3"};
        case Mode::PlaneAnti: return {"C2"};
        case Mode::AntiplaneOdd: return {"E"};
    }
    return {};
}

DisplacementField special_p1_field(Mode m, const std::vector<double>& coefs) {
    auto members = special_p1_field(m);
    if (coefs.size() != members.size())
        throw Error("expected " + std::to_string(members.size()) + " constant-strain coefficients, got " +
                    std::to_string(coefs.size()));
    DisplacementField f;
    f.mode = m;
    for (std::size_t i = 0; i < members.size(); ++i) f += coefs[i] * members[i];
    return f;
}

void attach_p1_part(EigenSolution& sol, const std::vector<double>& coefs) {
    sol.p1_field = special_p1_field(sol.wcase.mode, coefs);
    sol.p1_coefs = coefs;
    sol.includes_p1_part = true;
}

DisplacementField EigenSolution::pure(std::size_t amp_index) const {
    if (amp_index >= fields.size()) throw IndexOutOfRange(amp_index, fields.size());
    return fields[amp_index];
}

DisplacementField EigenSolution::field(std::size_t amp_index) const {
    DisplacementField f = pure(amp_index);
    if (includes_p1_part) f += p1_field;
    return f;
}

DisplacementField EigenSolution::combine(const std::vector<double>& weights) const {
    if (weights.size() != fields.size())
        throw Error("expected " + std::to_string(fields.size()) + " amplitudes, got " + std::to_string(weights.size()));
    DisplacementField f;
    f.mode = wcase.mode;
    for (std::size_t k = 0; k < fields.size(); ++k) f += weights[k] * fields[k];
    if (includes_p1_part) f += p1_field;
    return f;
}

EigenSolution eigenfield(const WedgeCase& wc, const MaterialParams& mat, double p, double tol) {
    EigenSolution sol;
    sol.wcase = wc;
    sol.mat = mat;
    sol.p = p;
    const double nu = mat.nu;

    if (std::abs(p - 1.0) < 1e-9) {
        sol.p = 1.0;
        sol.special_p1 = true;
        sol.members = special_p1_field(wc.mode);
        sol.fields = sol.members;
        sol.nullity = static_cast<int>(sol.members.size());
        for (std::size_t i = 0; i < sol.members.size(); ++i) {
            std::vector<double> e(sol.members.size(), 0.0);
            e[i] = 1.0;
            sol.amplitudes.push_back(e);
        }
        return sol;
    }

    const BasisSet bs = basis_set(wc.mode, p, nu);
    const BCMatrix M = assemble(wc, p, nu, bs);
    const auto n = M.entries.cols();

    // Restrict to amplitude directions that produce a nonzero field.
    const Eigen::MatrixXd F = field_map(bs.members);
    Eigen::JacobiSVD<Eigen::MatrixXd> fsvd(F, Eigen::ComputeFullV);
    const auto& fs = fsvd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < fs.size(); ++i)
        if (fs(i) > kFieldRankTol * fs(0)) ++rank;
    const Eigen::MatrixXd Q = rank == n ? Eigen::MatrixXd::Identity(n, n) : Eigen::MatrixXd(fsvd.matrixV().leftCols(rank));

    Eigen::JacobiSVD<Eigen::MatrixXd> msvd(M.entries);
    const double smax = reference_sigma(M, msvd.singularValues()(0));
    Eigen::JacobiSVD<Eigen::MatrixXd> rsvd(M.entries * Q, Eigen::ComputeFullV);
    const auto& rs = rsvd.singularValues();
    std::vector<Eigen::VectorXd> vecs;
    for (Eigen::Index i = 0; i < rs.size(); ++i)
        if (rs(i) <= tol * smax) vecs.push_back(Q * rsvd.matrixV().col(i));
    if (vecs.empty()) throw EmptyNullSpace(smax > 0 ? rs(rs.size() - 1) / smax : 0.0);

    const bool map_back = bs.pole_rescaled && bs.third_scale != 0.0;
    sol.pole_rescaled = bs.pole_rescaled && !map_back;
    sol.members = map_back ? raw_members(wc.mode, p, nu, 1.0, false) : bs.members;
    for (auto& v : vecs) {
        if (map_back) v(2) *= bs.third_scale;
        normalize_amplitude(v);
        DisplacementField f;
        f.mode = wc.mode;
        for (Eigen::Index j = 0; j < n; ++j) f += v(j) * sol.members[static_cast<std::size_t>(j)];
        sol.fields.push_back(f);
        sol.amplitudes.emplace_back(v.data(), v.data() + v.size());
    }
    sol.nullity = static_cast<int>(vecs.size());
    return sol;
}

}  // namespace notch
