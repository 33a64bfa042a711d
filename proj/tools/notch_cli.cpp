// notch: eigenvalues, sweeps, field grids, equilibrium and verification for
// sharp notches in dipolar gradient elasticity.
#include "notch/basis.hpp"
#include "notch/eigensolver.hpp"
#include "notch/equilibrium.hpp"
#include "notch/fields.hpp"
#include "notch/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

using json = nlohmann::json;

namespace {

constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

// Writes to a file, or to standard output for "-".
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::vector<double> parse_list(const std::string& s, const std::string& flag) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double x = 0.0;
        auto res = std::from_chars(item.data(), item.data() + item.size(), x);
        if (res.ec != std::errc() || res.ptr != item.data() + item.size())
            throw UsageError("--" + flag + ": '" + item + "' is not a number");
        v.push_back(x);
    }
    return v;
}

struct Common {
    std::string mode = "ps-sym";
    double angle_deg = 180.0;
    double nu = 0.3;
    double mu = 1.0;
    double c = 1.0;
};

notch::MaterialParams material(const Common& o) { return {o.mu, o.nu, o.c}; }

notch::WedgeCase wedge(const Common& o) {
    notch::Mode m;
    try {
        m = notch::parse_mode_tag(o.mode);
    } catch (const notch::Error& e) {
        throw UsageError(e.what());
    }
    if (!(o.angle_deg >= 90.0 && o.angle_deg <= 180.0))
        throw UsageError("--angle-deg must lie in [90, 180], got " + num(o.angle_deg));
    if (notch::is_plane(m) && !(o.nu >= 0.0 && o.nu < 0.5)) throw UsageError("--nu must lie in [0, 0.5), got " + num(o.nu));
    const notch::WedgeCase wc{notch::deg2rad(o.angle_deg), m};
    try {
        notch::validate_case(material(o), wc);
    } catch (const notch::OutOfRange& e) {
        throw UsageError(e.what());
    }
    return wc;
}

void add_common(CLI::App* cmd, Common& o, bool with_angle = true) {
    cmd->add_option("--mode", o.mode, "ps-sym | ps-anti | ap")->required();
    if (with_angle) cmd->add_option("--angle-deg", o.angle_deg, "notch half-angle in degrees, 90..180")->required();
    cmd->add_option("--nu", o.nu, "Poisson ratio in [0, 0.5) (ignored for ap)");
    cmd->add_option("--mu", o.mu, "shear modulus");
    cmd->add_option("--c", o.c, "gradient coefficient");
}

json case_json(const Common& o, const notch::WedgeCase& wc) {
    return {{"mode", o.mode}, {"angle_deg", o.angle_deg}, {"a_rad", wc.half_angle_a}, {"nu", o.nu}, {"mu", o.mu}, {"c", o.c}};
}

// ---- eig ----

struct EigOpts {
    Common common;
    double p_max = 4.0;
    double tol = 1e-7;
};

int cmd_eig(const EigOpts& o) {
    const auto wc = wedge(o.common);
    const auto mat = material(o.common);
    notch::RootScanOptions scan;
    scan.p_max = o.p_max;
    try {
        notch::validate_options(scan);
    } catch (const notch::OutOfRange& e) {
        throw UsageError(e.what());
    }
    json roots = json::array();
    for (const auto& ev : notch::admissible_eigenvalues(wc, mat.nu, scan)) {
        json r;
        r["p"] = ev.p;
        r["admissible"] = ev.admissible;
        r["kind"] = ev.origin == notch::RootOrigin::SpecialP1 ? "special_p1" : "bracket_root";
        r["even_multiplicity"] = ev.even_multiplicity;
        try {
            const auto sol = notch::eigenfield(wc, mat, ev.p, o.tol);
            r["nullity"] = sol.nullity;
            r["amplitudes"] = sol.amplitudes;
            r["basis"] = sol.special_p1 ? notch::special_p1_labels(wc.mode) : notch::basis_labels(wc.mode);
        } catch (const notch::EmptyNullSpace& e) {
            r["nullity"] = 0;
            r["amplitudes"] = json::array();
            r["note"] = e.what();
        }
        roots.push_back(r);
    }
    json warnings = json::array();
    for (const auto& w : notch::find_roots(wc, mat.nu, scan).warnings)
        warnings.push_back({{"kind", w.kind}, {"p", w.p}, {"value", w.value}, {"message", w.message}});
    json out{{"case", case_json(o.common, wc)}, {"roots", roots}, {"warnings", warnings}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- sweep ----

struct SweepOpts {
    Common common;
    double from = 90.0, to = 180.0, step = 0.5;
    std::string out = "-";
};

int cmd_sweep(const SweepOpts& o) {
    if (!(o.from >= 90.0 && o.to <= 180.0 && o.from <= o.to)) throw UsageError("need 90 <= --from <= --to <= 180");
    if (!(o.step > 0.0)) throw UsageError("--step must be positive");
    Common probe = o.common;
    probe.angle_deg = o.from;
    const auto mode = wedge(probe).mode;
    const auto n = static_cast<std::size_t>(std::floor((o.to - o.from) / o.step + 1e-9)) + 1;

    std::vector<double> angles(n);
    for (std::size_t i = 0; i < n; ++i) angles[i] = std::min(o.to, o.from + static_cast<double>(i) * o.step);
    std::vector<std::optional<notch::ExponentSummary>> rows(n);
    std::vector<std::string> errors(n);

    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(n)));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                try {
                    rows[i] = notch::smallest_exponents({notch::deg2rad(angles[i]), mode}, o.common.nu);
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
        });
    }
    for (auto& t : pool) t.join();

    Sink sink(o.out);
    auto& os = sink.out();
    os << "angle_deg,nu,mode,p,exp_monopolar,exp_total\n";
    bool failed = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i]) {
            std::cerr << "angle " << num(angles[i]) << ": " << errors[i] << "\n";
            failed = true;
            continue;
        }
        const auto& e = *rows[i];
        os << num(angles[i]) << ',' << num(o.common.nu) << ',' << o.common.mode << ',' << num(e.p) << ','
           << num(e.exp_monopolar) << ',' << num(e.exp_total) << '\n';
    }
    os.flush();
    return failed ? kCheckFailed : 0;
}

// ---- field ----

struct FieldOpts {
    Common common;
    std::size_t eig_index = 1;
    std::string amps, radii, with_p1;
    int theta_steps = 36;
    double p_max = 4.0;
    std::string out = "-";
};

int cmd_field(const FieldOpts& o) {
    const auto wc = wedge(o.common);
    const auto mat = material(o.common);
    notch::RootScanOptions scan;
    scan.p_max = o.p_max;
    const auto evs = notch::admissible_eigenvalues(wc, mat.nu, scan);
    if (o.eig_index >= evs.size())
        throw UsageError("--eig-index " + std::to_string(o.eig_index) + " out of range (" + std::to_string(evs.size()) +
                         " eigenvalues up to p = " + num(o.p_max) + ")");
    if (o.theta_steps < 1) throw UsageError("--theta-steps must be at least 1");
    auto sol = notch::eigenfield(wc, mat, evs[o.eig_index].p);

    const auto w = parse_list(o.amps, "amps");
    if (w.size() != static_cast<std::size_t>(sol.nullity))
        throw UsageError("--amps has " + std::to_string(w.size()) + " values, nullity is " + std::to_string(sol.nullity));
    if (!o.with_p1.empty()) {
        const auto c = parse_list(o.with_p1, "with-p1");
        const auto want = notch::special_p1_labels(wc.mode).size();
        if (c.size() != want) throw UsageError("--with-p1 takes " + std::to_string(want) + " values");
        notch::attach_p1_part(sol, c);
    }
    const auto radii = parse_list(o.radii, "r");
    if (radii.empty()) throw UsageError("--r needs at least one radius");
    for (double r : radii)
        if (!(r > 0)) throw UsageError("--r values must be positive");

    const auto fs = notch::field_series(sol.combine(w), mat);
    Sink sink(o.out);
    auto& os = sink.out();
    os << "r,theta";
    for (const auto& name : notch::component_names(wc.mode)) os << ',' << name;
    os << '\n';
    const double a = wc.half_angle_a;
    for (double r : radii) {
        for (int k = 0; k <= o.theta_steps; ++k) {
            const double t = k == o.theta_steps ? a : -a + 2.0 * a * k / o.theta_steps;
            const auto v = notch::evaluate(fs, r, t);
            os << num(r) << ',' << num(t);
            notch::for_each_component(v, [&](const char*, double x) { os << ',' << num(x); });
            os << '\n';
        }
    }
    os.flush();
    return 0;
}

// ---- equilibrium ----

struct EquilibriumOpts {
    std::string mode;
    double angle_deg = 180.0;
    std::string amps;
    double nu = 0.3, mu = 1.0, c = 1.0;
    double r0 = 1.0;
    std::string json_out = "-";
};

int cmd_equilibrium(const EquilibriumOpts& o) {
    if (o.mode == "III-na" || o.mode == "III")
        throw UsageError("mode III has no corner-force equilibrium: anti-plane edge forces act out of plane and no "
                         "force/moment balance of the sector is defined for them");
    const bool crack = o.mode == "I" || o.mode == "II";
    if (!crack && o.mode != "notch-sym" && o.mode != "notch-anti")
        throw UsageError("--mode must be one of I, II, III-na, notch-sym, notch-anti");
    if (crack && o.angle_deg != 180.0) throw UsageError("crack modes require --angle-deg 180");
    if (!(o.r0 > 0)) throw UsageError("--r0 must be positive");

    Common common{o.mode == "I" || o.mode == "notch-sym" ? "ps-sym" : "ps-anti", o.angle_deg, o.nu, o.mu, o.c};
    const auto wc = wedge(common);
    const auto mat = material(common);
    const double p = notch::smallest_exponents(wc, mat.nu).p;
    auto sol = notch::eigenfield(wc, mat, p);
    auto w = parse_list(o.amps, "amps");

    notch::FieldSeries fs;
    double fit_residual = 0.0;
    if (crack) {
        // crack amplitudes (A1, A2) or (B1, B2), mapped onto the null space
        if (w.size() != 2) throw UsageError("crack modes take two amplitudes");
        const auto cm = o.mode == "I" ? notch::CrackMode::I : notch::CrackMode::II;
        std::vector<double> ref_amps = o.mode == "I" ? std::vector<double>{0, 0, w[0], w[1]} : std::vector<double>{0, w[0], w[1]};
        const auto ref = notch::crack_reference_series(cm, ref_amps, mat);
        std::vector<notch::PolarPoint> pts;
        for (int i = 0; i < 24; ++i) pts.push_back({0.5 + 0.1 * i, -3.0 + 0.25 * i});
        const auto fit = notch::match_amplitudes(sol, ref, pts);
        fit_residual = fit.residual;
        fs = notch::field_series(sol.combine(fit.eigen_weights), mat);
    } else {
        if (w.size() != static_cast<std::size_t>(sol.nullity))
            throw UsageError("--amps has " + std::to_string(w.size()) + " values, nullity is " + std::to_string(sol.nullity));
        fs = notch::field_series(sol.combine(w), mat);
    }

    const auto rep = notch::check_equilibrium(fs, o.r0, wc.half_angle_a);
    std::ostream& os = std::cout;
    os << "mode " << o.mode << "  a = " << num(o.angle_deg) << " deg  p = " << num(p) << "  r0 = " << num(o.r0) << "\n";
    os << "H   = " << num(rep.arc.H) << "\nV   = " << num(rep.arc.V) << "\nT   = " << num(rep.arc.T) << "\n";
    os << "E_r^A = " << num(rep.edge.Er_A) << "  E_t^A = " << num(rep.edge.Et_A) << "\n";
    os << "E_r^B = " << num(rep.edge.Er_B) << "  E_t^B = " << num(rep.edge.Et_B) << "\n";
    os << "sum Fx = " << num(rep.sum_fx) << "\nsum Fy = " << num(rep.sum_fy) << "\nsum M  = " << num(rep.sum_m) << "\n";
    os << (rep.pass ? "PASS" : "FAIL") << " (tolerance " << num(rep.tol) << " x scale " << num(rep.scale) << ")\n";

    json j{{"mode", o.mode},
           {"angle_deg", o.angle_deg},
           {"p", p},
           {"r0", o.r0},
           {"nu", o.nu},
           {"H", rep.arc.H},
           {"V", rep.arc.V},
           {"T", rep.arc.T},
           {"quadrature", {{"H", rep.arc.H_quad}, {"V", rep.arc.V_quad}, {"T", rep.arc.T_quad}, {"nodes", rep.arc.quad_nodes}}},
           {"corner_forces", {{"Er_A", rep.edge.Er_A}, {"Et_A", rep.edge.Et_A}, {"Er_B", rep.edge.Er_B}, {"Et_B", rep.edge.Et_B}}},
           {"sum_fx", rep.sum_fx},
           {"sum_fy", rep.sum_fy},
           {"sum_m", rep.sum_m},
           {"scale", rep.scale},
           {"pass", rep.pass}};
    if (crack) j["fit_residual"] = fit_residual;
    if (o.json_out == "-") os << "\n";
    Sink sink(o.json_out);
    sink.out() << j.dump(2) << "\n";
    return rep.pass ? 0 : kCheckFailed;
}

// ---- check ----

struct CheckOpts {
    std::string suite = "all";
    std::uint64_t seed = 7;
    std::string json_out = "-";
};

int cmd_check(const CheckOpts& o) {
    const auto names = notch::suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown --suite '" + o.suite + "'");
    const auto rep = notch::run_suite(o.suite, o.seed);
    std::size_t failed = 0;
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  value " << num(c.value) << "  limit " << num(c.threshold);
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        failed += c.pass ? 0 : 1;
    }
    std::cout << rep.checks.size() - failed << "/" << rep.checks.size() << " checks passed\n";
    if (o.json_out == "-") std::cout << "\n";
    Sink sink(o.json_out);
    sink.out() << rep.to_json().dump(2) << "\n";
    return rep.pass() ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp-notch asymptotics in dipolar gradient elasticity"};
    app.require_subcommand(1);

    EigOpts eig;
    auto* c_eig = app.add_subcommand("eig", "eigenvalues, nullities and null vectors for one notch");
    add_common(c_eig, eig.common);
    c_eig->add_option("--p-max", eig.p_max, "upper end of the root scan");
    c_eig->add_option("--tol", eig.tol, "relative singular-value threshold for the null space");

    SweepOpts sweep;
    auto* c_sweep = app.add_subcommand("sweep", "smallest exponent over a range of notch angles (CSV)");
    add_common(c_sweep, sweep.common, false);
    c_sweep->add_option("--from", sweep.from, "first angle in degrees");
    c_sweep->add_option("--to", sweep.to, "last angle in degrees");
    c_sweep->add_option("--step", sweep.step, "angle increment in degrees");
    c_sweep->add_option("--out", sweep.out, "output path, - for standard output");

    FieldOpts field;
    auto* c_field = app.add_subcommand("field", "field grid for one eigenvalue (CSV)");
    add_common(c_field, field.common);
    c_field->add_option("--eig-index", field.eig_index, "index into the eig root list (0 is the p = 1 solution)");
    c_field->add_option("--amps", field.amps, "comma-separated null-vector weights")->required();
    c_field->add_option("--r", field.radii, "comma-separated radii")->required();
    c_field->add_option("--theta-steps", field.theta_steps, "intervals on [-a, a]");
    c_field->add_option("--with-p1", field.with_p1, "constant-strain part: C1,C3 | C2 | E");
    c_field->add_option("--p-max", field.p_max, "upper end of the root scan");
    c_field->add_option("--out", field.out, "output path, - for standard output");

    EquilibriumOpts eq;
    auto* c_eq = app.add_subcommand("equilibrium", "force and moment balance of a small sector around the tip");
    c_eq->add_option("--mode", eq.mode, "I | II | III-na | notch-sym | notch-anti")->required();
    c_eq->add_option("--angle-deg", eq.angle_deg, "notch half-angle in degrees");
    c_eq->add_option("--amps", eq.amps, "I: A1,A2  II: B1,B2  notch: null-vector weights")->required();
    c_eq->add_option("--nu", eq.nu, "Poisson ratio");
    c_eq->add_option("--mu", eq.mu, "shear modulus");
    c_eq->add_option("--c", eq.c, "gradient coefficient");
    c_eq->add_option("--r0", eq.r0, "arc radius");
    c_eq->add_option("--json", eq.json_out, "JSON report path, - for standard output");

    CheckOpts chk;
    auto* c_chk = app.add_subcommand("check", "run the verification suite");
    c_chk->add_option("--suite", chk.suite, "all | crack | halfspace | sweep | equilibrium");
    c_chk->add_option("--seed", chk.seed, "random seed");
    c_chk->add_option("--json", chk.json_out, "JSON report path, - for standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (c_eig->parsed()) return cmd_eig(eig);
        if (c_sweep->parsed()) return cmd_sweep(sweep);
        if (c_field->parsed()) return cmd_field(field);
        if (c_eq->parsed()) return cmd_equilibrium(eq);
        if (c_chk->parsed()) return cmd_check(chk);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const notch::NoRootFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
