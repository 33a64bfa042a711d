// Runs the notch binary given as argv[1] and checks its output and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "notch/eigensolver.hpp"
#include "notch/fields.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace {

std::string g_bin;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    const std::string cmd = "'" + g_bin + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double to_double(const std::string& s) {
    double x = NAN;
    std::from_chars(s.data(), s.data() + s.size(), x);
    return x;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("notch_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("usage errors") {
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 1);
    CHECK(run("eig --mode ps-sym").code == 1);
    CHECK(run("eig --mode bogus --angle-deg 120").code == 1);
    CHECK(run("eig --mode ps-sym --angle-deg 80").code == 1);
    CHECK(run("eig --mode ps-sym --angle-deg 120 --nu 0.5").code == 1);
    CHECK(run("sweep --mode ap --from 150 --to 120").code == 1);
    CHECK(run("check --suite nothing").code == 1);
}

TEST_CASE("eig reports the crack roots") {
    const auto r = run("eig --mode ps-anti --angle-deg 180 --nu 0.25");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& roots = j.at("roots");
    REQUIRE(roots.size() >= 2);
    CHECK(roots[0].at("kind") == "special_p1");
    CHECK(roots[1].at("kind") == "bracket_root");
    CHECK(std::abs(roots[1].at("p").get<double>() - 1.5) < 1e-9);
    CHECK(roots[1].at("nullity") == 2);
    CHECK(roots[1].at("basis").size() == 4);
}

TEST_CASE("sweep table") {
    const auto path = temp_file("sweep.csv");
    REQUIRE(run("sweep --mode ps-sym --nu 0.3 --from 90 --to 180 --step 10 --out " + path.string()).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::filesystem::remove(path);
    const auto rows = csv(ss.str());
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == std::vector<std::string>{"angle_deg", "nu", "mode", "p", "exp_monopolar", "exp_total"});
    CHECK(to_double(rows[1][3]) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(to_double(rows[10][0]) == 180.0);
    CHECK(to_double(rows[10][5]) == doctest::Approx(-1.5).epsilon(1e-9));
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(to_double(rows[i][3]) < to_double(rows[i - 1][3]));
}

TEST_CASE("sweep output is reproducible") {
    const auto a = run("sweep --mode ap --from 100 --to 170 --step 7");
    const auto b = run("sweep --mode ap --from 100 --to 170 --step 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("field grid round-trips to the library values") {
    const auto r = run("field --mode ps-sym --angle-deg 150 --nu 0.3 --eig-index 1 --amps 1 --r 0.5,2 --theta-steps 4");
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 11);
    const auto names = notch::component_names(notch::Mode::PlaneSym);
    REQUIRE(rows[0].size() == names.size() + 2);

    const notch::WedgeCase wc{notch::deg2rad(150.0), notch::Mode::PlaneSym};
    const auto mat = notch::material_with_nu(0.3);
    const auto sol = notch::eigenfield(wc, mat, notch::smallest_exponents(wc, 0.3).p);
    const auto fs = notch::field_series(sol.combine({1.0}), mat);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double rr = to_double(rows[i][0]), t = to_double(rows[i][1]);
        const auto v = notch::evaluate(fs, rr, t);
        std::size_t col = 2;
        notch::for_each_component(v, [&](const char* name, double x) {
            CAPTURE(name);
            CHECK(to_double(rows[i][col++]) == x);
        });
    }
    CHECK(to_double(rows[1][1]) == -wc.half_angle_a);
    CHECK(to_double(rows[5][1]) == wc.half_angle_a);
}

TEST_CASE("field rejects a wrong amplitude count") {
    CHECK(run("field --mode ps-sym --angle-deg 180 --eig-index 1 --amps 1 --r 1").code == 1);
    CHECK(run("field --mode ps-sym --angle-deg 180 --eig-index 99 --amps 1,1 --r 1").code == 1);
}

TEST_CASE("equilibrium") {
    const auto path = temp_file("eq.json");
    const auto r = run("equilibrium --mode I --amps 1,0 --nu 0.3 --r0 1 --json " + path.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    std::filesystem::remove(path);
    CHECK(j.at("pass") == true);
    CHECK(j.at("corner_forces").at("Er_A").get<double>() == doctest::Approx(-237.6 / 31.4).epsilon(1e-5));
    CHECK(run("equilibrium --mode notch-sym --angle-deg 114.6 --amps 1 --r0 0.1").code == 0);
    CHECK(run("equilibrium --mode III-na --amps 1 --r0 1").code == 1);
}

TEST_CASE("check suite") {
    const auto path = temp_file("check.json");
    const auto r = run("check --suite halfspace --seed 3 --json " + path.string());
    CHECK(r.code == 0);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    std::filesystem::remove(path);
    CHECK(j.at("pass") == true);
    CHECK(j.at("seed") == 3);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-notch> [doctest options]\n");
        return 1;
    }
    g_bin = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
