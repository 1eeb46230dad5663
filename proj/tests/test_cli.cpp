// test_cli.cpp - end-to-end checks of the command-line tool: report values,
// file outputs, determinism, the exit-code contract, and the config round
// trip from emitted metadata.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "json.hpp"

#include "mollow/spectrum.hpp"

using nlohmann::json;

namespace {

const std::string kCli = MOLLOW_CLI_PATH;
const std::string kFig1 = std::string(MOLLOW_DATA_DIR) + "/scenarios/fig1.json";

std::string work_dir() {
    static const std::string dir = [] {
        std::string d = "/tmp/mollow_cli_test_" + std::to_string(::getpid());
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int n = 0;
    const std::string out = work_dir() + "/stdout" + std::to_string(n);
    const std::string err = work_dir() + "/stderr" + std::to_string(n);
    ++n;
    const std::string cmd = kCli + " " + args + " >" + out + " 2>" + err;
    const int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status))
        r.code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string write_file(const std::string& name, const std::string& contents) {
    const std::string path = work_dir() + "/" + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

void load_csv(const std::string& path, std::vector<double>& omega,
              std::vector<double>& value) {
    std::ifstream in(path);
    REQUIRE(in.good());
    mollow::read_spectrum_csv(in, omega, value);
}

// offset of the spectrum's maximum inside [lo, hi]
double argmax_in(const std::vector<double>& omega, const std::vector<double>& value,
                 double lo, double hi) {
    double best = lo, best_v = -1.0;
    for (std::size_t i = 0; i < omega.size(); ++i)
        if (omega[i] >= lo && omega[i] <= hi && value[i] > best_v) {
            best_v = value[i];
            best = omega[i];
        }
    return best;
}

} // namespace

TEST_CASE("shifts: JSON report carries the illustrative closed forms") {
    const std::string out = work_dir() + "/shifts.json";
    const RunResult r =
        run_cli("shifts --scenario " + kFig1 + " --format json --out " + out);
    REQUIRE(r.code == 0);

    const json rep = json::parse(slurp(out));
    CHECK(rep["mode"] == "full");
    CHECK(std::abs(rep["drive"]["theta"].get<double>() - 0.97565135195363073) < 1e-12);
    CHECK(std::abs(rep["drive"]["Omega_R"].get<double>() - 26.925824035672520) < 1e-12);
    const auto& corr = rep["corrections"];
    CHECK(std::abs(corr["dw_plus"].get<double>() - (-1.8569533817705186)) < 1e-12);
    CHECK(std::abs(corr["small_dw_plus"].get<double>() - (-0.46423834544262965)) < 1e-12);
    CHECK(std::abs(corr["full_plus"].get<double>() - (-1.920824535572545)) < 1e-12);
    CHECK(std::abs(corr["sideband_plus"].get<double>() - 25.004999500099975) < 1e-12);
    CHECK(corr["full_minus"].get<double>() == -corr["full_plus"].get<double>());
    CHECK(rep["coefficients"]["C_overridden"] == true);
}

TEST_CASE("shifts: human table rounds to six significant digits") {
    const RunResult r = run_cli("shifts --scenario " + kFig1);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("-1.85695") != std::string::npos);
    CHECK(r.out.find("-0.464238") != std::string::npos);
    CHECK(r.out.find("-1.92082") != std::string::npos);
}

TEST_CASE("shifts: mode none zeroes every correction") {
    const std::string out = work_dir() + "/shifts_none.json";
    const RunResult r = run_cli("shifts --scenario " + kFig1 +
                                " --mode none --format json --out " + out);
    REQUIRE(r.code == 0);
    const json rep = json::parse(slurp(out));
    for (const char* key : {"dw_plus", "dw_minus", "small_dw_plus", "small_dw_minus",
                            "full_plus", "full_minus"})
        CHECK(rep["corrections"][key].get<double>() == 0.0);
    // uncorrected sidebands sit at +- the generalized Rabi frequency
    CHECK(std::abs(rep["corrections"]["sideband_plus"].get<double>() -
                   26.925824035672520) < 1e-12);
}

TEST_CASE("spectrum: bare and full sidebands differ by about half a linewidth") {
    const std::string prefix = work_dir() + "/fig1";
    const RunResult r = run_cli("spectrum --scenario " + kFig1 +
                                " --mode bare --mode full --out " + prefix);
    REQUIRE(r.code == 0);

    std::vector<double> om_b, v_b, om_f, v_f;
    load_csv(prefix + "_bare.csv", om_b, v_b);
    load_csv(prefix + "_full.csv", om_f, v_f);
    REQUIRE(om_b.size() == om_f.size());

    const double step = om_b[1] - om_b[0];
    const double upper_b = argmax_in(om_b, v_b, 12.0, om_b.back());
    const double upper_f = argmax_in(om_f, v_f, 12.0, om_f.back());
    CHECK(std::abs(upper_b - 25.495097567963924) <= step);
    CHECK(std::abs(upper_f - 25.004999500099975) <= step);
    CHECK(std::abs((upper_b - upper_f) - 0.49) < 0.04);

    // metadata names both files and embeds the scenario
    const json meta = json::parse(slurp(prefix + "_metadata.json"));
    CHECK(meta["files"].size() == 2);
    CHECK(meta["scenario"]["corrections"]["C"] == 0.02);
}

TEST_CASE("spectrum: resonant uncorrected spectrum is mirror symmetric") {
    const std::string scn = write_file("resonant.json", R"({
        "config_version": 1,
        "drive": {"omega": 25.0, "delta": 0.0},
        "corrections": {"mode": "none"}
    })");
    const std::string prefix = work_dir() + "/res";
    const RunResult r = run_cli("spectrum --scenario " + scn + " --out " + prefix);
    REQUIRE(r.code == 0);

    std::vector<double> om, v;
    load_csv(prefix + "_none.csv", om, v);
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        const double rel = std::abs(v[i] - v[n - 1 - i]) /
                           std::max(std::abs(v[i]), std::abs(v[n - 1 - i]));
        CHECK(rel < 1e-9);
    }
}

TEST_CASE("spectrum: degenerate grid fails validation") {
    const std::string scn = write_file("badgrid.json", R"({
        "config_version": 1,
        "drive": {"omega": 25.0, "delta": 10.0},
        "grid": {"min": -50.0, "max": 50.0, "count": 1}
    })");
    const RunResult r =
        run_cli("spectrum --scenario " + scn + " --out " + work_dir() + "/bad");
    CHECK(r.code == 2);
    CHECK(r.err.find("grid") != std::string::npos);
}

TEST_CASE("fit: CSV round trip recovers the generating parameters") {
    const std::string prefix = work_dir() + "/rt";
    REQUIRE(run_cli("spectrum --scenario " + kFig1 + " --mode full --out " + prefix)
                .code == 0);

    const std::string out = work_dir() + "/rt_fit.json";
    const RunResult r = run_cli("fit " + prefix + "_full.csv --out " + out);
    REQUIRE(r.code == 0);

    const json rep = json::parse(slurp(out));
    const auto& fit = rep["fit"];
    REQUIRE(fit["converged"] == true);
    const auto& peaks = fit["peaks"];
    REQUIRE(peaks.size() == 3);
    CHECK(std::abs(peaks[2]["center"].get<double>() - 25.004999500099975) < 1e-6);
    CHECK(std::abs(peaks[0]["center"].get<double>() + 25.004999500099975) < 1e-6);
    CHECK(std::abs(peaks[1]["center"].get<double>()) < 1e-6);
    // with the scale pinned to 1, the fitted weights absorb Gamma/pi
    const mollow::MollowParameters gen =
        mollow::mollow_parameters(25.0, 10.0, 1.0, 25.004999500099975);
    const double expected_w1 = gen.A0_inc * gen.Gamma0 / std::acos(-1.0);
    CHECK(std::abs(peaks[1]["weight"].get<double>() - expected_w1) < 1e-6);
    CHECK(fit["residual_rms"].get<double>() < 1e-12);
}

TEST_CASE("fit: residual CSV output") {
    const std::string prefix = work_dir() + "/resid";
    REQUIRE(run_cli("spectrum --scenario " + kFig1 + " --mode full --out " + prefix)
                .code == 0);
    const RunResult r =
        run_cli("fit " + prefix + "_full.csv --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("omega,residual", 0) == 0);
    // every residual of the noiseless round trip is tiny
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::abs(std::strtod(line.c_str() + comma + 1, nullptr)) < 1e-10);
        ++rows;
    }
    CHECK(rows == 8001);
}

TEST_CASE("fit: scenario mode reports measured next to analytic") {
    const std::string out = work_dir() + "/fit_scn.json";
    const RunResult r = run_cli("fit --scenario " + kFig1 + " --out " + out);
    REQUIRE(r.code == 0);

    const json rep = json::parse(slurp(out));
    const double measured = rep["measured"]["delta_plus"].get<double>();
    const double analytic = rep["analytic"]["delta_plus"].get<double>();
    CHECK(std::abs(analytic - (-1.920824535572545)) < 1e-12);
    CHECK(std::abs(measured - analytic) < 1e-6);
    CHECK(rep["fits"]["uncorrected"]["converged"] == true);
    CHECK(rep["fits"]["bare"]["converged"] == true);
    CHECK(rep["fits"]["full"]["converged"] == true);
}

TEST_CASE("fit: malformed CSV names the offending row") {
    const std::string bad = write_file("bad.csv", "omega,S_inc\n1.0,2.0\n3.0,oops\n");
    const RunResult r = run_cli("fit " + bad);
    CHECK(r.code == 2);
    CHECK(r.err.find("row 3") != std::string::npos);
}

TEST_CASE("fit: CSV and scenario inputs are mutually exclusive") {
    const RunResult r = run_cli("fit foo.csv --scenario " + kFig1);
    CHECK(r.code == 2);
}

TEST_CASE("feasibility: hydrogen defaults") {
    const std::string out = work_dir() + "/feas.json";
    const RunResult r = run_cli("feasibility --format json --out " + out);
    REQUIRE(r.code == 0);

    const json rep = json::parse(slurp(out));
    CHECK(std::abs(rep["r1_estimate"].get<double>() - 1.5215e-3) < 1e-3 * 1.5215e-3);
    CHECK(std::abs(rep["r2"].get<double>() - 25.3233) < 1e-3 * 25.3233);
    const double p = rep["power"]["required_W"].get<double>();
    CHECK(p > 340e-6 / 10);
    CHECK(p < 340e-6 * 10);
    CHECK(rep["power"]["gap"].get<double>() < 1e5);
    CHECK(std::abs(rep["bloch_siegert"]["shift_rad_per_s"].get<double>() - 1024.76) <
          1e-3 * 1024.76);
    CHECK(std::abs(rep["transition"]["lambda_m"].get<double>() - 121.5e-9) <
          1e-3 * 121.5e-9);
}

TEST_CASE("feasibility: doubling h quadruples power and quarters r2") {
    const std::string out1 = work_dir() + "/feas1.json";
    const std::string out2 = work_dir() + "/feas2.json";
    REQUIRE(run_cli("feasibility --h 1000 --format json --out " + out1).code == 0);
    REQUIRE(run_cli("feasibility --h 2000 --format json --out " + out2).code == 0);
    const json a = json::parse(slurp(out1)), b = json::parse(slurp(out2));
    CHECK(std::abs(b["power"]["required_W"].get<double>() /
                       a["power"]["required_W"].get<double>() -
                   4.0) < 1e-9);
    CHECK(std::abs(a["r2"].get<double>() / b["r2"].get<double>() - 4.0) < 1e-9);
}

TEST_CASE("figure1: deterministic bytes and the documented sidebands") {
    const std::string d1 = work_dir() + "/fig_a";
    const std::string d2 = work_dir() + "/fig_b";
    REQUIRE(run_cli("figure1 --out " + d1).code == 0);
    REQUIRE(run_cli("figure1 --out " + d2).code == 0);

    const char* names[] = {"panel_a_uncorrected.csv", "panel_a_bare.csv",
                           "panel_b_bare.csv", "panel_b_full.csv", "manifest.json"};
    for (const char* name : names) {
        const std::string f1 = slurp(d1 + "/" + std::string(name));
        REQUIRE_FALSE(f1.empty());
        CHECK(f1 == slurp(d2 + "/" + std::string(name)));
    }

    const json manifest = json::parse(slurp(d1 + "/manifest.json"));
    const auto& off = manifest["sideband_offsets"];
    CHECK(std::abs(off["uncorrected"].get<double>() - 26.9258) < 1e-3);
    CHECK(std::abs(off["bare"].get<double>() - 25.4951) < 1e-3);
    CHECK(std::abs(off["full"].get<double>() - 25.0050) < 1e-3);

    // the panel-a pair differ only through the detuning shift: same grid,
    // different sideband positions
    std::vector<double> om_u, v_u, om_b, v_b;
    load_csv(d1 + "/panel_a_uncorrected.csv", om_u, v_u);
    load_csv(d1 + "/panel_a_bare.csv", om_b, v_b);
    CHECK(om_u == om_b);
    CHECK(v_u != v_b);
}

TEST_CASE("config round trip: metadata scenario regenerates identical bytes") {
    const std::string prefix = work_dir() + "/orig";
    REQUIRE(run_cli("spectrum --scenario " + kFig1 + " --mode full --out " + prefix)
                .code == 0);
    const json meta = json::parse(slurp(prefix + "_metadata.json"));
    const std::string scn = write_file("roundtrip.json", meta["scenario"].dump());

    const std::string prefix2 = work_dir() + "/again";
    REQUIRE(run_cli("spectrum --scenario " + scn + " --mode full --out " + prefix2)
                .code == 0);
    CHECK(slurp(prefix + "_full.csv") == slurp(prefix2 + "_full.csv"));
}

TEST_CASE("noisy spectra are seed-deterministic") {
    const std::string scn = write_file("noisy.json", R"({
        "config_version": 1,
        "drive": {"omega": 25.0, "delta": 10.0},
        "corrections": {"mode": "full", "C": 0.02, "L_bare": 5.0},
        "noise": {"sigma": 1e-3, "seed": 42}
    })");
    const std::string p1 = work_dir() + "/n1";
    const std::string p2 = work_dir() + "/n2";
    const std::string p3 = work_dir() + "/n3";
    REQUIRE(run_cli("spectrum --scenario " + scn + " --out " + p1).code == 0);
    REQUIRE(run_cli("spectrum --scenario " + scn + " --out " + p2).code == 0);
    REQUIRE(run_cli("spectrum --scenario " + scn + " --out " + p3 + " --seed 43")
                .code == 0);
    CHECK(slurp(p1 + "_full.csv") == slurp(p2 + "_full.csv"));
    CHECK(slurp(p1 + "_full.csv") != slurp(p3 + "_full.csv"));
}

TEST_CASE("exit-code contract") {
    SUBCASE("missing scenario file is an IO error") {
        const RunResult r = run_cli("shifts --scenario /nonexistent/x.json");
        CHECK(r.code == 3);
    }
    SUBCASE("unknown flag is a validation error") {
        const RunResult r = run_cli("shifts --scenario " + kFig1 + " --bogus");
        CHECK(r.code == 2);
    }
    SUBCASE("missing subcommand is a validation error") {
        const RunResult r = run_cli("");
        CHECK(r.code == 2);
    }
    SUBCASE("unwritable output path is an IO error") {
        const RunResult r = run_cli("spectrum --scenario " + kFig1 +
                                    " --out /nonexistent/dir/prefix");
        CHECK(r.code == 3);
    }
    SUBCASE("invalid scenario content is a validation error") {
        const std::string scn = write_file("invalid.json", R"({
            "config_version": 1,
            "drive": {"omega": 25.0, "h": 10.0, "delta": 0.0}
        })");
        const RunResult r = run_cli("shifts --scenario " + scn);
        CHECK(r.code == 2);
        CHECK(r.err.find("omega") != std::string::npos);
    }
    SUBCASE("help exits zero") {
        CHECK(run_cli("--help").code == 0);
    }
}

TEST_CASE("machine CSV carries 17 significant digits") {
    const std::string prefix = work_dir() + "/digits";
    REQUIRE(run_cli("spectrum --scenario " + kFig1 + " --mode full --out " + prefix)
                .code == 0);
    std::vector<double> om, v;
    load_csv(prefix + "_full.csv", om, v);

    // reprinting the parsed values at %.17g must reproduce the file exactly
    std::ifstream in(prefix + "_full.csv");
    std::string line;
    std::getline(in, line); // header
    std::size_t i = 0;
    bool all_match = true;
    while (std::getline(in, line) && i < om.size()) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", om[i], v[i]);
        all_match = all_match && line == buf;
        ++i;
    }
    CHECK(all_match);
    CHECK(i == om.size());
}
