// Copyright 2026 The dimerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "dimerqc/cli.hpp"
#include "dimerqc/gates.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path(DIMERQC_TEST_TMP) / "cli_scratch";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_config(const std::string& name, const std::string& text) {
    const fs::path p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

CliRun run(const std::string& args, const std::string& env = "") {
    const fs::path out = scratch("stdout.txt"), err = scratch("stderr.txt");
    const std::string cmd = env + " " + DIMERQC_BINARY + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

int column(const std::vector<std::string>& header, const std::string& name) {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    ADD_FAILURE() << "missing column " << name;
    return 0;
}

}  // namespace

TEST(CliReproduce, TableAndJsonAgree) {
    const CliRun table = run("reproduce");
    const CliRun js = run("reproduce --json");
    EXPECT_EQ(table.code, dimerqc::cli::kExitPhysics);  // the search optimum row fails
    EXPECT_EQ(js.code, table.code);
    const json rows = json::parse(js.out);
    ASSERT_EQ(rows.size(), dimerqc::cli::reproduce_rows().size());
    int failures = 0;
    for (const auto& row : rows) {
        const std::string q = row["quantity"];
        EXPECT_NE(table.out.find(q), std::string::npos) << q;
        if (!row["pass"].get<bool>()) ++failures;
    }
    EXPECT_EQ(failures, 1);
    EXPECT_NE(table.out.find(std::to_string(rows.size() - 1) + "/" + std::to_string(rows.size())),
              std::string::npos);
}

TEST(CliReproduce, ZeroToleranceFailsPaperComparisons) {
    const CliRun r = run("reproduce --json --tol 0");
    EXPECT_EQ(r.code, dimerqc::cli::kExitPhysics);
    int failures = 0;
    for (const auto& row : json::parse(r.out))
        if (!row["pass"].get<bool>()) ++failures;
    EXPECT_GT(failures, 10);
}

TEST(CliSweep, SinglePointMatchesReproduceRow) {
    const fs::path cfg = write_config("one.json", R"({"observable": "rotation_optimum",
        "grid": {"zeta": 0.033}})");
    const fs::path out = scratch("one.csv");
    ASSERT_EQ(run("sweep --config " + cfg.string() + " --out " + out.string()).code, 0);
    const auto rows = read_csv(out);
    ASSERT_EQ(rows.size(), 2u);
    const double closed = std::stod(rows[1][column(rows[0], "omega_closed")]);
    double expected = 0.0;
    for (const auto& row : dimerqc::cli::reproduce_rows())
        if (row.quantity == "Omega_r*/gamma (closed form)") expected = row.computed;
    EXPECT_EQ(closed, expected);
}

TEST(CliSweep, MinimumErrorScalesAsZetaCubed) {
    const fs::path cfg = write_config("slope.json", R"({"observable": "rotation_optimum",
        "grid": {"zeta": {"start": 0.005, "stop": 0.05, "num": 12, "scale": "log"}}})");
    const fs::path out = scratch("slope.csv");
    ASSERT_EQ(run("sweep --config " + cfg.string() + " --out " + out.string()).code, 0);
    const auto rows = read_csv(out);
    ASSERT_EQ(rows.size(), 13u);
    const int z = column(rows[0], "zeta"), p = column(rows[0], "total");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = 12;
    for (size_t i = 1; i < rows.size(); ++i) {
        const double x = std::log(std::stod(rows[i][z])), y = std::log(std::stod(rows[i][p]));
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    EXPECT_NEAR((n * sxy - sx * sy) / (n * sxx - sx * sx), 3.0, 0.01);
}

TEST(CliSweep, OutputIndependentOfWorkerCount) {
    const fs::path cfg = write_config("grid.json", R"({"observable": "swap",
        "grid": {"mismatch": {"start": 0, "stop": 3, "num": 7}, "half": [0, 1]}})");
    const fs::path a = scratch("w1.csv"), b = scratch("w4.csv");
    ASSERT_EQ(run("sweep --config " + cfg.string() + " --out " + a.string(), "DIMERQC_WORKERS=1").code, 0);
    ASSERT_EQ(run("sweep --config " + cfg.string() + " --out " + b.string(), "DIMERQC_WORKERS=4").code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(read_csv(a).size(), 15u);
}

TEST(CliSweep, OverrideAndJsonFormat) {
    const fs::path cfg = write_config("ovr.json", R"({"observable": "rddi", "grid": {"zeta": 0.033}})");
    const fs::path out = scratch("ovr.json.out");
    ASSERT_EQ(run("sweep --config " + cfg.string() + " --out " + out.string() +
                  " --set zeta=0.05 --set format=json")
                  .code,
              0);
    const json rows = json::parse(slurp(out));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0]["zeta"].get<double>(), 0.05);
}

TEST(CliSweep, UnknownKeyIsUsageError) {
    const fs::path cfg = write_config("bad.json", R"({"observable": "rddi", "grid": {"zeta": 0.033},
        "tolerance": 3})");
    const CliRun r = run("sweep --config " + cfg.string() + " --out " + scratch("bad.csv").string());
    EXPECT_EQ(r.code, dimerqc::cli::kExitUsage);
    EXPECT_NE(r.err.find("tolerance"), std::string::npos) << r.err;
    const fs::path axis = write_config("badaxis.json", R"({"observable": "rddi", "grid": {"omega": 1}})");
    const CliRun s = run("sweep --config " + axis.string() + " --out " + scratch("bad.csv").string());
    EXPECT_EQ(s.code, dimerqc::cli::kExitUsage);
    EXPECT_NE(s.err.find("omega"), std::string::npos) << s.err;
}

TEST(CliSweep, FailedPointsAreFlagged) {
    const fs::path cfg = write_config("flag.json", R"({"observable": "rotation_budget",
        "grid": {"zeta": [0.033, -1.0]}})");
    const fs::path out = scratch("flag.csv");
    const CliRun r = run("sweep --config " + cfg.string() + " --out " + out.string());
    EXPECT_EQ(r.code, 0);  // regime probes are expected; the run continues
    EXPECT_NE(r.err.find("1 row(s) flagged"), std::string::npos) << r.err;
    const auto rows = read_csv(out);
    ASSERT_EQ(rows.size(), 3u);
    const int status = column(rows[0], "status");
    EXPECT_EQ(rows[1][status], "ok");
    EXPECT_EQ(rows[2][status].rfind("error", 0), 0u) << rows[2][status];
}

TEST(CliSimulate, EffectiveRabiFrequency) {
    const fs::path cfg = write_config("rabi.json", R"({"model": "eff2minus",
        "field": {"rabi": 300, "detuning": "subradiant"}, "duration": 0.5, "samples": 2001})");
    const fs::path out = scratch("rabi.csv");
    ASSERT_EQ(run("simulate --config " + cfg.string() + " --out " + out.string()).code, 0);
    const auto rows = read_csv(out);
    std::vector<double> t, pop;
    for (size_t i = 1; i < rows.size(); ++i) {
        t.push_back(std::stod(rows[i][column(rows[0], "t")]));
        pop.push_back(std::stod(rows[i][column(rows[0], "pop_minus")]));
    }
    EXPECT_NEAR(dimerqc::cli::fit_rabi_frequency(t, pop), 7.0000394968657396, 7e-3);
}

TEST(CliSimulate, ZeroDriveIsFlat) {
    const fs::path cfg = write_config("flat.json", R"({"model": "dimer4",
        "field": {"rabi": 0}, "initial": "G", "duration": 5, "samples": 11})");
    const fs::path out = scratch("flat.csv");
    ASSERT_EQ(run("simulate --config " + cfg.string() + " --out " + out.string()).code, 0);
    const auto rows = read_csv(out);
    for (size_t i = 1; i < rows.size(); ++i) {
        // Scaling-and-squaring roundoff only; |G> is decoupled.
        EXPECT_NEAR(std::stod(rows[i][column(rows[0], "pop_G")]), 1.0, 1e-11);
        EXPECT_NEAR(std::stod(rows[i][column(rows[0], "trace")]), 1.0, 1e-11);
        EXPECT_EQ(std::stod(rows[i][column(rows[0], "pop_minus")]), 0.0);
    }
}

TEST(CliSimulate, ConditionalPhaseReachesPiAtGateTime) {
    const fs::path cfg = write_config("cz.json", R"({"model": "twodimer_cphase9", "omega_c": 50,
        "field_offset": "calibrated", "duration": 0.6, "samples": 1201})");
    const fs::path out = scratch("cz.csv");
    ASSERT_EQ(run("simulate --config " + cfg.string() + " --out " + out.string()).code, 0);
    const auto rows = read_csv(out);
    const int t = column(rows[0], "t"), phase = column(rows[0], "cond_phase");
    double crossing = -1.0;
    for (size_t i = 1; i < rows.size(); ++i)
        if (std::abs(std::stod(rows[i][phase])) >= M_PI) {
            crossing = std::stod(rows[i][t]);
            break;
        }
    const double gate = dimerqc::calibrate_cphase(dimerqc::TwoDimerGeometry{}, 50.0).duration;
    EXPECT_NEAR(crossing, gate, 0.02 * gate);
}

TEST(CliSimulate, MasterMethodKeepsTrace) {
    const fs::path cfg = write_config("master.json", R"({"model": "dimer4", "method": "master",
        "field": {"rabi": 3, "detuning": "superradiant"}, "initial": "minus", "duration": 20,
        "samples": 41})");
    const fs::path out = scratch("master.csv");
    ASSERT_EQ(run("simulate --config " + cfg.string() + " --out " + out.string()).code, 0);
    const auto rows = read_csv(out);
    for (size_t i = 1; i < rows.size(); ++i)
        EXPECT_NEAR(std::stod(rows[i][column(rows[0], "trace")]), 1.0, 1e-8);
}

TEST(CliSimulate, UnknownModelListsValidOnes) {
    const fs::path cfg = write_config("nomodel.json", R"({"model": "qutrit"})");
    const CliRun r = run("simulate --config " + cfg.string() + " --out " + scratch("x.csv").string());
    EXPECT_EQ(r.code, dimerqc::cli::kExitUsage);
    for (const auto& m : dimerqc::cli::kSimulationModels)
        EXPECT_NE(r.err.find(m), std::string::npos) << m;
}

TEST(CliRddi, PrintsCoefficientsAndRejectsBadGeometry) {
    const CliRun r = run("rddi --zeta 0.033");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("20858.5"), std::string::npos) << r.out;
    EXPECT_EQ(run("rddi --zeta 0.033 --theta 1 --asymptotic").code, dimerqc::cli::kExitUsage);
    EXPECT_EQ(run("rddi --zeta -1").code, dimerqc::cli::kExitUsage);
    EXPECT_EQ(run("frobnicate").code, dimerqc::cli::kExitUsage);
    EXPECT_EQ(run("sweep --config /nonexistent.json --out x.csv").code, dimerqc::cli::kExitUsage);
}

TEST(CliFormat, RoundTripDoubles) {
    for (double x : {0.1, 1.0 / 3.0, 20858.50122454992, 1e-300})
        EXPECT_EQ(std::stod(dimerqc::cli::format_double(x)), x);
    EXPECT_EQ(dimerqc::cli::format_double(NAN), "nan");
}
