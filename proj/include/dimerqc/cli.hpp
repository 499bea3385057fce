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

#ifndef DIMERQC_CLI_HPP
#define DIMERQC_CLI_HPP

#include <cstdio>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPhysics = 1;
inline constexpr int kExitUsage = 2;

/// Schema or usage problem; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Round-trip formatting with 17 significant digits ("nan", "inf", "-inf" for non-finite).
std::string format_double(double v);

// ---- reproduce ---------------------------------------------------------------

enum class Comparison {
    Relative,  // |computed - expected| <= tol |expected|
    Absolute,  // |computed - expected| <= tol
    AtLeast,   // computed >= expected
    AtMost,    // computed <= expected
};

struct ReproduceRow {
    std::string quantity;
    double computed = 0.0;
    double expected = 0.0;
    Comparison comparison = Comparison::Relative;
    double tolerance = 0.0;
    std::string paper_reference;
    std::optional<double> paper_value;
    std::optional<double> relative_deviation;  // vs paper_value
    bool pass = false;
    int criterion = 0;
};

/// All reproduce rows; tol_override replaces every relative/absolute tolerance.
std::vector<ReproduceRow> reproduce_rows(std::optional<double> tol_override = std::nullopt);

bool row_passes(const ReproduceRow& row);

int cmd_reproduce(bool json, std::optional<double> tol_override, std::ostream& out);

// ---- sweep -------------------------------------------------------------------

using ParamMap = std::map<std::string, double>;

struct Observable {
    std::string name;
    std::vector<std::string> parameters;
    ParamMap defaults;
    std::vector<std::string> outputs;
    std::function<std::vector<double>(const ParamMap&)> evaluate;
    /// Published anchor: reference string, output column and value, if the point matches.
    std::function<std::optional<std::tuple<std::string, std::string, double>>(const ParamMap&)>
        paper;
};

const std::vector<Observable>& observables();

struct SweepConfig {
    std::string observable;
    std::vector<std::pair<std::string, std::vector<double>>> grid;
    ParamMap fixed;
    std::string format = "csv";
};

/// Parses and validates a sweep config document (JSON text).
SweepConfig parse_sweep_config(const std::string& text);

/// Applies "name=value" overrides to the fixed parameters (removing grid axes).
void apply_overrides(SweepConfig& cfg, const std::vector<std::string>& overrides);

int worker_count();

/// Runs the sweep and streams rows to out in grid order. Returns the number
/// of flagged (non-finite or failed) rows.
int run_sweep(const SweepConfig& cfg, std::ostream& out, int workers);

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::vector<std::string>& overrides, std::ostream& err);

// ---- simulate ----------------------------------------------------------------

inline const std::vector<std::string> kSimulationModels = {
    "dimer4", "eff2minus", "eff2plus", "twodimer_swap", "twodimer_cphase9"};

struct Trajectory {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::vector<double> column(const std::string& name) const;
};

Trajectory run_simulation(const std::string& config_text);

int cmd_simulate(const std::string& config_path, const std::string& out_path, std::ostream& err);

void write_csv(const Trajectory& t, std::ostream& out);

/// Angular frequency of sin^2(w t) from the first maximum of a sampled trace.
double fit_rabi_frequency(const std::vector<double>& t, const std::vector<double>& population);

// ---- entry point -------------------------------------------------------------

int cmd_rddi(double zeta, double theta, bool asymptotic, std::ostream& out);

int run(int argc, char** argv);

}  // namespace dimerqc::cli

#endif  // DIMERQC_CLI_HPP
