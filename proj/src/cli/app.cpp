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

#include <iostream>

#include "CLI11.hpp"
#include "dimerqc/cli.hpp"
#include "dimerqc/errors.hpp"
#include "dimerqc/rddi.hpp"

namespace dimerqc::cli {

int cmd_rddi(double zeta, double theta, bool asymptotic, std::ostream& out) {
    DimerGeometry g;
    g.zeta = zeta;
    g.theta = theta;
    const RddiCoefficients c = asymptotic ? rddi_asymptotic(g) : rddi_coefficients(g);
    out << "zeta," << format_double(zeta) << "\n"
        << "theta," << format_double(theta) << "\n"
        << "form," << (asymptotic ? "asymptotic" : "exact") << "\n"
        << "delta," << format_double(c.delta) << "\n"
        << "gamma12," << format_double(c.gamma12) << "\n"
        << "gamma_plus," << format_double(c.gamma_plus(g.gamma)) << "\n"
        << "gamma_minus," << format_double(c.gamma_minus(g.gamma)) << "\n";
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"dimerqc: dipole-dipole coupled dimer qubits"};
    app.require_subcommand(1);

    auto* reproduce = app.add_subcommand("reproduce", "check the reference operating points");
    bool json = false;
    double tol = -1.0;
    reproduce->add_flag("--json", json, "emit a JSON array instead of a table");
    reproduce->add_option("--tol", tol, "override every relative/absolute tolerance")
        ->check(CLI::NonNegativeNumber);

    auto* sweep = app.add_subcommand("sweep", "evaluate an observable over a parameter grid");
    std::string sweep_config, sweep_out;
    std::vector<std::string> overrides;
    sweep->add_option("--config", sweep_config, "sweep config (JSON)")->required();
    sweep->add_option("--out", sweep_out, "output file")->required();
    sweep->add_option("--set", overrides, "override a parameter, name=value (repeatable)");

    auto* simulate = app.add_subcommand("simulate", "write a trajectory CSV");
    std::string sim_config, sim_out;
    simulate->add_option("--config", sim_config, "simulation config (JSON)")->required();
    simulate->add_option("--out", sim_out, "output CSV")->required();

    auto* rddi = app.add_subcommand("rddi", "print RDDI coefficients");
    double zeta = 0.0, theta = kHalfPi;
    bool exact = false, asymptotic = false;
    rddi->add_option("--zeta", zeta, "q r12")->required();
    rddi->add_option("--theta", theta, "angle between dipole and r12 (rad)");
    auto* f_exact = rddi->add_flag("--exact", exact, "exact coefficients (default)");
    auto* f_asym = rddi->add_flag("--asymptotic", asymptotic, "small-zeta forms");
    f_exact->excludes(f_asym);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*reproduce)
            return cmd_reproduce(json, tol >= 0.0 ? std::optional<double>(tol) : std::nullopt,
                                 std::cout);
        if (*sweep) return cmd_sweep(sweep_config, sweep_out, overrides, std::cerr);
        if (*simulate) return cmd_simulate(sim_config, sim_out, std::cerr);
        if (*rddi) return cmd_rddi(zeta, theta, asymptotic, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::UnsupportedGeometry ||
                       e.kind() == ErrorKind::InvalidGeometry
                   ? kExitUsage
                   : kExitPhysics;
    }
    return kExitUsage;
}

}  // namespace dimerqc::cli
