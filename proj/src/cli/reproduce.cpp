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

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dimerqc/cli.hpp"
#include "dimerqc/dynamics.hpp"
#include "dimerqc/gates.hpp"
#include "internal.hpp"

namespace dimerqc::cli {

namespace {

ReproduceRow make_row(int criterion, std::string quantity, double computed, double expected,
                      Comparison cmp, double tol, std::string reference,
                      std::optional<double> paper) {
    ReproduceRow r;
    r.criterion = criterion;
    r.quantity = std::move(quantity);
    r.computed = computed;
    r.expected = expected;
    r.comparison = cmp;
    r.tolerance = tol;
    r.paper_reference = std::move(reference);
    r.paper_value = paper;
    if (paper && *paper != 0.0) r.relative_deviation = (computed - *paper) / *paper;
    return r;
}

// Least-squares slope of log y against log x at n log-spaced points on [lo, hi].
template <class F>
double loglog_slope(F&& f, double lo, double hi, int n = 11) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1);
        const double y = std::log(std::abs(f(std::exp(x))));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Effective-model rotation infidelities against their budgets on a 4 x 5 grid.
int budget_violations() {
    int violations = 0;
    for (double zeta : {0.02, 0.03, 0.04, 0.05}) {
        DimerGeometry g;
        g.zeta = zeta;
        const double w_star = 1.0 / (3.0 * zeta * zeta);
        for (double scale : {0.3, 0.5, 1.0, 2.0, 3.0}) {
            LaserField f;
            f.rabi_mag = scale * w_star;
            f.detuning = subradiant_resonance_detuning(f, g);
            const GateReport r = rotate_qubit(g, f, kHalfPi, RotationModel::Effective);
            if (1.0 - r.fidelity_numeric > r.budget.total) ++violations;
        }
    }
    return violations;
}

double rabi_fit_error() {
    const std::string cfg = R"({"model": "eff2minus", "field": {"rabi": 300},
                               "pulse_area": 6.283185307179586, "samples": 2001})";
    const Trajectory t = run_simulation(cfg);
    const double fitted = fit_rabi_frequency(t.column("t"), t.column("pop_minus"));
    DimerGeometry g;
    LaserField f;
    f.rabi_mag = 300.0;
    const double exact = std::abs(drive_couplings(f, g).omega_minus);
    return std::abs(fitted - exact) / exact;
}

double steady_state_error() {
    DimerGeometry g;
    LaserField f;
    f.rabi_mag = 3.0;
    f.detuning = superradiant_resonance_detuning(f, g);
    const EffectiveHamiltonian eff = effective_plus_hamiltonian(f, g);
    const double gamma_plus = rddi_coefficients(g).gamma_plus(g.gamma);
    CMatrix lower = CMatrix::Zero(2, 2);
    lower(0, 1) = 1.0;
    const SteadyState ss = steady_state(hermitian_part(eff.h), {{lower, gamma_plus, "G<-plus"}});
    const double formula =
        superradiant_steady_population(drive_couplings(f, g).omega_plus, gamma_plus);
    return std::abs(ss.rho.populations()[1] - formula);
}

struct LindbladChecks {
    double trace_drift = 0.0;
    double hermiticity = 0.0;
    double min_eigenvalue = 0.0;
};

LindbladChecks lindblad_checks() {
    DimerGeometry g;
    const LaserField f = probe_field(g, 3.0);
    const CMatrix h = hermitian_part(full_dimer_hamiltonian(f, g));
    MasterOptions opt;
    for (int i = 0; i <= 20; ++i) opt.sample_times.push_back(i);
    const DensityEvolution ev =
        propagate_master(h, jump_operators(g), DensityMatrix::basis(4, kMinus), 20.0, opt);
    LindbladChecks c;
    c.min_eigenvalue = 1.0;
    for (const auto& s : ev.samples) {
        c.trace_drift = std::max(c.trace_drift, std::abs(s.rho.trace().real() - 1.0));
        c.hermiticity = std::max(c.hermiticity, (s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff());
        c.min_eigenvalue = std::min(c.min_eigenvalue, min_hermitian_eigenvalue(hermitian_part(s.rho)));
    }
    return c;
}

std::string comparison_text(const ReproduceRow& r) {
    std::ostringstream s;
    switch (r.comparison) {
        case Comparison::Relative: s << "rel " << r.tolerance; break;
        case Comparison::Absolute: s << "abs " << r.tolerance; break;
        case Comparison::AtLeast: s << ">= expected"; break;
        case Comparison::AtMost: s << "<= expected"; break;
    }
    return s.str();
}

}  // namespace

bool row_passes(const ReproduceRow& r) {
    if (!std::isfinite(r.computed)) return false;
    switch (r.comparison) {
        case Comparison::Relative:
            return std::abs(r.computed - r.expected) <= r.tolerance * std::abs(r.expected);
        case Comparison::Absolute: return std::abs(r.computed - r.expected) <= r.tolerance;
        case Comparison::AtLeast: return r.computed >= r.expected;
        case Comparison::AtMost: return r.computed <= r.expected;
    }
    return false;
}

std::vector<ReproduceRow> reproduce_rows(std::optional<double> tol_override) {
    using C = Comparison;
    std::vector<ReproduceRow> rows;
    const DimerGeometry g;  // zeta = 0.033, theta = pi/2
    const TwoDimerGeometry tg;
    const RddiCoefficients rddi = rddi_coefficients(g);

    rows.push_back(make_row(1, "Delta/gamma", rddi.delta, 20859.4, C::Relative, 1e-3,
                            "Delta ~ 2e4 gamma", 2e4));
    rows.push_back(make_row(2, "Gamma_-/gamma", rddi.gamma_minus(g.gamma), 2.18e-4, C::Relative,
                            1e-2, "Gamma_- ~ 2e-4 gamma", 2e-4));

    const ErrorBudget rot = optimize_rotation_drive(g);
    rows.push_back(make_row(3, "Omega_r*/gamma (closed form)", *rot.optimal_drive, 306.1,
                            C::Relative, 1e-3, "Omega_r/gamma ~ 300", 300.0));
    rows.push_back(make_row(3, "Omega_r*/gamma (golden section)", *rot.optimal_drive_search, 306.1,
                            C::Relative, 1e-3, "Omega_r/gamma ~ 300", 300.0));
    rows.push_back(make_row(4, "P_qubit_min", rot.total, 8.0 / 3.0 * std::pow(g.zeta, 3),
                            C::Relative, 1e-2, "P_qubit <= 1e-4 (2.65 zeta^3)",
                            kPaperRotationMinPrefactor * std::pow(g.zeta, 3)));
    rows.push_back(make_row(4, "P_atom (single atom, Omega = 300 gamma)",
                            single_atom_flip_error(300.0), 5.2e-3, C::Relative, 1e-2,
                            "P_atom ~ 5e-3", 5e-3));

    LaserField drive;
    drive.rabi_mag = 300.0;
    RamanScheme raman;
    raman.omega_r = 300.0;
    const ErrorBudget rr =
        raman_rotation_budget(raman, std::abs(drive_couplings(drive, g).omega_minus));
    rows.push_back(make_row(5, "delta_e/gamma_e", rr.values.at("delta_e"), 1.29e4, C::Relative,
                            1e-2, "delta_e ~ 1.3e4 gamma_e", 1.3e4));
    rows.push_back(make_row(5, "P_e_sp", rr.total, 1.22e-4, C::Relative, 1e-2,
                            "P_e_sp ~ 1.2e-4", 1.2e-4));

    const ReadoutReport ro = readout_report(g, 3.0, 0.3);
    rows.push_back(make_row(6, "readout reliability", ro.reliability_closed_form, 0.9839,
                            C::Absolute, 1e-4, "reliability ~ 98%", 0.98));

    const ErrorBudget sw = swap_error_budget(tg);
    rows.push_back(make_row(7, "F_swap", 1.0 - sw.total, 0.99581, C::Absolute, 1e-4,
                            "F_swap >= 0.996", 0.996));
    rows.push_back(make_row(7, "T_swap*gamma", sw.values.at("t_swap"), kPi / (2.0 * 0.16335),
                            C::Relative, 1e-3, "T_swap = pi/(2 Delta_AB^(-))", std::nullopt));

    const ErrorBudget cp = optimize_cphase_drive(tg.xi);
    rows.push_back(make_row(8, "Omega_c*/gamma", *cp.optimal_drive, 50.0, C::Relative, 1e-12,
                            "Omega_c/gamma = (2 xi^2)^-1", 50.0));
    rows.push_back(make_row(8, "P_cphase_min", cp.total, 16.0 / 3.0 * std::pow(tg.xi, 3),
                            C::Relative, 1e-2, "P_cphase_min ~ 5.3 xi^3",
                            kPaperCphaseMinPrefactor * std::pow(tg.xi, 3)));
    const GateReport cz = cphase_gate(tg, 50.0);
    rows.push_back(make_row(8, "F_cphase (9-level dynamics)", cz.fidelity_numeric, 0.994,
                            C::AtLeast, 0.0, "F_cphase >= 0.995", 0.995));

    rows.push_back(make_row(9, "T_swap/T_cphase", gate_time_ratio(g.zeta, tg.xi, 50.0), 15.3,
                            C::Relative, 1e-2, "CPHASE 15 times faster than SWAP", 15.0));

    RamanScheme rc;
    rc.omega_c = 50.0;
    rc.xi = 0.1;
    rc.delta_e_c = 5.0 * 3.0 / (4.0 * std::pow(rc.xi, 3));
    const RamanCphaseBudget rcb = raman_cphase_budget(rc);
    rows.push_back(make_row(10, "P_cphase^(R)", rcb.p_error, 8.38e-3, C::Relative, 1e-2,
                            "P^(R) ~ 8e-3", 8e-3));
    rows.push_back(make_row(10, "T^(R)/T_cphase", rcb.time_ratio_vs_dimer, 18.75, C::Relative,
                            1e-2, "T^(R)/T ~ 20", 20.0));

    rows.push_back(make_row(11, "budget violations (20 effective-model rotations)",
                            budget_violations(), 0.0, C::AtMost, 0.0,
                            "error probabilities are upper bounds", std::nullopt));
    rows.push_back(make_row(11, "Rabi frequency fit rel. error", rabi_fit_error(), 1e-3, C::AtMost,
                            0.0, "Omega_-^(r) Rabi oscillation", std::nullopt));
    rows.push_back(make_row(11, "steady-state rho_++ error", steady_state_error(), 1e-6,
                            C::AtMost, 0.0, "rho_++ = |Omega_+|^2/((Gamma_+/2)^2 + 2|Omega_+|^2)",
                            std::nullopt));
    const LindbladChecks lc = lindblad_checks();
    rows.push_back(make_row(11, "Lindblad trace drift", lc.trace_drift, kTraceDriftBound,
                            C::AtMost, 0.0, "trace preservation", std::nullopt));
    rows.push_back(make_row(11, "Lindblad Hermiticity defect", lc.hermiticity, 1e-10, C::AtMost,
                            0.0, "Hermiticity", std::nullopt));
    rows.push_back(make_row(11, "Lindblad min eigenvalue", lc.min_eigenvalue, -kPositivityBound,
                            C::AtLeast, 0.0, "positivity", std::nullopt));

    auto delta_of = [](double z) {
        DimerGeometry q;
        q.zeta = z;
        return rddi_coefficients(q).delta;
    };
    auto gamma_minus_of = [](double z) {
        DimerGeometry q;
        q.zeta = z;
        return rddi_coefficients(q).gamma_minus(q.gamma);
    };
    auto p_min_of = [](double z) {
        DimerGeometry q;
        q.zeta = z;
        return optimize_rotation_drive(q).total;
    };
    rows.push_back(make_row(12, "slope d log Delta / d log zeta",
                            loglog_slope(delta_of, 0.005, 0.05), -3.0, C::Absolute, 0.01,
                            "Delta ~ 3 gamma/(4 zeta^3)", std::nullopt));
    rows.push_back(make_row(12, "slope d log Gamma_- / d log zeta",
                            loglog_slope(gamma_minus_of, 0.005, 0.05), 2.0, C::Absolute, 0.01,
                            "Gamma_- ~ gamma zeta^2/5", std::nullopt));
    rows.push_back(make_row(12, "slope d log P_min / d log zeta",
                            loglog_slope(p_min_of, 0.005, 0.05), 3.0, C::Absolute, 0.01,
                            "P_qubit_min ~ zeta^3", std::nullopt));

    for (auto& r : rows) {
        if (tol_override &&
            (r.comparison == Comparison::Relative || r.comparison == Comparison::Absolute))
            r.tolerance = *tol_override;
        r.pass = row_passes(r);
    }
    return rows;
}

int cmd_reproduce(bool json, std::optional<double> tol_override, std::ostream& out) {
    const std::vector<ReproduceRow> rows = reproduce_rows(tol_override);
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;

    if (json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json o;
            o["criterion"] = r.criterion;
            o["quantity"] = r.quantity;
            o["computed"] = r.computed;
            o["expected"] = r.expected;
            o["check"] = comparison_text(r);
            o["paper_reference"] = r.paper_reference;
            o["paper_value"] = r.paper_value ? nlohmann::ordered_json(*r.paper_value) : nullptr;
            o["relative_deviation"] =
                r.relative_deviation ? nlohmann::ordered_json(*r.relative_deviation) : nullptr;
            o["pass"] = r.pass;
            arr.push_back(o);
        }
        out << arr.dump(2) << "\n";
    } else {
        auto fmt = [](double v, int digits) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.*g", digits, v);
            return std::string(buf);
        };
        out << std::left << std::setw(4) << "#" << std::setw(50) << "quantity" << std::setw(20)
            << "computed" << std::setw(14) << "expected" << std::setw(14) << "check"
            << std::setw(10) << "paper" << std::setw(12) << "deviation" << "result  reference\n";
        for (const auto& r : rows) {
            out << std::left << std::setw(4) << r.criterion << std::setw(50) << r.quantity
                << std::setw(20) << fmt(r.computed, 12) << std::setw(14) << fmt(r.expected, 6)
                << std::setw(14) << comparison_text(r) << std::setw(10)
                << (r.paper_value ? fmt(*r.paper_value, 4) : "-") << std::setw(12)
                << (r.relative_deviation ? fmt(*r.relative_deviation, 3) : "-") << std::setw(8)
                << (r.pass ? "PASS" : "FAIL") << r.paper_reference << "\n";
        }
        std::size_t passed = 0;
        for (const auto& r : rows) passed += r.pass ? 1 : 0;
        out << passed << "/" << rows.size() << " rows pass\n";
    }
    return all ? kExitOk : kExitPhysics;
}

}  // namespace dimerqc::cli
