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
#include <fstream>
#include <ostream>

#include "dimerqc/cli.hpp"
#include "dimerqc/dynamics.hpp"
#include "dimerqc/errors.hpp"
#include "dimerqc/gates.hpp"
#include "internal.hpp"

namespace dimerqc::cli {

namespace {

using detail::json;

struct Model {
    CMatrix h;
    std::vector<std::string> labels;
    std::string default_initial;
    double gate_duration = 0.0;  // used by "duration": "gate"
    double rabi = 0.0;           // coupling used by "pulse_area"
    JumpOperatorSet jumps;       // empty: master method unsupported
};

std::string column_label(std::string s) {
    for (char& c : s) {
        if (c == '-') c = 'm';
        if (c == '+') c = 'p';
    }
    return s;
}

DimerGeometry parse_dimer(const json& doc) {
    DimerGeometry g;
    if (!doc.contains("geometry")) return g;
    const json& geo = doc.at("geometry");
    detail::reject_unknown_keys(geo, {"zeta", "theta", "gamma", "xi"}, "config.geometry");
    g.zeta = detail::number_or(geo, "zeta", g.zeta, "config.geometry");
    g.theta = detail::number_or(geo, "theta", g.theta, "config.geometry");
    g.gamma = detail::number_or(geo, "gamma", g.gamma, "config.geometry");
    return g;
}

TwoDimerGeometry parse_two_dimer(const json& doc) {
    TwoDimerGeometry tg;
    tg.dimer = parse_dimer(doc);
    if (doc.contains("geometry")) tg.xi = detail::number_or(doc.at("geometry"), "xi", tg.xi, "config.geometry");
    return tg;
}

LaserField parse_field(const json& doc, const DimerGeometry& g, const std::string& default_detuning) {
    LaserField f;
    std::string detuning = default_detuning;
    if (doc.contains("field")) {
        const json& fj = doc.at("field");
        detail::reject_unknown_keys(fj, {"rabi", "phase", "detuning", "k_angle"}, "config.field");
        f.rabi_mag = detail::number_or(fj, "rabi", 0.0, "config.field");
        f.phase = detail::number_or(fj, "phase", 0.0, "config.field");
        f.k_angle = detail::number_or(fj, "k_angle", 0.0, "config.field");
        if (fj.contains("detuning")) {
            const json& d = fj.at("detuning");
            if (d.is_number()) {
                detuning.clear();
                f.detuning = d.get<double>();
            } else if (d.is_string()) {
                detuning = d.get<std::string>();
                if (detuning != "subradiant" && detuning != "superradiant")
                    throw ConfigError(
                        "config.field.detuning: expected a number, 'subradiant' or 'superradiant'");
            } else {
                throw ConfigError("config.field.detuning: expected a number or a string");
            }
        }
    }
    if (detuning == "subradiant") f.detuning = subradiant_resonance_detuning(f, g);
    if (detuning == "superradiant") f.detuning = superradiant_resonance_detuning(f, g);
    return f;
}

Model build_model(const std::string& name, const json& doc) {
    Model m;
    if (name == "dimer4" || name == "eff2minus" || name == "eff2plus") {
        if (doc.contains("omega_c") || doc.contains("mismatch") || doc.contains("field_offset"))
            throw ConfigError("config: omega_c, mismatch and field_offset apply to two-dimer models only");
        const DimerGeometry g = parse_dimer(doc);
        const bool plus = name == "eff2plus";
        const LaserField f = parse_field(doc, g, plus ? "superradiant" : "subradiant");
        const DriveCouplings c = drive_couplings(f, g);
        const RddiCoefficients r = rddi_coefficients(g);
        m.default_initial = "G";
        if (name == "dimer4") {
            m.h = full_dimer_hamiltonian(f, g);
            m.labels = {"G", "minus", "plus", "E"};
            m.jumps = jump_operators(g);
            m.rabi = std::abs(c.omega_minus);
        } else if (!plus) {
            m.h = effective_minus_hamiltonian(f, g).h;
            m.labels = {"G", "minus"};
            m.rabi = std::abs(c.omega_minus);
        } else {
            m.h = effective_plus_hamiltonian(f, g).h;
            m.labels = {"G", "plus"};
            CMatrix lower = CMatrix::Zero(2, 2);
            lower(0, 1) = 1.0;
            m.jumps = {{lower, r.gamma_plus(g.gamma), "G<-plus"}};
            m.rabi = std::abs(c.omega_plus);
        }
        m.gate_duration = m.rabi > 0.0 ? kHalfPi / m.rabi : 0.0;
        return m;
    }
    if (doc.contains("field"))
        throw ConfigError("config.field: two-dimer models take omega_c / mismatch instead");
    const TwoDimerGeometry tg = parse_two_dimer(doc);
    if (name == "twodimer_swap") {
        if (doc.contains("omega_c") || doc.contains("field_offset"))
            throw ConfigError("config: omega_c and field_offset apply to twodimer_cphase9 only");
        const double mismatch = detail::number_or(doc, "mismatch", 0.0, "config");
        m.h = swap_model_hamiltonian(tg, mismatch, true);
        m.labels = {"GG", "G-", "-G", "--"};
        m.default_initial = "-G";
        m.rabi = inter_dimer_coupling_minus(tg);
        m.gate_duration = kHalfPi / m.rabi;
        return m;
    }
    if (name == "twodimer_cphase9") {
        if (doc.contains("mismatch")) throw ConfigError("config.mismatch: applies to twodimer_swap only");
        const double omega_c = detail::number_or(doc, "omega_c", 50.0, "config");
        double offset = 0.0;
        m.gate_duration = 0.0;
        const bool calibrate = !doc.contains("field_offset") ||
                               (doc.at("field_offset").is_string() &&
                                doc.at("field_offset").get<std::string>() == "calibrated");
        if (calibrate) {
            const CphaseProtocol p = calibrate_cphase(tg, omega_c);
            offset = p.field_offset;
            m.gate_duration = p.duration;
        } else {
            offset = detail::number_at(doc, "field_offset", "config");
            m.gate_duration = kPi / (2.0 * omega_c * std::sin(0.5 * tg.xi));
        }
        m.h = cphase_model_hamiltonian(tg, omega_c, offset, true);
        m.labels.assign(kCphaseStateNames.begin(), kCphaseStateNames.end());
        m.default_initial = "GG";
        m.rabi = omega_c * tg.xi;
        return m;
    }
    std::string list;
    for (const auto& v : kSimulationModels) list += (list.empty() ? "" : ", ") + v;
    throw ConfigError("config.model: unknown model '" + name + "' (valid: " + list + ")");
}

int find_label(const Model& m, const std::string& label) {
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        if (m.labels[i] == label || column_label(m.labels[i]) == label) return static_cast<int>(i);
    std::string list;
    for (const auto& l : m.labels) list += (list.empty() ? "" : ", ") + column_label(l);
    throw ConfigError("config.initial: unknown state '" + label + "' (valid: " + list + ")");
}

}  // namespace

Trajectory run_simulation(const std::string& config_text) {
    const json doc = detail::parse_json(config_text, "config");
    detail::reject_unknown_keys(doc,
                                {"model", "geometry", "field", "omega_c", "field_offset", "mismatch",
                                 "initial", "duration", "pulse_area", "samples", "method",
                                 "format", "comment"},
                                "config");
    if (!doc.contains("model") || !doc.at("model").is_string())
        throw ConfigError("config.model: required string");
    const std::string name = doc.at("model").get<std::string>();
    if (detail::string_or(doc, "format", "csv", "config") != "csv")
        throw ConfigError("config.format: simulate writes csv only");

    Model m;
    try {
        m = build_model(name, doc);
    } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    const int dim = static_cast<int>(m.labels.size());
    const int init = find_label(m, detail::string_or(doc, "initial", m.default_initial, "config"));

    double duration = 0.0;
    if (doc.contains("duration") && doc.contains("pulse_area"))
        throw ConfigError("config: give either duration or pulse_area, not both");
    if (doc.contains("pulse_area")) {
        const double area = detail::number_at(doc, "pulse_area", "config");
        if (!(m.rabi > 0.0)) throw ConfigError("config.pulse_area: model has no drive coupling");
        duration = area / m.rabi;
    } else if (doc.contains("duration") && doc.at("duration").is_string()) {
        if (doc.at("duration").get<std::string>() != "gate")
            throw ConfigError("config.duration: expected a number or 'gate'");
        duration = m.gate_duration;
    } else {
        duration = detail::number_at(doc, "duration", "config");
    }
    if (!(duration >= 0.0) || !std::isfinite(duration))
        throw ConfigError("config.duration: must be finite and >= 0");

    const double samples_d = detail::number_or(doc, "samples", 201.0, "config");
    if (samples_d < 2.0 || samples_d > 1e6 || samples_d != std::floor(samples_d))
        throw ConfigError("config.samples: expected an integer in [2, 1e6]");
    const int samples = static_cast<int>(samples_d);
    const std::string method = detail::string_or(doc, "method", "conditional", "config");
    if (method != "conditional" && method != "master")
        throw ConfigError("config.method: expected 'conditional' or 'master'");
    if (method == "master" && m.jumps.empty())
        throw ConfigError("config.method: master evolution is available for dimer4 and eff2plus");

    Trajectory traj;
    traj.columns = {"t", "trace"};
    for (const auto& l : m.labels) traj.columns.push_back("pop_" + column_label(l));
    for (int a = 0; a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            const std::string pair = column_label(m.labels[a]) + "_" + column_label(m.labels[b]);
            traj.columns.push_back("re_" + pair);
            traj.columns.push_back("im_" + pair);
        }
    }
    const bool cphase = name == "twodimer_cphase9";
    if (cphase) traj.columns.push_back("cond_phase");

    std::vector<double> times(samples);
    for (int i = 0; i < samples; ++i) times[i] = duration * i / (samples - 1);

    auto emit = [&](double t, const CMatrix& rho, double cond) {
        std::vector<double> row{t, rho.trace().real()};
        for (int a = 0; a < dim; ++a) row.push_back(rho(a, a).real());
        for (int a = 0; a < dim; ++a) {
            for (int b = a + 1; b < dim; ++b) {
                row.push_back(rho(a, b).real());
                row.push_back(rho(a, b).imag());
            }
        }
        if (cphase) row.push_back(cond);
        traj.rows.push_back(std::move(row));
    };

    try {
        if (method == "master") {
            MasterOptions opt;
            opt.sample_times = times;
            const DensityEvolution ev = propagate_master(hermitian_part(m.h), m.jumps,
                                                         DensityMatrix::basis(dim, init), duration, opt);
            for (const auto& s : ev.samples) emit(s.t, s.rho, 0.0);
        } else {
            // Uniform grid: one short-time propagator applied repeatedly.
            const CMatrix step = matexp(m.h, duration / (samples - 1));
            CMatrix u = CMatrix::Identity(dim, dim);
            double unwrapped = 0.0;
            double previous = 0.0;
            for (int i = 0; i < samples; ++i) {
                if (i > 0) u = step * u;
                const CVector psi = u.col(init);
                double cond = 0.0;
                if (cphase) {
                    CMatrix block(4, 4);
                    for (int r = 0; r < 4; ++r)
                        for (int c = 0; c < 4; ++c)
                            block(r, c) = u(kCphaseComputational[r], kCphaseComputational[c]);
                    const double raw = conditional_phase(block);
                    double d = raw - previous;
                    d -= 2.0 * kPi * std::round(d / (2.0 * kPi));
                    unwrapped += i > 0 ? d : raw;
                    previous = raw;
                    cond = unwrapped;
                }
                emit(times[i], psi * psi.adjoint(), cond);
            }
        }
    } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return traj;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path, std::ostream& err) {
    Trajectory t;
    try {
        t = run_simulation(detail::read_file(config_path));
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        err << "error: cannot write '" << out_path << "'\n";
        return kExitUsage;
    }
    write_csv(t, out);
    return kExitOk;
}

double fit_rabi_frequency(const std::vector<double>& t, const std::vector<double>& population) {
    if (t.size() != population.size() || t.size() < 3)
        throw ConfigError("fit_rabi_frequency: need matching series of length >= 3");
    double top = 0.0;
    for (double p : population) top = std::max(top, p);
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        const double y0 = population[i - 1], y1 = population[i], y2 = population[i + 1];
        if (!(y1 >= y0 && y1 >= y2 && y1 > 0.5 * top)) continue;
        // Vertex of the parabola through three equally spaced samples.
        const double h = t[i] - t[i - 1];
        const double denom = y0 - 2.0 * y1 + y2;
        const double shift = denom != 0.0 ? 0.5 * h * (y0 - y2) / denom : 0.0;
        return kHalfPi / (t[i] + shift);
    }
    throw ConfigError("fit_rabi_frequency: no population maximum inside the trace");
}

}  // namespace dimerqc::cli
