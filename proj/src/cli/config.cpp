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
#include <set>
#include <sstream>
#include <tuple>

#include "dimerqc/cli.hpp"
#include "dimerqc/gates.hpp"
#include "internal.hpp"

namespace dimerqc::cli {

namespace {

using detail::json;
using Anchor = std::optional<std::tuple<std::string, std::string, double>>;

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

DimerGeometry dimer_of(const ParamMap& p) {
    DimerGeometry g;
    g.zeta = p.at("zeta");
    g.theta = p.count("theta") ? p.at("theta") : kHalfPi;
    g.gamma = p.count("gamma") ? p.at("gamma") : 1.0;
    return g;
}

TwoDimerGeometry two_dimer_of(const ParamMap& p) {
    TwoDimerGeometry tg;
    tg.dimer = dimer_of(p);
    tg.xi = p.at("xi");
    return tg;
}

std::vector<Observable> build_observables() {
    std::vector<Observable> obs;

    obs.push_back({"rddi",
                   {"zeta", "theta", "gamma"},
                   {{"zeta", 0.033}, {"theta", kHalfPi}, {"gamma", 1.0}},
                   {"delta", "gamma12", "gamma_plus", "gamma_minus"},
                   [](const ParamMap& p) -> std::vector<double> {
                       const DimerGeometry g = dimer_of(p);
                       const RddiCoefficients c = rddi_coefficients(g);
                       return {c.delta, c.gamma12, c.gamma_plus(g.gamma), c.gamma_minus(g.gamma)};
                   },
                   [](const ParamMap& p) -> Anchor {
                       if (near(p.at("zeta"), 0.033) && near(p.at("theta"), kHalfPi))
                           return std::make_tuple("Delta ~ 2e4 gamma", "delta", 2e4);
                       return std::nullopt;
                   }});

    obs.push_back({"rotation_budget",
                   {"zeta", "omega_r", "gamma"},
                   {{"zeta", 0.033}, {"omega_r", 300.0}, {"gamma", 1.0}},
                   {"p_spontaneous", "p_transfer", "total"},
                   [](const ParamMap& p) -> std::vector<double> {
                       const ErrorBudget b = rotation_error_budget(dimer_of(p), p.at("omega_r"));
                       return {b.component("spontaneous"), b.component("transfer"), b.total};
                   },
                   [](const ParamMap& p) -> Anchor {
                       if (near(p.at("zeta"), 0.033) && near(p.at("omega_r") / p.at("gamma"), 300.0))
                           return std::make_tuple("P_qubit <= 1e-4", "total", 1e-4);
                       return std::nullopt;
                   }});

    obs.push_back({"rotation_optimum",
                   {"zeta", "gamma"},
                   {{"zeta", 0.033}, {"gamma", 1.0}},
                   {"omega_closed", "omega_search", "total", "p_min"},
                   [](const ParamMap& p) -> std::vector<double> {
                       const ErrorBudget b = optimize_rotation_drive(dimer_of(p));
                       return {*b.optimal_drive, *b.optimal_drive_search, b.total,
                               b.values.at("p_min")};
                   },
                   [](const ParamMap& p) -> Anchor {
                       if (near(p.at("zeta"), 0.033))
                           return std::make_tuple("Omega_r/gamma ~ 300", "omega_closed", 300.0);
                       return std::nullopt;
                   }});

    obs.push_back({"readout",
                   {"zeta", "omega_p", "eta", "t_pr", "k_angle", "gamma"},
                   {{"zeta", 0.033}, {"omega_p", 3.0}, {"eta", 0.3}, {"t_pr", 0.0},
                    {"k_angle", 0.0}, {"gamma", 1.0}},
                   {"p_g", "p_minus", "gamma_mp", "t_pr_used", "reliability",
                    "reliability_closed_form", "init_time"},
                   [](const ParamMap& p) -> std::vector<double> {
                       const double t = p.at("t_pr");
                       const ReadoutReport r = readout_report(
                           dimer_of(p), p.at("omega_p"), p.at("eta"),
                           t > 0.0 ? std::optional<double>(t) : std::nullopt, p.at("k_angle"));
                       return {r.p_g_fl,      r.p_minus_fl, r.gamma_mp, r.t_pr, r.reliability,
                               r.reliability_closed_form, r.init_time};
                   },
                   [](const ParamMap& p) -> Anchor {
                       if (near(p.at("zeta"), 0.033) && near(p.at("omega_p"), 3.0) &&
                           near(p.at("eta"), 0.3) && near(p.at("k_angle"), 0.0))
                           return std::make_tuple("reliability ~ 98%", "reliability_closed_form",
                                                  0.98);
                       return std::nullopt;
                   }});

    obs.push_back({"swap",
                   {"zeta", "xi", "mismatch", "half", "gamma"},
                   {{"zeta", 0.033}, {"xi", 0.1}, {"mismatch", 0.0}, {"half", 0.0}, {"gamma", 1.0}},
                   {"duration", "fidelity_analytic", "fidelity_numeric", "error_probability",
                    "max_transfer"},
                   [](const ParamMap& p) -> std::vector<double> {
                       const GateReport r = swap_gate(
                           two_dimer_of(p), p.at("half") != 0.0 ? SwapFraction::Half : SwapFraction::Full,
                           p.at("mismatch"));
                       return {r.duration, r.fidelity_analytic, r.fidelity_numeric,
                               r.error_probability_numeric, r.diagnostics.at("max_transfer")};
                   },
                   [](const ParamMap& p) -> Anchor {
                       if (near(p.at("xi"), 0.1) && p.at("half") == 0.0)
                           return std::make_tuple("F_swap >= 0.996", "fidelity_analytic", 0.996);
                       return std::nullopt;
                   }});

    obs.push_back({"cphase_budget",
                   {"xi", "omega_c", "gamma"},
                   {{"xi", 0.1}, {"omega_c", 50.0}, {"gamma", 1.0}},
                   {"p_spontaneous", "p_transfer", "p_transfer_spectator", "total",
                    "omega_closed", "omega_search"},
                   [](const ParamMap& p) -> std::vector<double> {
                       const ErrorBudget b =
                           cphase_error_budget(p.at("xi"), p.at("omega_c"), p.at("gamma"));
                       return {b.component("spontaneous"), b.component("transfer"),
                               b.component("transfer_spectator"), b.total, *b.optimal_drive,
                               *b.optimal_drive_search};
                   },
                   [](const ParamMap& p) -> Anchor {
                       if (near(p.at("xi"), 0.1) && near(p.at("omega_c") / p.at("gamma"), 50.0))
                           return std::make_tuple("P_cphase_min ~ 5.3 xi^3", "total", 5.3e-3);
                       return std::nullopt;
                   }});

    obs.push_back({"gate_time_ratio",
                   {"zeta", "xi", "omega_c", "gamma"},
                   {{"zeta", 0.033}, {"xi", 0.1}, {"omega_c", 50.0}, {"gamma", 1.0}},
                   {"ratio"},
                   [](const ParamMap& p) -> std::vector<double> {
                       return {gate_time_ratio(p.at("zeta"), p.at("xi"), p.at("omega_c"),
                                               p.at("gamma"))};
                   },
                   [](const ParamMap& p) -> Anchor {
                       if (near(p.at("zeta"), 0.033) && near(p.at("xi"), 0.1) &&
                           near(p.at("omega_c") / p.at("gamma"), 50.0))
                           return std::make_tuple("CPHASE 15 times faster than SWAP", "ratio", 15.0);
                       return std::nullopt;
                   }});

    obs.push_back({"inhomogeneous",
                   {"zeta", "delta_omega", "gamma"},
                   {{"zeta", 0.033}, {"delta_omega", 1.0}, {"gamma", 1.0}},
                   {"extra_decay", "gamma_minus", "ratio_to_gamma_minus", "within_tolerance"},
                   [](const ParamMap& p) -> std::vector<double> {
                       const InhomogeneousPenalty q =
                           inhomogeneous_penalty(p.at("delta_omega"), dimer_of(p));
                       return {q.extra_decay, q.gamma_minus, q.ratio_to_gamma_minus,
                               q.within_tolerance ? 1.0 : 0.0};
                   },
                   [](const ParamMap&) -> Anchor { return std::nullopt; }});
    return obs;
}

const Observable& find_observable(const std::string& name, const std::string& location) {
    for (const auto& o : observables())
        if (o.name == name) return o;
    std::string list;
    for (const auto& o : observables()) list += (list.empty() ? "" : ", ") + o.name;
    throw ConfigError(location + ": unknown observable '" + name + "' (valid: " + list + ")");
}

void check_parameter(const Observable& o, const std::string& key, const std::string& location) {
    for (const auto& p : o.parameters)
        if (p == key) return;
    std::string list;
    for (const auto& p : o.parameters) list += (list.empty() ? "" : ", ") + p;
    throw ConfigError(location + ": unknown parameter for observable '" + o.name +
                      "' (allowed: " + list + ")");
}

std::vector<double> parse_axis(const json& v, const std::string& location) {
    std::vector<double> values;
    if (v.is_number()) {
        values.push_back(v.get<double>());
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number())
                throw ConfigError(location + "[" + std::to_string(i) + "]: expected a number");
            values.push_back(v[i].get<double>());
        }
    } else if (v.is_object()) {
        detail::reject_unknown_keys(v, {"start", "stop", "num", "scale"}, location);
        const double start = detail::number_at(v, "start", location);
        const double stop = detail::number_at(v, "stop", location);
        const double num_d = detail::number_at(v, "num", location);
        const std::string scale = detail::string_or(v, "scale", "linear", location);
        if (num_d < 1.0 || num_d != std::floor(num_d) || num_d > 1e6)
            throw ConfigError(location + ".num: expected an integer in [1, 1e6]");
        if (scale != "linear" && scale != "log")
            throw ConfigError(location + ".scale: expected 'linear' or 'log'");
        if (scale == "log" && !(start > 0.0 && stop > 0.0))
            throw ConfigError(location + ": log scale needs start, stop > 0");
        const int num = static_cast<int>(num_d);
        for (int i = 0; i < num; ++i) {
            const double f = num == 1 ? 0.0 : static_cast<double>(i) / (num - 1);
            values.push_back(scale == "log"
                                 ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                                 : start + f * (stop - start));
        }
    } else {
        throw ConfigError(location + ": expected a number, an array or {start, stop, num, scale}");
    }
    if (values.empty()) throw ConfigError(location + ": empty axis");
    for (double x : values)
        if (!std::isfinite(x)) throw ConfigError(location + ": non-finite value");
    return values;
}

}  // namespace

const std::vector<Observable>& observables() {
    static const std::vector<Observable> table = build_observables();
    return table;
}

SweepConfig parse_sweep_config(const std::string& text) {
    const json doc = detail::parse_json(text, "config");
    detail::reject_unknown_keys(doc, {"observable", "grid", "fixed", "format", "comment"}, "config");
    if (!doc.contains("observable") || !doc.at("observable").is_string())
        throw ConfigError("config.observable: required string");

    SweepConfig cfg;
    cfg.observable = doc.at("observable").get<std::string>();
    const Observable& o = find_observable(cfg.observable, "config.observable");
    cfg.format = detail::string_or(doc, "format", "csv", "config");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("config.format: expected 'csv' or 'json'");

    std::map<std::string, std::vector<double>> axes;
    if (doc.contains("grid")) {
        const json& grid = doc.at("grid");
        if (!grid.is_object()) throw ConfigError("config.grid: expected an object");
        for (const auto& [key, value] : grid.items()) {
            const std::string loc = "config.grid." + key;
            check_parameter(o, key, loc);
            axes[key] = parse_axis(value, loc);
        }
    }
    if (doc.contains("fixed")) {
        const json& fixed = doc.at("fixed");
        if (!fixed.is_object()) throw ConfigError("config.fixed: expected an object");
        for (const auto& [key, value] : fixed.items()) {
            const std::string loc = "config.fixed." + key;
            check_parameter(o, key, loc);
            if (axes.count(key)) throw ConfigError(loc + ": also present in config.grid");
            if (!value.is_number() || !std::isfinite(value.get<double>()))
                throw ConfigError(loc + ": expected a finite number");
            cfg.fixed[key] = value.get<double>();
        }
    }
    // Axes follow the observable's parameter order; the last one varies fastest.
    for (const auto& name : o.parameters)
        if (axes.count(name)) cfg.grid.emplace_back(name, axes[name]);
    return cfg;
}

void apply_overrides(SweepConfig& cfg, const std::vector<std::string>& overrides) {
    const Observable& o = find_observable(cfg.observable, "config.observable");
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("--set " + item + ": expected name=value");
        const std::string key = item.substr(0, eq);
        check_parameter(o, key, "--set " + key);
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ConfigError("--set " + key + ": expected a number");
        }
        if (!std::isfinite(value)) throw ConfigError("--set " + key + ": expected a finite number");
        std::erase_if(cfg.grid, [&](const auto& axis) { return axis.first == key; });
        cfg.fixed[key] = value;
    }
}

}  // namespace dimerqc::cli
