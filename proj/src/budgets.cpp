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

#include "dimerqc/budgets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dimerqc/errors.hpp"
#include "dimerqc/optimize.hpp"

namespace dimerqc {

namespace {

double clip_probability(double p) {
    if (std::isnan(p)) return p;
    return std::clamp(p, 0.0, 1.0);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidInput, what);
}

// Printed rotation budget in gamma units, w = Omega_r / gamma.
double rotation_sp(double zeta, double w) { return kPi * zeta / (5.0 * std::sqrt(2.0) * w); }
double rotation_tr(double zeta, double w) {
    return 8.0 * std::sqrt(2.0) * kPi * w * std::pow(zeta, 5) / 9.0;
}

double cphase_sp(double xi, double w) { return 2.0 * kPi * xi / (5.0 * w); }
double cphase_tr(double xi, double w) { return 16.0 * kPi * w * std::pow(xi, 5) / 9.0; }

double search_lower(double x) { return x * 1e-3; }
double search_upper(double x) { return x * 1e3; }

}  // namespace

double ErrorBudget::component(const std::string& name) const {
    for (const auto& c : components)
        if (c.name == name) return c.probability;
    for (const auto& c : side_channels)
        if (c.name == name) return c.probability;
    throw Error(ErrorKind::InvalidInput, "no budget component named '" + name + "'");
}

void ErrorBudget::add(const std::string& name, double probability) {
    components.push_back({name, clip_probability(probability)});
    total = 0.0;
    for (const auto& c : components) total += c.probability;
}

void ErrorBudget::add_side_channel(const std::string& name, double probability) {
    side_channels.push_back({name, clip_probability(probability)});
}

ErrorBudget rotation_error_budget(const DimerGeometry& g, double omega_r) {
    g.validate();
    require(omega_r >= 0.0 && std::isfinite(omega_r), "omega_r must be finite and >= 0");
    const double w = omega_r / g.gamma;
    ErrorBudget b;
    b.add("spontaneous", w > 0.0 ? rotation_sp(g.zeta, w)
                                 : std::numeric_limits<double>::infinity());
    b.add("transfer", rotation_tr(g.zeta, w));
    if (w < 10.0 * g.zeta || w > 0.1 / std::pow(g.zeta, 3)) {
        std::ostringstream msg;
        msg << "drive Omega_r/gamma = " << w << " outside zeta << Omega_r/gamma << zeta^-3";
        b.warnings.push_back(msg.str());
    }
    b.values["t_flip"] = kPi / (std::sqrt(2.0) * omega_r * g.zeta);
    return b;
}

ErrorBudget optimize_rotation_drive(const DimerGeometry& g) {
    g.validate();
    const double z = g.zeta;
    const double w_closed = 1.0 / (3.0 * z * z);
    ErrorBudget b = rotation_error_budget(g, w_closed * g.gamma);
    b.optimal_drive = w_closed * g.gamma;

    auto total = [z](double w) { return rotation_sp(z, w) + rotation_tr(z, w); };
    const ScalarMinimum m = golden_section_minimize_log(total, search_lower(w_closed),
                                                        search_upper(w_closed), 1e-12);
    b.optimal_drive_search = m.x * g.gamma;

    const RddiCoefficients c = rddi_coefficients(g);
    b.values["p_min"] = 8.0 / 3.0 * z * z * z;
    b.values["p_min_exact_delta"] = 2.0 * g.gamma / c.delta;
    b.values["p_min_paper"] = kPaperRotationMinPrefactor * z * z * z;
    b.values["p_min_search"] = m.value;
    // Stationary point of the printed two-term budget, sqrt(sp / tr) coefficients.
    b.values["stationary_point"] = 3.0 / (std::sqrt(80.0) * z * z) * g.gamma;
    return b;
}

double single_atom_flip_error(double omega, double gamma) {
    require(omega > 0.0 && gamma > 0.0, "single_atom_flip_error needs omega, gamma > 0");
    return clip_probability(kPi * gamma / (2.0 * omega));
}

void RamanScheme::validate() const {
    require(omega_r >= 0.0 && std::isfinite(omega_r), "Raman omega_R must be finite and >= 0");
    require(gamma_e > 0.0 && std::isfinite(gamma_e), "Raman gamma_e must be > 0");
    require(omega_c >= 0.0 && std::isfinite(omega_c), "catalysis omega_C must be >= 0");
    require(xi > 0.0 && std::isfinite(xi), "Raman xi must be > 0");
    require(std::isfinite(delta_e) && std::isfinite(delta_e_c), "Raman detunings must be finite");
}

ErrorBudget raman_rotation_budget(const RamanScheme& r, double target_effective_rabi) {
    r.validate();
    require(target_effective_rabi > 0.0, "target effective Rabi frequency must be > 0");
    const double delta_e = r.omega_r * r.omega_r / target_effective_rabi;
    ErrorBudget b;
    b.add("spontaneous", delta_e > 0.0 ? kPi * r.gamma_e / (2.0 * delta_e)
                                       : std::numeric_limits<double>::infinity());
    b.values["delta_e"] = delta_e;
    b.values["t_flip"] = kPi / (2.0 * target_effective_rabi);
    if (delta_e < 10.0 * r.gamma_e) b.warnings.push_back("delta_e is not >> gamma_e (ratio < 10)");
    return b;
}

ErrorBudget cphase_error_budget(double xi, double omega_c, double gamma) {
    require(xi > 0.0 && std::isfinite(xi), "xi must be > 0");
    require(gamma > 0.0 && std::isfinite(gamma), "gamma must be > 0");
    require(omega_c >= 0.0 && std::isfinite(omega_c), "omega_c must be finite and >= 0");
    const double w = omega_c / gamma;

    // Printed forms: Gamma_M T, Gamma_P |Omega_P|^2 T / (2 Delta)^2 and the
    // spectator Gamma_+ |Omega_+|^2 T / Delta^2, with Gamma_+ = 2 gamma.
    const double t = kPi / (w * xi);
    const double delta_ab = 1.5 / std::pow(xi, 3);
    const double gamma_plus = 2.0;
    const double p_spectator =
        gamma_plus * 2.0 * w * w * t / (delta_ab * delta_ab);
    const double p_transfer =
        2.0 * gamma_plus * 4.0 * w * w * t / (4.0 * delta_ab * delta_ab);

    ErrorBudget b;
    b.add("spontaneous", w > 0.0 ? cphase_sp(xi, w) : std::numeric_limits<double>::infinity());
    b.add("transfer", w > 0.0 ? p_transfer : 0.0);
    b.add_side_channel("transfer_spectator", w > 0.0 ? p_spectator : 0.0);
    if (w > 0.0 && std::abs(p_transfer - cphase_tr(xi, w)) > 1e-12 * cphase_tr(xi, w))
        b.warnings.push_back("printed transfer form disagrees with 16 pi Omega_c xi^5 / 9");
    if (w > 0.0 && std::abs(p_spectator - p_transfer) > 1e-12 * p_transfer)
        b.warnings.push_back("spectator transfer differs from the two-dimer transfer term");

    const double w_closed = 1.0 / (2.0 * xi * xi);
    auto total = [xi](double v) { return cphase_sp(xi, v) + cphase_tr(xi, v); };
    const ScalarMinimum m = golden_section_minimize_log(total, search_lower(w_closed),
                                                        search_upper(w_closed), 1e-12);
    b.optimal_drive = w_closed * gamma;
    b.optimal_drive_search = m.x * gamma;
    b.values["t_cphase"] = w > 0.0 ? t / gamma : std::numeric_limits<double>::infinity();
    b.values["p_min"] = 16.0 / 3.0 * xi * xi * xi;
    b.values["p_min_delta"] = 8.0 / delta_ab;
    b.values["p_min_paper"] = kPaperCphaseMinPrefactor * xi * xi * xi;
    b.values["p_min_search"] = m.value;
    b.values["stationary_point"] = 3.0 / (std::sqrt(40.0) * xi * xi) * gamma;
    return b;
}

ErrorBudget optimize_cphase_drive(double xi, double gamma) {
    require(xi > 0.0 && std::isfinite(xi), "xi must be > 0");
    return cphase_error_budget(xi, gamma / (2.0 * xi * xi), gamma);
}

double gate_time_ratio(double zeta, double xi, double omega_c, double gamma) {
    require(zeta > 0.0 && xi > 0.0 && gamma > 0.0 && omega_c >= 0.0,
            "gate_time_ratio needs zeta, xi, gamma > 0 and omega_c >= 0");
    return 10.0 * omega_c * std::pow(xi, 4) / (3.0 * gamma * zeta * zeta);
}

ErrorBudget swap_error_budget(const TwoDimerGeometry& tg, bool half) {
    tg.validate();
    const double gamma = tg.dimer.gamma;
    const double z = tg.dimer.zeta;
    const double coupling = inter_dimer_coupling_minus(tg);
    const double t_full = kPi / (2.0 * coupling);
    const double t = half ? 0.5 * t_full : t_full;
    const double gamma_minus_asym = gamma * z * z / 5.0;
    ErrorBudget b;
    b.add("spontaneous", 2.0 * gamma_minus_asym * t);
    const double gamma_minus = rddi_coefficients(tg.dimer).gamma_minus(gamma);
    b.values["t_swap"] = t;
    b.values["p_exact_decay"] = clip_probability(2.0 * gamma_minus * t);
    b.values["p_formula"] = (half ? 2.0 : 4.0) * kPi * std::pow(tg.xi, 3) / 3.0;
    if (tg.asymptotics_degraded())
        b.warnings.push_back("xi >= 0.3: inter-dimer asymptotics degraded");
    return b;
}

RamanCphaseBudget raman_cphase_budget(const RamanScheme& r) {
    r.validate();
    RamanCphaseBudget out;
    out.delta_ab = 3.0 * r.gamma_e / (4.0 * std::pow(r.xi, 3));
    if (!(r.delta_e_c > out.delta_ab)) {
        std::ostringstream msg;
        msg << "catalysis detuning " << r.delta_e_c << " must exceed Delta_AB^(R) = "
            << out.delta_ab;
        throw Error(ErrorKind::RegimeViolation, msg.str());
    }
    const double dc = r.delta_e_c;
    out.s_g1g2 = 2.0 * r.omega_c * r.omega_c / dc;
    out.s_g2g2 = out.s_g1g2 * (1.0 + out.delta_ab / dc);
    out.s_g2g2_exact = 2.0 * r.omega_c * r.omega_c / (dc - out.delta_ab);
    out.t_cphase = out.s_g1g2 > 0.0 ? kPi * dc / (out.delta_ab * out.s_g1g2)
                                    : std::numeric_limits<double>::infinity();
    out.p_error = out.s_g1g2 > 0.0 ? 2.0 * r.gamma_e * out.s_g1g2 * out.t_cphase / dc
                                   : 8.0 * kPi * std::pow(r.xi, 3) / 3.0;
    out.t_cphase_dimer = r.omega_c > 0.0 ? kPi / (r.omega_c * r.xi)
                                         : std::numeric_limits<double>::infinity();
    out.time_ratio_vs_dimer = r.omega_c > 0.0 ? out.t_cphase / out.t_cphase_dimer
                                              : std::numeric_limits<double>::quiet_NaN();
    return out;
}

}  // namespace dimerqc
