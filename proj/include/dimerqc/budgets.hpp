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

#ifndef DIMERQC_BUDGETS_HPP
#define DIMERQC_BUDGETS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimerqc/rddi.hpp"

namespace dimerqc {

struct BudgetComponent {
    std::string name;
    double probability = 0.0;
};

/// Upper-bound error probabilities accumulated during one gate.
struct ErrorBudget {
    std::vector<BudgetComponent> components;
    double total = 0.0;
    /// Channels quoted alongside the budget but not part of `total`.
    std::vector<BudgetComponent> side_channels;
    /// Closed-form optimal drive (gamma units), when an optimizer produced the budget.
    std::optional<double> optimal_drive;
    /// Drive found by golden-section search on the same budget.
    std::optional<double> optimal_drive_search;
    bool upper_bound = true;
    /// Named auxiliary values (closed-form minima, paper aliases, ...).
    std::map<std::string, double> values;
    std::vector<std::string> warnings;

    /// Probability of a component or side channel; throws InvalidInput if absent.
    double component(const std::string& name) const;
    void add(const std::string& name, double probability);
    void add_side_channel(const std::string& name, double probability);
};

/// Paper's rounded constants, kept as aliases of the exact 8/3 and 16/3 prefactors.
inline constexpr double kPaperRotationMinPrefactor = 2.65;
inline constexpr double kPaperCphaseMinPrefactor = 5.3;

ErrorBudget rotation_error_budget(const DimerGeometry& g, double omega_r);

/// Closed-form Omega_r* = gamma/(3 zeta^2) plus a golden-section search of
/// the same two-term budget. Components are evaluated at the closed form.
ErrorBudget optimize_rotation_drive(const DimerGeometry& g);

/// Single-atom pi-pulse comparison pi gamma/(2 Omega).
double single_atom_flip_error(double omega, double gamma = 1.0);

struct RamanScheme {
    double omega_r = 300.0;   // |Omega_R|
    double delta_e = 0.0;     // one-photon detuning
    double gamma_e = 1.0;     // excited-state decay
    double omega_c = 50.0;    // catalysis field (CPHASE variant)
    double delta_e_c = 0.0;   // catalysis detuning
    double xi = 0.1;

    void validate() const;
};

/// delta_e = Omega_R^2 / Omega_eff and P_e^sp = pi gamma_e / (2 delta_e).
ErrorBudget raman_rotation_budget(const RamanScheme& r, double target_effective_rabi);

ErrorBudget cphase_error_budget(double xi, double omega_c, double gamma = 1.0);

/// Optimal-drive form of cphase_error_budget (components at Omega_c = gamma/(2 xi^2)).
ErrorBudget optimize_cphase_drive(double xi, double gamma = 1.0);

/// T_swap / T_cphase = 10 Omega_c xi^4 / (3 gamma zeta^2).
double gate_time_ratio(double zeta, double xi, double omega_c, double gamma = 1.0);

/// 2 Gamma_- T_swap in the asymptotic form 4 pi xi^3 / 3 (half SWAP: half of it).
ErrorBudget swap_error_budget(const TwoDimerGeometry& tg, bool half = false);

struct RamanCphaseBudget {
    double delta_ab = 0.0;        // 3 gamma_e / (4 xi^3)
    double s_g1g2 = 0.0;          // 2 |Omega_C|^2 / delta_e^(C)
    double s_g2g2 = 0.0;          // expansion to second order in Delta_AB / delta_e
    double s_g2g2_exact = 0.0;    // closed form the expansion approximates
    double t_cphase = 0.0;        // pi delta_e^(C) / (Delta_AB S_g1g2)
    double p_error = 0.0;         // 8 pi xi^3 / 3
    double t_cphase_dimer = 0.0;  // pi / (Omega_C xi) at matched xi and drive
    double time_ratio_vs_dimer = 0.0;
};

RamanCphaseBudget raman_cphase_budget(const RamanScheme& r);

}  // namespace dimerqc

#endif  // DIMERQC_BUDGETS_HPP
