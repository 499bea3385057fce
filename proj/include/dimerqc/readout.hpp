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

#ifndef DIMERQC_READOUT_HPP
#define DIMERQC_READOUT_HPP

#include <optional>
#include <string>
#include <vector>

#include "dimerqc/drive.hpp"
#include "dimerqc/rddi.hpp"

namespace dimerqc {

struct ReadoutReport {
    double p_g_fl = 0.0;      // detection probability from |G>
    double p_minus_fl = 0.0;  // false-bright probability from |->
    double gamma_mp = 0.0;    // probe-induced |-> -> |+> pumping rate
    double t_pr = 0.0;
    double reliability = 0.0;              // P_G / (P_G + P_-)
    double reliability_closed_form = 0.0;  // 2 eta / (2 eta + (Omega_p zeta cos phi_k / gamma)^2)
    /// eta gamma gamma_-+ T^2 / 2, the small-rate limit of p_minus_fl.
    double p_minus_small_rate = 0.0;
    double rho_plus = 0.0;  // steady |+> population under the probe
    double init_time = 0.0;
    double init_time_99 = 0.0;
    DriveCouplings couplings;
    std::vector<std::string> warnings;
};

/// Electron-shelving readout with a probe resonant on |G> -> |+>. Leaving
/// t_pr empty selects T_pr = 1/(eta gamma).
ReadoutReport readout_report(const DimerGeometry& g, double omega_p, double eta,
                             std::optional<double> t_pr = std::nullopt, double k_angle = 0.0);

struct InitializationTime {
    double time = 0.0;     // 1/gamma_-+
    double time_99 = 0.0;  // 5/gamma_-+
    double gamma_mp = 0.0;
};

/// Throws CannotInitialize when the probe does not pump |-> (gamma_-+ = 0).
InitializationTime initialization_time(const DimerGeometry& g, double omega_p,
                                       double k_angle = 0.0);

/// Probe field on the superradiant resonance, as used by the readout model.
LaserField probe_field(const DimerGeometry& g, double omega_p, double k_angle = 0.0);

}  // namespace dimerqc

#endif  // DIMERQC_READOUT_HPP
