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

#include "dimerqc/readout.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "dimerqc/errors.hpp"

namespace dimerqc {

namespace {

// gamma_-+ = 4 |Omega_-|^2 / Gamma_E: |-> -> |E> off resonance by 2 Delta, then |E> -> |+>.
double pumping_rate(const DriveCouplings& c, double gamma_e) {
    return 4.0 * std::norm(c.omega_minus) / gamma_e;
}

void check_probe(double omega_p, double k_angle) {
    if (!(omega_p >= 0.0) || !std::isfinite(omega_p))
        throw Error(ErrorKind::InvalidInput, "probe Rabi frequency must be finite and >= 0");
    if (!std::isfinite(k_angle))
        throw Error(ErrorKind::InvalidInput, "probe angle must be finite");
}

}  // namespace

LaserField probe_field(const DimerGeometry& g, double omega_p, double k_angle) {
    g.validate();
    check_probe(omega_p, k_angle);
    LaserField f;
    f.rabi_mag = omega_p;
    f.k_angle = k_angle;
    f.detuning = superradiant_resonance_detuning(f, g);
    return f;
}

ReadoutReport readout_report(const DimerGeometry& g, double omega_p, double eta,
                             std::optional<double> t_pr, double k_angle) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw Error(ErrorKind::InvalidInput, "detection efficiency eta must lie in (0, 1]");
    const LaserField f = probe_field(g, omega_p, k_angle);
    const double gamma = g.gamma;
    const RddiCoefficients c = rddi_coefficients(g);
    const double gamma_plus = c.gamma_plus(gamma);
    const double gamma_minus = c.gamma_minus(gamma);
    const double gamma_e = 2.0 * gamma;

    ReadoutReport r;
    r.couplings = drive_couplings(f, g);
    r.gamma_mp = pumping_rate(r.couplings, gamma_e);
    r.t_pr = t_pr.value_or(1.0 / (eta * gamma));
    if (!(r.t_pr >= 0.0) || !std::isfinite(r.t_pr))
        throw Error(ErrorKind::InvalidInput, "probe duration must be finite and >= 0");

    r.rho_plus = superradiant_steady_population(r.couplings.omega_plus, gamma_plus);
    const double rate = eta * gamma_plus * r.rho_plus;
    const double t = r.t_pr;
    const double x = r.gamma_mp * t;

    double p_g = rate * t;
    // T - (1 - e^{-x}) / gamma_-+, written with expm1 to keep small x accurate.
    double p_m = r.gamma_mp > 0.0 ? rate * (t + std::expm1(-x) / r.gamma_mp) : 0.0;
    if (p_g > 1.0) {
        r.warnings.push_back("P_G^fl exceeds 1 at this probe duration; clipped");
        p_g = 1.0;
    }
    if (p_m > 1.0) p_m = 1.0;
    r.p_g_fl = p_g;
    r.p_minus_fl = p_m;
    r.p_minus_small_rate = eta * gamma * r.gamma_mp * t * t / 2.0;
    r.reliability = (p_g + p_m) > 0.0 ? p_g / (p_g + p_m) : 0.0;

    const double leak = omega_p * g.zeta * std::cos(k_angle) / gamma;
    r.reliability_closed_form = 2.0 * eta / (2.0 * eta + leak * leak);

    const double inf = std::numeric_limits<double>::infinity();
    r.init_time = r.gamma_mp > 0.0 ? 1.0 / r.gamma_mp : inf;
    r.init_time_99 = r.gamma_mp > 0.0 ? 5.0 / r.gamma_mp : inf;

    if (gamma_minus > 0.0 && t >= 1.0 / gamma_minus) {
        std::ostringstream msg;
        msg << "probe outlives qubit state: T_pr = " << t << " >= 1/Gamma_- = "
            << 1.0 / gamma_minus;
        r.warnings.push_back(msg.str());
    }
    return r;
}

InitializationTime initialization_time(const DimerGeometry& g, double omega_p, double k_angle) {
    const LaserField f = probe_field(g, omega_p, k_angle);
    const DriveCouplings c = drive_couplings(f, g);
    InitializationTime out;
    out.gamma_mp = pumping_rate(c, 2.0 * g.gamma);
    if (!(out.gamma_mp > 0.0))
        throw Error(ErrorKind::CannotInitialize,
                    "probe does not couple |-> (perpendicular probe or zero drive)");
    out.time = 1.0 / out.gamma_mp;
    out.time_99 = 5.0 / out.gamma_mp;
    return out;
}

}  // namespace dimerqc
