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

#include "dimerqc/rddi.hpp"

#include <cmath>
#include <sstream>

#include "dimerqc/errors.hpp"

namespace dimerqc {

void DimerGeometry::validate() const {
    if (!(zeta > 0.0) || !std::isfinite(zeta)) {
        std::ostringstream msg;
        msg << "zeta must be finite and > 0 (got " << zeta << ")";
        throw Error(ErrorKind::InvalidInput, msg.str());
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw Error(ErrorKind::InvalidInput, "gamma must be finite and > 0");
    if (!(theta >= 0.0 && theta <= kPi))
        throw Error(ErrorKind::InvalidInput, "theta must lie in [0, pi]");
}

namespace {

constexpr double kSeriesBelow = 0.5;

// cos z / z^2 - sin z / z^3 = sum_{n>=1} (-1)^n 2n z^{2n-2} / (2n+1)!
double cancelling_term(double z) {
    if (z >= kSeriesBelow) return std::cos(z) / (z * z) - std::sin(z) / (z * z * z);
    const double z2 = z * z;
    double sum = 0.0;
    double power = 1.0;        // z^{2n-2}
    double factorial = 6.0;    // (2n+1)!
    double sign = -1.0;
    for (int n = 1; n <= 12; ++n) {
        sum += sign * (2.0 * n) * power / factorial;
        power *= z2;
        factorial *= (2.0 * n + 2.0) * (2.0 * n + 3.0);
        sign = -sign;
    }
    return sum;
}

}  // namespace

RddiCoefficients rddi_coefficients(const DimerGeometry& g) {
    g.validate();
    const double z = g.zeta;
    const double c = std::cos(g.theta);
    const double transverse = 1.0 - c * c;
    const double longitudinal = 1.0 - 3.0 * c * c;
    const double cz = std::cos(z);
    const double sz = std::sin(z);

    RddiCoefficients out;
    out.delta = 0.75 * g.gamma *
                (-transverse * cz / z + longitudinal * (sz / (z * z) + cz / (z * z * z)));
    out.gamma12 = 1.5 * g.gamma * (transverse * sz / z + longitudinal * cancelling_term(z));
    return out;
}

RddiCoefficients rddi_asymptotic(const DimerGeometry& g) {
    g.validate();
    if (std::abs(g.theta - kHalfPi) > 1e-12)
        throw Error(ErrorKind::UnsupportedGeometry,
                    "asymptotic RDDI forms require theta = pi/2");
    const double z = g.zeta;
    RddiCoefficients out;
    out.delta = 0.75 * g.gamma / (z * z * z);
    out.gamma12 = g.gamma * (1.0 - z * z / 5.0);
    return out;
}

DimerSpectrum dimer_spectrum(const DimerGeometry& g, double omega_eg) {
    DimerSpectrum s;
    s.rddi = rddi_coefficients(g);
    s.omega_eg = omega_eg;
    s.gamma_plus = s.rddi.gamma_plus(g.gamma);
    s.gamma_minus = s.rddi.gamma_minus(g.gamma);
    s.gamma_e = 2.0 * g.gamma;
    s.eigenvalues = {
        Complex(0.0, 0.0),
        Complex(omega_eg - s.rddi.delta, -0.5 * s.gamma_minus),
        Complex(omega_eg + s.rddi.delta, -0.5 * s.gamma_plus),
        Complex(2.0 * omega_eg, -0.5 * s.gamma_e),
    };
    const double r = 1.0 / std::sqrt(2.0);
    s.eigenvectors = CMatrix::Zero(4, 4);
    s.eigenvectors(0, kG) = 1.0;
    s.eigenvectors(1, kMinus) = r;
    s.eigenvectors(2, kMinus) = -r;
    s.eigenvectors(1, kPlus) = r;
    s.eigenvectors(2, kPlus) = r;
    s.eigenvectors(3, kE) = 1.0;
    return s;
}

CMatrix two_atom_hamiltonian(const DimerGeometry& g, double omega_eg) {
    const RddiCoefficients c = rddi_coefficients(g);
    const Complex excited(omega_eg, -0.5 * g.gamma);
    const Complex exchange(c.delta, -0.5 * c.gamma12);
    CMatrix h = CMatrix::Zero(4, 4);
    // product basis: 0 = g1g2, 1 = e1g2, 2 = g1e2, 3 = e1e2
    h(1, 1) = excited;
    h(2, 2) = excited;
    h(3, 3) = 2.0 * excited;
    h(1, 2) = exchange;
    h(2, 1) = exchange;
    return h;
}

void TwoDimerGeometry::validate() const {
    dimer.validate();
    if (!(xi > dimer.zeta) || !std::isfinite(xi)) {
        std::ostringstream msg;
        msg << "inter-dimer separation xi = " << xi << " must exceed zeta = " << dimer.zeta;
        throw Error(ErrorKind::InvalidGeometry, msg.str());
    }
}

double inter_dimer_coupling_minus(const TwoDimerGeometry& tg) {
    tg.validate();
    const double z = tg.dimer.zeta;
    return 3.0 * tg.dimer.gamma * z * z / (20.0 * tg.xi * tg.xi * tg.xi);
}

double inter_dimer_coupling_plus(const TwoDimerGeometry& tg) {
    tg.validate();
    return 1.5 * tg.dimer.gamma / (tg.xi * tg.xi * tg.xi);
}

TwoDimerSpectrum two_dimer_spectrum(const TwoDimerGeometry& tg) {
    tg.validate();
    const double gamma_plus = rddi_coefficients(tg.dimer).gamma_plus(tg.dimer.gamma);
    const double r = 1.0 / std::sqrt(2.0);
    TwoDimerSpectrum s;
    s.state_m = CVector::Zero(4);
    s.state_p = CVector::Zero(4);
    s.state_m[2] = r;
    s.state_m[1] = -r;
    s.state_p[2] = r;
    s.state_p[1] = r;
    s.gamma_m = gamma_plus * tg.xi * tg.xi / 5.0;
    s.gamma_p = 2.0 * gamma_plus;
    s.coupling_plus = inter_dimer_coupling_plus(tg);
    s.energy_m = -s.coupling_plus;
    s.energy_p = s.coupling_plus;
    s.asymptotics_degraded = tg.asymptotics_degraded();
    return s;
}

InhomogeneousPenalty inhomogeneous_penalty(double delta_omega, const DimerGeometry& g) {
    if (!(delta_omega >= 0.0) || !std::isfinite(delta_omega))
        throw Error(ErrorKind::InvalidInput, "delta_omega must be finite and >= 0");
    const RddiCoefficients c = rddi_coefficients(g);
    InhomogeneousPenalty p;
    p.extra_decay = g.gamma * delta_omega * delta_omega / (8.0 * c.delta * c.delta);
    p.gamma_minus = c.gamma_minus(g.gamma);
    p.tolerance_width = g.gamma / (g.zeta * g.zeta);
    p.within_tolerance = delta_omega <= p.tolerance_width;
    p.ratio_to_gamma_minus = p.extra_decay / p.gamma_minus;
    return p;
}

}  // namespace dimerqc
