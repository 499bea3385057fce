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

#include "dimerqc/drive.hpp"

#include <cmath>
#include <sstream>

#include "dimerqc/errors.hpp"

namespace dimerqc {

void LaserField::validate() const {
    if (!std::isfinite(rabi_mag) || !std::isfinite(phase) || !std::isfinite(detuning) ||
        !std::isfinite(k_angle))
        throw Error(ErrorKind::InvalidInput, "laser field parameters must be finite");
    if (rabi_mag < 0.0) throw Error(ErrorKind::InvalidInput, "rabi_mag must be >= 0");
}

namespace {

// cos(k_angle), snapped to zero for a perpendicular field so that Omega_-
// vanishes identically there.
double projected_cosine(double k_angle) {
    const double c = std::cos(k_angle);
    const double folded = std::remainder(k_angle - kHalfPi, kPi);
    return std::abs(folded) < 1e-12 ? 0.0 : c;
}

}  // namespace

DriveCouplings drive_couplings(const LaserField& f, const DimerGeometry& g) {
    f.validate();
    g.validate();
    const double x = g.zeta * projected_cosine(f.k_angle);
    // 1 +- e^{-ix} = 2 e^{-ix/2} {cos(x/2), i sin(x/2)}
    const Complex base = std::polar(f.rabi_mag * std::sqrt(2.0), f.phase - 0.5 * x);
    DriveCouplings c;
    c.omega_plus = base * std::cos(0.5 * x);
    c.omega_minus = base * kI * std::sin(0.5 * x);
    return c;
}

CMatrix full_dimer_hamiltonian(const LaserField& f, const DimerGeometry& g) {
    const DimerSpectrum s = dimer_spectrum(g);
    const DriveCouplings c = drive_couplings(f, g);
    const double d = f.detuning;
    const double delta = s.rddi.delta;
    CMatrix h = CMatrix::Zero(4, 4);
    h(kMinus, kMinus) = Complex(d - delta, -0.5 * s.gamma_minus);
    h(kPlus, kPlus) = Complex(d + delta, -0.5 * s.gamma_plus);
    h(kE, kE) = Complex(2.0 * d, -0.5 * s.gamma_e);

    h(kMinus, kG) = c.omega_minus;
    h(kE, kMinus) = -c.omega_minus;
    h(kPlus, kG) = c.omega_plus;
    h(kE, kPlus) = c.omega_plus;
    h(kG, kMinus) = std::conj(c.omega_minus);
    h(kMinus, kE) = -std::conj(c.omega_minus);
    h(kG, kPlus) = std::conj(c.omega_plus);
    h(kPlus, kE) = std::conj(c.omega_plus);
    return h;
}

namespace {

CMatrix transition(int to, int from) {
    CMatrix m = CMatrix::Zero(4, 4);
    m(to, from) = 1.0;
    return m;
}

}  // namespace

JumpOperatorSet jump_operators(const DimerGeometry& g) {
    const DimerSpectrum s = dimer_spectrum(g);
    return {
        {transition(kG, kPlus), s.gamma_plus, "G<-plus"},
        {transition(kG, kMinus), s.gamma_minus, "G<-minus"},
        {transition(kPlus, kE), s.gamma_plus, "plus<-E"},
        {transition(kMinus, kE), s.gamma_minus, "minus<-E"},
    };
}

CMatrix anti_hermitian_from_jumps(const JumpOperatorSet& jumps, int dim) {
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (const auto& j : jumps) sum += j.rate * j.op.adjoint() * j.op;
    return Complex(0.0, -0.5) * sum;
}

double subradiant_resonance_detuning(const LaserField& f, const DimerGeometry& g) {
    const double delta = rddi_coefficients(g).delta;
    const DriveCouplings c = drive_couplings(f, g);
    return delta - (std::norm(c.omega_plus) - std::norm(c.omega_minus)) / (2.0 * delta);
}

double superradiant_resonance_detuning(const LaserField& f, const DimerGeometry& g) {
    const double delta = rddi_coefficients(g).delta;
    const DriveCouplings c = drive_couplings(f, g);
    return -delta - (std::norm(c.omega_plus) - std::norm(c.omega_minus)) / (2.0 * delta);
}

namespace {

constexpr double kWellAbove = 10.0;  // "much greater than" threshold for flags

void flag(EffectiveHamiltonian& eff, const std::string& message) {
    eff.valid = false;
    eff.warnings.push_back(message);
}

}  // namespace

EffectiveHamiltonian effective_minus_hamiltonian(const LaserField& f, const DimerGeometry& g) {
    const DimerSpectrum s = dimer_spectrum(g);
    const DriveCouplings c = drive_couplings(f, g);
    const double delta = s.rddi.delta;

    EffectiveHamiltonian eff;
    eff.gamma_ground = s.gamma_plus * std::norm(c.omega_plus) / (4.0 * delta * delta);
    eff.ground_stark_shift = -std::norm(c.omega_plus) / (2.0 * delta);
    eff.excited_stark_shift = -std::norm(c.omega_minus) / (2.0 * delta);
    eff.resonant_detuning = subradiant_resonance_detuning(f, g);

    if (std::abs(f.detuning - delta) > std::abs(delta) / 10.0)
        flag(eff, "detuning is not near the subradiant resonance (|delta - Delta| > Delta/10)");
    if (std::abs(delta) < kWellAbove * g.gamma) flag(eff, "Delta is not >> gamma");
    if (std::abs(delta) < kWellAbove * f.rabi_mag) flag(eff, "Delta is not >> |Omega|");
    if (std::abs(c.omega_plus) > 2.0 * std::abs(delta) / kWellAbove)
        flag(eff, "|Omega_+| is not << 2 Delta");

    eff.h = CMatrix::Zero(2, 2);
    eff.h(0, 0) = Complex(0.0, -0.5 * eff.gamma_ground);
    eff.h(1, 1) = Complex(0.0, -0.5 * s.gamma_minus);
    eff.h(1, 0) = c.omega_minus;
    eff.h(0, 1) = std::conj(c.omega_minus);
    return eff;
}

EffectiveHamiltonian effective_plus_hamiltonian(const LaserField& f, const DimerGeometry& g) {
    const DimerSpectrum s = dimer_spectrum(g);
    const DriveCouplings c = drive_couplings(f, g);
    const double delta = s.rddi.delta;

    EffectiveHamiltonian eff;
    eff.ground_stark_shift = std::norm(c.omega_minus) / (2.0 * delta);
    eff.excited_stark_shift = std::norm(c.omega_plus) / (2.0 * delta);
    eff.resonant_detuning = superradiant_resonance_detuning(f, g);

    if (std::abs(f.detuning + delta) > std::abs(delta) / 10.0)
        flag(eff, "detuning is not near the superradiant resonance (|delta + Delta| > Delta/10)");
    if (std::abs(delta) < kWellAbove * g.gamma) flag(eff, "Delta is not >> gamma");
    if (std::abs(delta) < kWellAbove * f.rabi_mag) flag(eff, "Delta is not >> |Omega|");

    eff.h = CMatrix::Zero(2, 2);
    eff.h(1, 1) = Complex(0.0, -0.5 * s.gamma_plus);
    eff.h(1, 0) = c.omega_plus;
    eff.h(0, 1) = std::conj(c.omega_plus);
    return eff;
}

double superradiant_steady_population(Complex omega_plus, double gamma_plus) {
    const double w2 = std::norm(omega_plus);
    return w2 / (0.25 * gamma_plus * gamma_plus + 2.0 * w2);
}

}  // namespace dimerqc
