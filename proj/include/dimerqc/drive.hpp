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

#ifndef DIMERQC_DRIVE_HPP
#define DIMERQC_DRIVE_HPP

// Laser couplings in the dressed (G, -, +, E) basis and the Hamiltonians and
// jump operators built from them.

#include <string>
#include <vector>

#include "dimerqc/linalg.hpp"
#include "dimerqc/rddi.hpp"

namespace dimerqc {

struct LaserField {
    double rabi_mag = 0.0;  // single-atom |Omega|
    double phase = 0.0;     // Omega = |Omega| e^{i phase}
    double detuning = 0.0;  // omega_eg - omega_laser
    double k_angle = 0.0;   // angle between k and r12

    void validate() const;
};

struct DriveCouplings {
    Complex omega_plus;
    Complex omega_minus;
};

/// Omega_+- = (Omega/sqrt2) [1 +- e^{-i zeta cos(k_angle)}].
DriveCouplings drive_couplings(const LaserField& f, const DimerGeometry& g);

/// 4x4 interaction-picture Hamiltonian in the (G, -, +, E) basis, including the
/// -i Gamma/2 decay terms.
CMatrix full_dimer_hamiltonian(const LaserField& f, const DimerGeometry& g);

struct JumpOperator {
    CMatrix op;
    double rate = 0.0;
    std::string label;
};

using JumpOperatorSet = std::vector<JumpOperator>;

/// Dicke-ladder decay: |G><+| and |+><E| at Gamma_+, |G><-| and |-><E| at
/// Gamma_-.
JumpOperatorSet jump_operators(const DimerGeometry& g);

/// -(i/2) sum_k rate_k L_k^dagger L_k
CMatrix anti_hermitian_from_jumps(const JumpOperatorSet& jumps, int dim);

struct EffectiveHamiltonian {
    CMatrix h;  // 2x2 in (G, -) or (G, +)
    bool valid = true;
    std::vector<std::string> warnings;
    double ground_stark_shift = 0.0;
    double excited_stark_shift = 0.0;
    /// Detuning at which the Stark shifts are compensated.
    double resonant_detuning = 0.0;
    /// Ground-state relaxation from the far-detuned partner (subradiant case).
    double gamma_ground = 0.0;
};

/// Detuning that keeps |G> <-> |-> resonant once the Stark shifts from the
/// non-resonant levels are included: Delta - (|O+|^2 - |O-|^2)/(2 Delta).
double subradiant_resonance_detuning(const LaserField& f, const DimerGeometry& g);

/// Counterpart for |G> <-> |+>: -Delta - (|O+|^2 - |O-|^2)/(2 Delta).
double superradiant_resonance_detuning(const LaserField& f, const DimerGeometry& g);

/// Effective (G, -) Hamiltonian after eliminating |+> and |E>:
/// -i Gamma_G/2 |G><G| - i Gamma_-/2 |-><-| + Omega_- |-><G| + h.c.,
/// Gamma_G = Gamma_+ |Omega_+|^2 / (2 Delta)^2. Out-of-regime inputs are
/// flagged, never rejected.
EffectiveHamiltonian effective_minus_hamiltonian(const LaserField& f, const DimerGeometry& g);

/// Effective (G, +) Hamiltonian: -i Gamma_+/2 |+><+| + Omega_+ |+><G| + h.c.
EffectiveHamiltonian effective_plus_hamiltonian(const LaserField& f, const DimerGeometry& g);

/// Steady-state |+> population of the driven superradiant transition,
/// |O+|^2 / ((Gamma_+/2)^2 + 2 |O+|^2).
double superradiant_steady_population(Complex omega_plus, double gamma_plus);

}  // namespace dimerqc

#endif  // DIMERQC_DRIVE_HPP
