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

#ifndef DIMERQC_RDDI_HPP
#define DIMERQC_RDDI_HPP

// Resonant dipole-dipole interaction between two identical two-level emitters,
// the dressed "dimer" spectrum it produces, and the effective couplings between
// two neighbouring dimers.

#include <array>
#include <string>
#include <vector>

#include "dimerqc/linalg.hpp"

namespace dimerqc {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

/// Two emitters at normalized separation zeta = q r12 with their dipoles at
/// angle theta to the interatomic axis.
struct DimerGeometry {
    double zeta = 0.033;
    double theta = kHalfPi;
    double gamma = 1.0;

    /// Throws InvalidInput unless zeta > 0, gamma > 0 and theta in [0, pi].
    void validate() const;
};

struct RddiCoefficients {
    double delta = 0.0;    // coherent exchange
    double gamma12 = 0.0;  // cooperative decay

    double gamma_plus(double gamma) const { return gamma + gamma12; }
    double gamma_minus(double gamma) const { return gamma - gamma12; }
};

/// Exact coefficients. The (cos z/z^2 - sin z/z^3) term of gamma12 cancels to
/// O(1) from O(1/z^2) and is summed as a series for small zeta.
RddiCoefficients rddi_coefficients(const DimerGeometry& g);

/// Leading small-zeta forms, theta = pi/2 only: Delta = 3 gamma/(4 zeta^3),
/// gamma12 = gamma (1 - zeta^2/5). Throws UnsupportedGeometry otherwise.
RddiCoefficients rddi_asymptotic(const DimerGeometry& g);

/// Dressed-basis labels, in the library-wide order.
enum DimerLevel : int { kG = 0, kMinus = 1, kPlus = 2, kE = 3 };

inline constexpr std::array<const char*, 4> kDimerLevelNames = {"G", "minus", "plus", "E"};

struct DimerSpectrum {
    RddiCoefficients rddi;
    double omega_eg = 0.0;  // reference energy; 0 in the rotating frame
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
    double gamma_e = 0.0;
    /// Complex eigenvalues in (G, -, +, E) order.
    std::array<Complex, 4> eigenvalues{};
    /// Columns are |G>, |->, |+>, |E> expressed in the product basis
    /// {g1g2, e1g2, g1e2, e1e2}.
    CMatrix eigenvectors;
};

DimerSpectrum dimer_spectrum(const DimerGeometry& g, double omega_eg = 0.0);

/// Non-Hermitian two-atom Hamiltonian H_atom + V_RDDI in the product basis
/// {g1g2, e1g2, g1e2, e1e2}.
CMatrix two_atom_hamiltonian(const DimerGeometry& g, double omega_eg = 0.0);

// ---------------------------------------------------------------------------
// Two dimers A and B with r12 perpendicular to r_AB.

struct TwoDimerGeometry {
    double xi = 0.1;  // q r_AB
    DimerGeometry dimer;

    static constexpr double kAsymptoticWarnXi = 0.3;

    /// Throws InvalidGeometry unless xi > zeta (and the dimer is valid).
    void validate() const;
    /// Effective-TLS asymptotics degrade once xi approaches 1.
    bool asymptotics_degraded() const { return xi >= kAsymptoticWarnXi; }
};

/// Exchange on the qubit transition, 3 Gamma_- / (4 xi^3) with
/// Gamma_- = gamma zeta^2/5.
double inter_dimer_coupling_minus(const TwoDimerGeometry& tg);

/// Exchange on the auxiliary transition, 3 Gamma_+ / (4 xi^3) with
/// Gamma_+ = 2 gamma. Positive sign by convention.
double inter_dimer_coupling_plus(const TwoDimerGeometry& tg);

/// Collective states of two dimers restricted to {G,+} per dimer. Vectors are
/// in the basis |G_A G_B>, |G_A +_B>, |+_A G_B>, |+_A +_B>.
struct TwoDimerSpectrum {
    CVector state_m;  // (|+G> - |G+>)/sqrt2
    CVector state_p;  // (|+G> + |G+>)/sqrt2
    double gamma_m = 0.0;
    double gamma_p = 0.0;
    double energy_m = 0.0;  // -Delta_AB^(+)
    double energy_p = 0.0;  // +Delta_AB^(+)
    double coupling_plus = 0.0;
    bool asymptotics_degraded = false;
};

TwoDimerSpectrum two_dimer_spectrum(const TwoDimerGeometry& tg);

struct InhomogeneousPenalty {
    double extra_decay = 0.0;     // gamma dw^2 / (8 Delta^2)
    double gamma_minus = 0.0;     // exact Gamma_- for comparison
    double tolerance_width = 0.0; // gamma / zeta^2
    bool within_tolerance = false;
    double ratio_to_gamma_minus = 0.0;
};

/// Extra subradiant decay from a resonance mismatch delta_omega between the
/// two emitters, with the broadening-width tolerance flag dw <= gamma/zeta^2.
InhomogeneousPenalty inhomogeneous_penalty(double delta_omega, const DimerGeometry& g);

}  // namespace dimerqc

#endif  // DIMERQC_RDDI_HPP
