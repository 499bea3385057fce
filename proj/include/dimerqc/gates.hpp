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

#ifndef DIMERQC_GATES_HPP
#define DIMERQC_GATES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dimerqc/budgets.hpp"
#include "dimerqc/drive.hpp"
#include "dimerqc/linalg.hpp"
#include "dimerqc/rddi.hpp"
#include "dimerqc/readout.hpp"

namespace dimerqc {

struct TruthTableEntry {
    std::string input;
    CVector output;
};

struct GateReport {
    std::string name;
    double duration = 0.0;
    double nominal_duration = 0.0;
    /// Closed-form (no-decay) map of the computational basis.
    std::vector<TruthTableEntry> truth_table;
    /// Ideal target unitary on the computational subspace.
    CMatrix target;
    /// Computational block of the propagated map, after any local phase correction.
    CMatrix numeric_map;
    double fidelity_analytic = 0.0;  // 1 - budget.total
    double fidelity_numeric = 0.0;   // average gate fidelity of numeric_map vs target
    /// Largest no-jump norm loss over computational inputs.
    double error_probability_numeric = 0.0;
    ErrorBudget budget;
    std::vector<std::string> warnings;
    std::map<std::string, double> diagnostics;

    double fidelity_gap() const { return fidelity_analytic - fidelity_numeric; }
    /// Truth table as a matrix whose columns are the outputs.
    CMatrix truth_matrix() const;
};

/// (Tr M M^dag + |Tr U^dag M|^2) / (d (d + 1)); M need not be unitary.
double average_gate_fidelity(const CMatrix& m, const CMatrix& target);

/// Wootters concurrence of a (possibly unnormalized) pure two-qubit state.
double concurrence(const CVector& psi);

enum class RotationModel { Full, Effective };

/// Rotation on |G> <-> |-> with pulse area |Omega_-| T. Throws NoCoupling if Omega_- = 0.
GateReport rotate_qubit(const DimerGeometry& g, const LaserField& f, double pulse_area,
                        RotationModel model = RotationModel::Full);

enum class SwapFraction { Full, Half };

/// Two effective qubits {G, -} per dimer in the basis |ab>, index 2a + b.
CMatrix swap_model_hamiltonian(const TwoDimerGeometry& tg, double detuning_mismatch,
                               bool with_decay = true);

GateReport swap_gate(const TwoDimerGeometry& tg, SwapFraction fraction,
                     double detuning_mismatch = 0.0);

/// Levels (G, -, +) per dimer; state |ab> has index 3a + b.
inline constexpr std::array<const char*, 9> kCphaseStateNames = {
    "GG", "G-", "G+", "-G", "--", "-+", "+G", "+-", "++"};
inline constexpr std::array<int, 4> kCphaseComputational = {0, 1, 3, 4};

/// 9-dim non-Hermitian model in the coupling-field frame; field_offset shifts
/// the |+> level away from the |GG> -> |M> resonance.
CMatrix cphase_model_hamiltonian(const TwoDimerGeometry& tg, double omega_c,
                                 double field_offset, bool with_decay = true);

struct CphaseProtocol {
    double field_offset = 0.0;
    double duration = 0.0;
    double nominal_duration = 0.0;  // pi / Omega_M
    double omega_m = 0.0;
};

/// Chooses the field offset and duration that maximize the average CZ fidelity
/// of the 9-dim model, after local Z corrections.
CphaseProtocol calibrate_cphase(const TwoDimerGeometry& tg, double omega_c);

/// Conditional phase arg(U_GG U_-- conj(U_G- U_-G)) of a computational map.
double conditional_phase(const CMatrix& comp);

GateReport cphase_gate(const TwoDimerGeometry& tg, double omega_c);

}  // namespace dimerqc

#endif  // DIMERQC_GATES_HPP
