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

#ifndef DIMERQC_DYNAMICS_HPP
#define DIMERQC_DYNAMICS_HPP

// Time evolution: no-jump (non-Hermitian) propagation, the Lindblad master
// equation, and Liouvillian steady states.

#include <functional>
#include <vector>

#include "dimerqc/drive.hpp"
#include "dimerqc/linalg.hpp"

namespace dimerqc {

struct StateSample {
    double t = 0.0;
    CVector amplitudes;
};

struct StateEvolution {
    QuantumState final_state;
    double leaked_population = 0.0;  // 1 - |psi(T)|^2
    std::vector<StateSample> samples;
};

struct DensitySample {
    double t = 0.0;
    CMatrix rho;
};

struct DensityEvolution {
    DensityMatrix final_state;
    double leaked_population = 0.0;  // tr rho(0) - tr rho(T)
    std::vector<DensitySample> samples;
};

/// Sample grid on [0, T]. Linear unless the supplied rates span more than two
/// decades, in which case points are log-spaced from 0.1/rate_max up to T (with
/// t = 0 prepended).
std::vector<double> default_sample_grid(double duration, double rate_min, double rate_max,
                                        int points = 200);

/// psi(T) = exp(-i H T) psi0. Throws ModelError if the norm grows by more than
/// 1e-8 at any sample (H not dissipative).
StateEvolution propagate_conditional(const CMatrix& h, const QuantumState& psi0, double duration,
                                     const std::vector<double>& sample_times = {});

/// Time-dependent variant, integrated with the adaptive RK45 stepper.
StateEvolution propagate_conditional(const std::function<CMatrix(double)>& h,
                                     const QuantumState& psi0, double duration, double tol,
                                     const std::vector<double>& sample_times = {});

/// Column-stacked Liouvillian of d rho/dt = -i[H, rho] + sum_k rate_k D[L_k] rho.
/// With include_recycling = false the L rho L^dagger terms are dropped, which
/// leaves exactly the no-jump evolution rho -> e^{-iH_eff t} rho e^{iH_eff^dag t}.
CMatrix liouvillian(const CMatrix& h, const JumpOperatorSet& jumps, bool include_recycling = true);

CVector vectorize(const CMatrix& rho);
CMatrix unvectorize(const CVector& v, int dim);

struct MasterOptions {
    enum class Method { Auto, Exponential, RungeKutta };
    Method method = Method::Auto;
    double tol = 1e-9;
    bool include_recycling = true;
    std::vector<double> sample_times;
};

inline constexpr double kTraceDriftBound = 1e-8;
inline constexpr double kPositivityBound = 1e-7;

/// Lindblad evolution of rho0 under the Hermitian Hamiltonian h and the jump
/// set. Throws InvalidInput for non-Hermitian h, IntegratorAccuracy when the
/// trace drifts beyond kTraceDriftBound (recycling on) or positivity fails.
DensityEvolution propagate_master(const CMatrix& h, const JumpOperatorSet& jumps,
                                  const DensityMatrix& rho0, double duration,
                                  const MasterOptions& options = {});

/// Time-dependent Hamiltonian variant (always RK45).
DensityEvolution propagate_master(const std::function<CMatrix(double)>& h,
                                  const JumpOperatorSet& jumps, const DensityMatrix& rho0,
                                  double duration, const MasterOptions& options = {});

struct SteadyState {
    DensityMatrix rho;
    double residual = 0.0;      // |L rho|_inf
    double spectral_gap = 0.0;  // second-smallest singular value of L
};

/// Null vector of the Liouvillian by SVD. Throws NonUniqueSteadyState when the
/// second-smallest singular value is not separated from zero.
SteadyState steady_state(const CMatrix& h, const JumpOperatorSet& jumps);

}  // namespace dimerqc

#endif  // DIMERQC_DYNAMICS_HPP
