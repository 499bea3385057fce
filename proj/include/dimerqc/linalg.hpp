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

#ifndef DIMERQC_LINALG_HPP
#define DIMERQC_LINALG_HPP

// Dense complex linear algebra and time stepping for the small Hilbert spaces
// used throughout the library (dimension <= 16, superoperators <= 256).
//
// Conventions: hbar = 1 and every rate/frequency is measured in units of the
// single-atom radiative decay rate gamma.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dimerqc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Largest state-space dimension for physics paths.
inline constexpr int kMaxStateDim = 16;
/// Largest dimension accepted by kron (superoperators, product-space oracles).
inline constexpr int kMaxKronDim = 256;

bool all_finite(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol);

/// Returns (M + M^dagger) / 2.
CMatrix hermitian_part(const CMatrix& m);

/// exp(A) for a general square complex matrix. Hermitian-times-i inputs are not
/// special-cased here; see matexp.
CMatrix expm(const CMatrix& a);

/// exp(-i M t). Hermitian M goes through an eigendecomposition; everything
/// else (the non-Hermitian effective Hamiltonians are generally non-normal)
/// through Pade-13 scaling and squaring. Throws InvalidInput on non-finite
/// entries.
CMatrix matexp(const CMatrix& m, double t);

/// Kronecker product; throws InvalidInput when the result would exceed
/// kMaxKronDim.
CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix identity(int dim);

// ---------------------------------------------------------------------------
// Adaptive integration.

/// Right-hand side of dy/dt = f(t, y). Linear generators are the intended use
/// but nothing here relies on linearity.
using Derivative = std::function<void(double t, const CVector& y, CVector& dydt)>;

struct IntegrateOptions {
    double tol = 1e-9;
    double initial_step = 0.0;  // 0 picks a step from the derivative scale
    long max_steps = 50'000'000;
    /// Times (ascending, within [0, T]) at which the solution is recorded.
    std::vector<double> sample_times;
};

struct IntegrateResult {
    CVector y;
    std::vector<double> sample_times;
    std::vector<CVector> samples;
    long accepted_steps = 0;
    long rejected_steps = 0;
};

/// Dormand-Prince 5(4) with PI step-size control. The embedded error estimate
/// is held below tol per unit time, relative to max(1, |y|_inf). Throws
/// Stiffness when the step underflows, naming the time where it happened.
IntegrateResult integrate(const Derivative& f, const CVector& y0, double duration,
                          const IntegrateOptions& options);

IntegrateResult integrate(const Derivative& f, const CVector& y0, double duration,
                          double tol = 1e-9);

/// Convenience generator dy/dt = A y.
Derivative constant_generator(CMatrix a);

// ---------------------------------------------------------------------------
// Validated state types.

/// Pure (possibly sub-normalized) state. Norm^2 may decay under conditional
/// evolution but never exceeds 1 + 1e-9.
class QuantumState {
public:
    static constexpr double kNormSlack = 1e-9;

    explicit QuantumState(CVector amplitudes);

    static QuantumState basis(int dim, int index);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const CVector& amplitudes() const { return amplitudes_; }
    double norm_squared() const { return amplitudes_.squaredNorm(); }
    std::vector<double> populations() const;

private:
    CVector amplitudes_;
};

class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kTraceSlack = 1e-9;
    static constexpr double kPositivityTol = 1e-8;

    explicit DensityMatrix(CMatrix entries);

    static DensityMatrix pure(const QuantumState& psi);
    static DensityMatrix basis(int dim, int index);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const CMatrix& entries() const { return entries_; }
    double trace() const { return entries_.trace().real(); }
    double min_eigenvalue() const;
    double purity() const;
    std::vector<double> populations() const;

private:
    CMatrix entries_;
};

double min_hermitian_eigenvalue(const CMatrix& m);

}  // namespace dimerqc

#endif  // DIMERQC_LINALG_HPP
