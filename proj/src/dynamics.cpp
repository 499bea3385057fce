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

#include "dimerqc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "dimerqc/errors.hpp"

namespace dimerqc {

std::vector<double> default_sample_grid(double duration, double rate_min, double rate_max,
                                        int points) {
    if (points < 2) throw Error(ErrorKind::InvalidInput, "sample grid needs at least 2 points");
    if (!(duration > 0.0)) return {0.0};
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    const bool multiscale = rate_min > 0.0 && rate_max > 0.0 && rate_max / rate_min > 100.0;
    const double start = multiscale ? std::min(0.1 / rate_max, duration / points) : 0.0;
    if (multiscale && start > 0.0 && start < duration) {
        grid.push_back(0.0);
        const double ratio = std::log(duration / start);
        for (int i = 0; i < points - 1; ++i)
            grid.push_back(start * std::exp(ratio * i / (points - 2)));
        grid.back() = duration;
    } else {
        for (int i = 0; i < points; ++i) grid.push_back(duration * i / (points - 1));
    }
    return grid;
}

namespace {

constexpr double kNormGrowthBound = 1e-8;

void check_square(const CMatrix& h, int dim, const char* who) {
    if (h.rows() != dim || h.cols() != dim) {
        std::ostringstream msg;
        msg << who << ": Hamiltonian is " << h.rows() << "x" << h.cols() << ", state has dim "
            << dim;
        throw Error(ErrorKind::InvalidInput, msg.str());
    }
}

void check_norm(double norm2, double initial, double t) {
    if (norm2 > initial + kNormGrowthBound) {
        std::ostringstream msg;
        msg << "norm grew from " << initial << " to " << norm2 << " at t = " << t
            << "; Hamiltonian is not dissipative";
        throw Error(ErrorKind::ModelError, msg.str());
    }
}

void check_duration(double duration) {
    if (!(duration >= 0.0) || !std::isfinite(duration))
        throw Error(ErrorKind::InvalidInput, "duration must be finite and >= 0");
}

// The no-jump norm may overshoot 1 by roundoff; clamp into the QuantumState
// invariant once the growth bound has been enforced.
QuantumState clamp_state(CVector v) {
    const double n2 = v.squaredNorm();
    if (n2 > 1.0) v /= std::sqrt(n2);
    return QuantumState(std::move(v));
}

}  // namespace

StateEvolution propagate_conditional(const CMatrix& h, const QuantumState& psi0, double duration,
                                     const std::vector<double>& sample_times) {
    check_duration(duration);
    check_square(h, psi0.dim(), "propagate_conditional");
    const double initial = psi0.norm_squared();

    std::vector<StateSample> samples;
    samples.reserve(sample_times.size());
    CVector psi = psi0.amplitudes();
    double t_prev = 0.0;
    // Consecutive equal spacings reuse the last propagator.
    CMatrix step;
    double step_dt = -1.0;
    for (double t : sample_times) {
        if (t < t_prev || t > duration)
            throw Error(ErrorKind::InvalidInput, "sample times must be ascending within [0, T]");
        const double dt = t - t_prev;
        if (dt > 0.0) {
            if (std::abs(dt - step_dt) > 1e-15 * std::max(1.0, dt)) {
                step = matexp(h, dt);
                step_dt = dt;
            }
            psi = step * psi;
        }
        check_norm(psi.squaredNorm(), initial, t);
        samples.push_back({t, psi});
        t_prev = t;
    }
    if (duration > t_prev) psi = matexp(h, duration - t_prev) * psi;
    check_norm(psi.squaredNorm(), initial, duration);

    const double final_norm = psi.squaredNorm();
    return {clamp_state(std::move(psi)), initial - final_norm, std::move(samples)};
}

StateEvolution propagate_conditional(const std::function<CMatrix(double)>& h,
                                     const QuantumState& psi0, double duration, double tol,
                                     const std::vector<double>& sample_times) {
    check_duration(duration);
    check_square(h(0.0), psi0.dim(), "propagate_conditional");
    const double initial = psi0.norm_squared();
    IntegrateOptions options;
    options.tol = tol;
    options.sample_times = sample_times;
    const Derivative f = [&h](double t, const CVector& y, CVector& dydt) {
        dydt.noalias() = -kI * (h(t) * y);
    };
    IntegrateResult r = integrate(f, psi0.amplitudes(), duration, options);

    std::vector<StateSample> samples;
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        check_norm(r.samples[i].squaredNorm(), initial, r.sample_times[i]);
        samples.push_back({r.sample_times[i], r.samples[i]});
    }
    check_norm(r.y.squaredNorm(), initial, duration);
    const double final_norm = r.y.squaredNorm();
    return {clamp_state(std::move(r.y)), initial - final_norm, std::move(samples)};
}

// ---------------------------------------------------------------------------

CVector vectorize(const CMatrix& rho) {
    return Eigen::Map<const CVector>(rho.data(), rho.size());
}

CMatrix unvectorize(const CVector& v, int dim) {
    if (v.size() != static_cast<Eigen::Index>(dim) * dim)
        throw Error(ErrorKind::InvalidInput, "unvectorize: size mismatch");
    return Eigen::Map<const CMatrix>(v.data(), dim, dim);
}

CMatrix liouvillian(const CMatrix& h, const JumpOperatorSet& jumps, bool include_recycling) {
    const int n = static_cast<int>(h.rows());
    if (h.rows() != h.cols()) throw Error(ErrorKind::InvalidInput, "liouvillian: H not square");
    const CMatrix eye = identity(n);
    // vec(A X B) = (B^T kron A) vec(X)
    CMatrix l = -kI * (kron(eye, h) - kron(h.transpose(), eye));
    for (const auto& j : jumps) {
        if (j.op.rows() != n || j.op.cols() != n)
            throw Error(ErrorKind::InvalidInput, "liouvillian: jump operator dimension mismatch");
        if (j.rate < 0.0) throw Error(ErrorKind::InvalidInput, "liouvillian: negative jump rate");
        const CMatrix ldl = j.op.adjoint() * j.op;
        if (include_recycling) l += j.rate * kron(j.op.conjugate(), j.op);
        l -= 0.5 * j.rate * (kron(eye, ldl) + kron(ldl.transpose(), eye));
    }
    return l;
}

namespace {

DensityMatrix finalize_density(CMatrix rho, double initial_trace, bool trace_preserving,
                               double t) {
    const double herm_err = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > kTraceDriftBound) {
        std::ostringstream msg;
        msg << "Hermiticity lost (" << herm_err << ") at t = " << t;
        throw Error(ErrorKind::IntegratorAccuracy, msg.str());
    }
    rho = hermitian_part(rho);
    const double tr = rho.trace().real();
    if (trace_preserving && std::abs(tr - initial_trace) > kTraceDriftBound) {
        std::ostringstream msg;
        msg << "trace drifted from " << initial_trace << " to " << tr << " at t = " << t;
        throw Error(ErrorKind::IntegratorAccuracy, msg.str());
    }
    const double min_eig = min_hermitian_eigenvalue(rho);
    if (min_eig < -kPositivityBound) {
        std::ostringstream msg;
        msg << "positivity violated (min eigenvalue " << min_eig << ") at t = " << t;
        throw Error(ErrorKind::IntegratorAccuracy, msg.str());
    }
    if (tr > 1.0) rho /= tr;
    if (min_eig < 0.0) {
        // Shift the sub-1e-7 negative tail into the type's tolerance band.
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho);
        Eigen::VectorXd w = eig.eigenvalues().cwiseMax(0.0);
        const double scale = rho.trace().real() / w.sum();
        rho = eig.eigenvectors() * (w * scale).asDiagonal() * eig.eigenvectors().adjoint();
        rho = hermitian_part(rho);
    }
    return DensityMatrix(std::move(rho));
}

void check_master_inputs(const CMatrix& h, const DensityMatrix& rho0, double duration) {
    check_duration(duration);
    check_square(h, rho0.dim(), "propagate_master");
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (!is_hermitian(h, 1e-12 * scale))
        throw Error(ErrorKind::InvalidInput,
                    "propagate_master: H must be Hermitian (decay enters through the jumps)");
}

bool trace_preserving(const MasterOptions& options, const JumpOperatorSet& jumps) {
    return options.include_recycling || jumps.empty();
}

}  // namespace

DensityEvolution propagate_master(const CMatrix& h, const JumpOperatorSet& jumps,
                                  const DensityMatrix& rho0, double duration,
                                  const MasterOptions& options) {
    check_master_inputs(h, rho0, duration);
    if (options.method == MasterOptions::Method::RungeKutta) {
        return propagate_master([&h](double) { return h; }, jumps, rho0, duration, options);
    }
    const int n = rho0.dim();
    const CMatrix l = liouvillian(h, jumps, options.include_recycling);
    const double initial_trace = rho0.trace();
    const bool conserving = trace_preserving(options, jumps);

    std::vector<DensitySample> samples;
    CVector v = vectorize(rho0.entries());
    double t_prev = 0.0;
    CMatrix step;
    double step_dt = -1.0;
    for (double t : options.sample_times) {
        if (t < t_prev || t > duration)
            throw Error(ErrorKind::InvalidInput, "sample times must be ascending within [0, T]");
        const double dt = t - t_prev;
        if (dt > 0.0) {
            if (std::abs(dt - step_dt) > 1e-15 * std::max(1.0, dt)) {
                step = expm(l * dt);
                step_dt = dt;
            }
            v = step * v;
        }
        samples.push_back({t, unvectorize(v, n)});
        t_prev = t;
    }
    if (duration > t_prev) v = expm(l * (duration - t_prev)) * v;
    CMatrix rho = unvectorize(v, n);
    const double final_trace = rho.trace().real();
    return {finalize_density(std::move(rho), initial_trace, conserving, duration),
            initial_trace - final_trace, std::move(samples)};
}

DensityEvolution propagate_master(const std::function<CMatrix(double)>& h,
                                  const JumpOperatorSet& jumps, const DensityMatrix& rho0,
                                  double duration, const MasterOptions& options) {
    check_master_inputs(h(0.0), rho0, duration);
    const int n = rho0.dim();
    // Time-independent dissipator part; the commutator is rebuilt per call.
    CMatrix dissipator = liouvillian(CMatrix::Zero(n, n), jumps, options.include_recycling);
    const CMatrix eye = identity(n);
    const Derivative f = [&, n](double t, const CVector& y, CVector& dydt) {
        const CMatrix ht = h(t);
        const auto rho = Eigen::Map<const CMatrix>(y.data(), n, n);
        CMatrix comm = -kI * (ht * rho - rho * ht);
        dydt.noalias() = dissipator * y;
        dydt += Eigen::Map<const CVector>(comm.data(), comm.size());
    };
    IntegrateOptions io;
    io.tol = options.tol;
    io.sample_times = options.sample_times;
    IntegrateResult r = integrate(f, vectorize(rho0.entries()), duration, io);

    std::vector<DensitySample> samples;
    for (std::size_t i = 0; i < r.samples.size(); ++i)
        samples.push_back({r.sample_times[i], unvectorize(r.samples[i], n)});
    CMatrix rho = unvectorize(r.y, n);
    const double initial_trace = rho0.trace();
    const double final_trace = rho.trace().real();
    return {finalize_density(std::move(rho), initial_trace, trace_preserving(options, jumps),
                             duration),
            initial_trace - final_trace, std::move(samples)};
}

SteadyState steady_state(const CMatrix& h, const JumpOperatorSet& jumps) {
    const int n = static_cast<int>(h.rows());
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (!is_hermitian(h, 1e-12 * scale))
        throw Error(ErrorKind::InvalidInput, "steady_state: H must be Hermitian");
    const CMatrix l = liouvillian(h, jumps, true);
    Eigen::BDCSVD<CMatrix> svd(l, Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const Eigen::Index m = sigma.size();
    const double sigma_max = sigma[0];
    const double second = m >= 2 ? sigma[m - 2] : sigma_max;
    if (!(second > 1e-11 * sigma_max)) {
        std::ostringstream msg;
        msg << "Liouvillian null space is degenerate (second singular value " << second
            << ", largest " << sigma_max << ")";
        throw Error(ErrorKind::NonUniqueSteadyState, msg.str());
    }
    CVector v = svd.matrixV().col(m - 1);
    CMatrix rho = unvectorize(v, n);
    rho /= rho.trace();
    rho = hermitian_part(rho);
    const double residual = (l * vectorize(rho)).cwiseAbs().maxCoeff();
    return {DensityMatrix(std::move(rho)), residual, second};
}

}  // namespace dimerqc
