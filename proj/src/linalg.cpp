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

#include "dimerqc/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dimerqc/errors.hpp"

namespace dimerqc {

bool all_finite(const CMatrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Complex z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

CMatrix identity(int dim) { return CMatrix::Identity(dim, dim); }

namespace {

double one_norm(const CMatrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

// Pade approximant coefficients and the 1-norm thresholds below which each
// order is accurate to unit roundoff (Higham 2005).
constexpr std::array<double, 4> kB3 = {120., 60., 12., 1.};
constexpr std::array<double, 6> kB5 = {30240., 15120., 3360., 420., 30., 1.};
constexpr std::array<double, 8> kB7 = {17297280., 8648640., 1995840., 277200.,
                                       25200.,    1512.,    56.,      1.};
constexpr std::array<double, 10> kB9 = {17643225600., 8821612800., 2075673600., 302702400.,
                                        30270240.,    2162160.,    110880.,     3960.,
                                        90.,          1.};
constexpr std::array<double, 14> kB13 = {
    64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
    129060195264000.,   10559470521600.,    670442572800.,     33522128640.,
    1323241920.,        40840800.,          960960.,           16380.,
    182.,               1.};
constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0,
                                          5.371920351148152e0};

template <std::size_t N>
CMatrix pade_low(const CMatrix& a, const std::array<double, N>& b) {
    const Eigen::Index n = a.rows();
    const CMatrix eye = CMatrix::Identity(n, n);
    const CMatrix a2 = a * a;
    CMatrix u = b[1] * eye;
    CMatrix v = b[0] * eye;
    CMatrix power = eye;
    for (std::size_t k = 2; k + 1 < N + 1; k += 2) {
        power = power * a2;
        v += b[k] * power;
        if (k + 1 < N) u += b[k + 1] * power;
    }
    u = a * u;
    return (v - u).partialPivLu().solve(v + u);
}

CMatrix pade13(const CMatrix& a) {
    const Eigen::Index n = a.rows();
    const CMatrix eye = CMatrix::Identity(n, n);
    const CMatrix a2 = a * a;
    const CMatrix a4 = a2 * a2;
    const CMatrix a6 = a4 * a2;
    const auto& b = kB13;
    CMatrix u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
    u += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * eye;
    u = a * u;
    CMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
    v += b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * eye;
    return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

CMatrix expm(const CMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidInput, "expm: matrix is not square");
    if (!all_finite(a)) throw Error(ErrorKind::InvalidInput, "expm: non-finite entries");
    const double norm = one_norm(a);
    if (norm <= kTheta[0]) return pade_low(a, kB3);
    if (norm <= kTheta[1]) return pade_low(a, kB5);
    if (norm <= kTheta[2]) return pade_low(a, kB7);
    if (norm <= kTheta[3]) return pade_low(a, kB9);
    int squarings = 0;
    if (norm > kTheta[4]) squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta[4])));
    CMatrix r = pade13(a / std::ldexp(1.0, squarings));
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

CMatrix matexp(const CMatrix& m, double t) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "matexp: matrix is not square");
    if (!all_finite(m) || !std::isfinite(t))
        throw Error(ErrorKind::InvalidInput, "matexp: non-finite entries");
    if (m.size() == 0) return m;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (is_hermitian(m, 1e-14 * scale)) {
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(m));
        const Eigen::VectorXd& w = eig.eigenvalues();
        CVector phases(w.size());
        for (Eigen::Index k = 0; k < w.size(); ++k) phases[k] = std::exp(-kI * (w[k] * t));
        const CMatrix& vecs = eig.eigenvectors();
        return vecs * phases.asDiagonal() * vecs.adjoint();
    }
    return expm(-kI * t * m);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > kMaxKronDim || cols > kMaxKronDim) {
        std::ostringstream msg;
        msg << "kron: result " << rows << "x" << cols << " exceeds " << kMaxKronDim;
        throw Error(ErrorKind::InvalidInput, msg.str());
    }
    CMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
constexpr double a21 = 1. / 5;
constexpr double a31 = 3. / 40, a32 = 9. / 40;
constexpr double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
constexpr double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
                 a54 = -212. / 729;
constexpr double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247, a64 = 49. / 176,
                 a65 = -5103. / 18656;
constexpr double a71 = 35. / 384, a73 = 500. / 1113, a74 = 125. / 192, a75 = -2187. / 6784,
                 a76 = 11. / 84;
constexpr double e1 = 71. / 57600, e3 = -71. / 16695, e4 = 71. / 1920, e5 = -17253. / 339200,
                 e6 = 22. / 525, e7 = -1. / 40;

double inf_norm(const CVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

IntegrateResult integrate(const Derivative& f, const CVector& y0, double duration,
                          const IntegrateOptions& options) {
    if (!(options.tol > 0.0)) throw Error(ErrorKind::InvalidInput, "integrate: tol must be > 0");
    if (!(duration >= 0.0) || !std::isfinite(duration))
        throw Error(ErrorKind::InvalidInput, "integrate: duration must be finite and >= 0");
    for (std::size_t i = 0; i < options.sample_times.size(); ++i) {
        const double s = options.sample_times[i];
        if (s < 0.0 || s > duration || (i > 0 && s < options.sample_times[i - 1]))
            throw Error(ErrorKind::InvalidInput,
                        "integrate: sample times must be ascending within [0, T]");
    }

    IntegrateResult result;
    result.sample_times = options.sample_times;
    result.samples.reserve(options.sample_times.size());

    const Eigen::Index n = y0.size();
    CVector y = y0;
    double t = 0.0;
    std::size_t next_sample = 0;
    auto record_samples_at = [&](double now) {
        while (next_sample < options.sample_times.size() &&
               options.sample_times[next_sample] <= now) {
            result.samples.push_back(y);
            ++next_sample;
        }
    };
    record_samples_at(0.0);

    if (duration == 0.0) {
        result.y = y;
        return result;
    }

    CVector k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y_new(n), err(n);
    f(t, y, k1);

    double h = options.initial_step;
    if (!(h > 0.0)) {
        const double rate = inf_norm(k1) / std::max(inf_norm(y), 1e-300);
        h = rate > 0.0 ? 0.01 / rate : duration;
    }
    h = std::min(h, duration);

    constexpr double kSafety = 0.9;
    constexpr double kAlpha = 0.22;
    constexpr double kBeta = 0.04;
    double err_prev = 1e-4;
    long steps = 0;

    while (t < duration) {
        double target = duration;
        if (next_sample < options.sample_times.size())
            target = std::min(target, options.sample_times[next_sample]);
        bool hits_target = false;
        if (t + h >= target) {
            h = target - t;
            hits_target = true;
        }
        if (h <= 1e-13 * std::max(1.0, std::abs(t))) {
            if (hits_target && h <= 0.0) {
                t = target;
                record_samples_at(t);
                continue;
            }
            std::ostringstream msg;
            msg << "step size underflow (h = " << h << ") at t = " << t;
            throw Error(ErrorKind::Stiffness, msg.str());
        }
        if (++steps > options.max_steps) {
            std::ostringstream msg;
            msg << "step budget of " << options.max_steps << " exhausted at t = " << t;
            throw Error(ErrorKind::Stiffness, msg.str());
        }

        tmp = y + h * a21 * k1;
        f(t + c2 * h, tmp, k2);
        tmp = y + h * (a31 * k1 + a32 * k2);
        f(t + c3 * h, tmp, k3);
        tmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(t + c4 * h, tmp, k4);
        tmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(t + c5 * h, tmp, k5);
        tmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(t + h, tmp, k6);
        y_new = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
        f(t + h, y_new, k7);
        err = e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7;

        // err is (local error)/h, i.e. error per unit time.
        const double scale = std::max({1.0, inf_norm(y), inf_norm(y_new)});
        double err_norm = inf_norm(err) / (options.tol * scale);
        if (!std::isfinite(err_norm)) err_norm = 1e10;

        if (err_norm <= 1.0) {
            t = hits_target ? target : t + h;
            y = y_new;
            k1 = k7;
            ++result.accepted_steps;
            record_samples_at(t);
            const double e = std::max(err_norm, 1e-10);
            double fac = kSafety * std::pow(e, -kAlpha) * std::pow(err_prev, kBeta);
            fac = std::clamp(fac, 0.2, 5.0);
            err_prev = e;
            h *= fac;
        } else {
            ++result.rejected_steps;
            const double fac = std::max(0.2, kSafety * std::pow(err_norm, -kAlpha));
            h *= fac;
        }
    }
    record_samples_at(duration);
    result.y = y;
    return result;
}

IntegrateResult integrate(const Derivative& f, const CVector& y0, double duration, double tol) {
    IntegrateOptions options;
    options.tol = tol;
    return integrate(f, y0, duration, options);
}

Derivative constant_generator(CMatrix a) {
    return [a = std::move(a)](double, const CVector& y, CVector& dydt) { dydt.noalias() = a * y; };
}

// ---------------------------------------------------------------------------

namespace {

void require_finite(const CMatrix& m, const char* what) {
    if (!all_finite(m)) throw Error(ErrorKind::InvalidInput, std::string(what) + ": non-finite entries");
}

}  // namespace

QuantumState::QuantumState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) throw Error(ErrorKind::InvalidInput, "QuantumState: empty");
    require_finite(amplitudes_, "QuantumState");
    if (amplitudes_.squaredNorm() > 1.0 + kNormSlack) {
        std::ostringstream msg;
        msg << "QuantumState: norm^2 = " << amplitudes_.squaredNorm() << " exceeds 1";
        throw Error(ErrorKind::InvalidInput, msg.str());
    }
}

QuantumState QuantumState::basis(int dim, int index) {
    if (dim <= 0 || index < 0 || index >= dim)
        throw Error(ErrorKind::InvalidInput, "QuantumState::basis: index out of range");
    CVector v = CVector::Zero(dim);
    v[index] = 1.0;
    return QuantumState(std::move(v));
}

std::vector<double> QuantumState::populations() const {
    std::vector<double> p(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) p[static_cast<std::size_t>(i)] = std::norm(amplitudes_[i]);
    return p;
}

double min_hermitian_eigenvalue(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(m), Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff();
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
        throw Error(ErrorKind::InvalidInput, "DensityMatrix: must be square and non-empty");
    require_finite(entries_, "DensityMatrix");
    if (!is_hermitian(entries_, kHermitianTol))
        throw Error(ErrorKind::InvalidInput, "DensityMatrix: not Hermitian");
    const double tr = entries_.trace().real();
    if (tr < 0.0 || tr > 1.0 + kTraceSlack) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace " << tr << " outside [0, 1]";
        throw Error(ErrorKind::InvalidInput, msg.str());
    }
    if (min_hermitian_eigenvalue(entries_) < -kPositivityTol)
        throw Error(ErrorKind::InvalidInput, "DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const QuantumState& psi) {
    const CVector& v = psi.amplitudes();
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::basis(int dim, int index) {
    return pure(QuantumState::basis(dim, index));
}

double DensityMatrix::min_eigenvalue() const { return min_hermitian_eigenvalue(entries_); }

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

std::vector<double> DensityMatrix::populations() const {
    std::vector<double> p(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) p[static_cast<std::size_t>(i)] = entries_(i, i).real();
    return p;
}

}  // namespace dimerqc
