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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dimerqc/dynamics.hpp"
#include "dimerqc/gates.hpp"

using namespace dimerqc;

namespace {

constexpr int kCases = 40;

DimerGeometry random_geometry(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> zeta(0.01, 0.08), theta(0.0, kPi);
    DimerGeometry g;
    g.zeta = zeta(rng);
    g.theta = theta(rng);
    return g;
}

LaserField random_field(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rabi(0.1, 5.0), phase(-kPi, kPi), det(-3.0, 3.0),
        angle(0.0, kPi);
    LaserField f;
    f.rabi_mag = rabi(rng);
    f.phase = phase(rng);
    f.detuning = det(rng);
    f.k_angle = angle(rng);
    return f;
}

CMatrix random_density(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> n;
    CMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex(n(rng), n(rng));
    CMatrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

}  // namespace

TEST(Properties, CooperativeRatesStayPhysical) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < kCases; ++i) {
        const DimerGeometry g = random_geometry(rng);
        const RddiCoefficients c = rddi_coefficients(g);
        EXPECT_LE(std::abs(c.gamma12), g.gamma * (1.0 + 1e-12));
        EXPECT_GE(c.gamma_minus(g.gamma), -1e-15);
        DimerGeometry mirror = g;
        mirror.theta = kPi - g.theta;
        EXPECT_NEAR(rddi_coefficients(mirror).delta, c.delta, 1e-9 * std::abs(c.delta));
    }
}

TEST(Properties, DriveWeightIsConserved) {
    // |Omega_+|^2 + |Omega_-|^2 = 2 |Omega|^2 for any propagation direction.
    std::mt19937_64 rng(12);
    for (int i = 0; i < kCases; ++i) {
        const DimerGeometry g = random_geometry(rng);
        const LaserField f = random_field(rng);
        const DriveCouplings d = drive_couplings(f, g);
        EXPECT_NEAR(std::norm(d.omega_plus) + std::norm(d.omega_minus),
                    2.0 * f.rabi_mag * f.rabi_mag, 1e-12 * f.rabi_mag * f.rabi_mag);
    }
}

TEST(Properties, ConditionalNormNeverGrows) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> level(0, 3);
    for (int i = 0; i < kCases; ++i) {
        const DimerGeometry g = random_geometry(rng);
        const CMatrix h = full_dimer_hamiltonian(random_field(rng), g);
        const StateEvolution ev =
            propagate_conditional(h, QuantumState::basis(4, level(rng)), 3.0);
        double last = 1.0;
        for (const StateSample& s : ev.samples) {
            EXPECT_LE(s.amplitudes.squaredNorm(), last + 1e-10);
            last = s.amplitudes.squaredNorm();
        }
    }
}

TEST(Properties, LindbladPreservesDensityMatrixAxioms) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 10; ++i) {
        const DimerGeometry g = random_geometry(rng);
        const CMatrix h = hermitian_part(full_dimer_hamiltonian(random_field(rng), g));
        const DensityEvolution ev =
            propagate_master(h, jump_operators(g), DensityMatrix(random_density(rng, 4)), 5.0);
        const CMatrix& rho = ev.final_state.entries();
        EXPECT_NEAR(rho.trace().real(), 1.0, kTraceDriftBound);
        EXPECT_LT((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_GT(ev.final_state.min_eigenvalue(), -kPositivityBound);
    }
}

TEST(Properties, SteadyStateIsStationary) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 10; ++i) {
        const DimerGeometry g = random_geometry(rng);
        const CMatrix h = hermitian_part(full_dimer_hamiltonian(random_field(rng), g));
        const JumpOperatorSet jumps = jump_operators(g);
        const SteadyState ss = steady_state(h, jumps);
        const CVector residual = liouvillian(h, jumps) * vectorize(ss.rho.entries());
        EXPECT_LT(residual.norm(), 1e-9);
        EXPECT_NEAR(ss.rho.trace(), 1.0, 1e-12);
    }
}

TEST(Properties, RotationBudgetBoundsNormLoss) {
    std::mt19937_64 rng(16);
    std::uniform_real_distribution<double> zeta(0.02, 0.05), scale(0.3, 3.0), area(0.1, kPi);
    for (int i = 0; i < kCases; ++i) {
        DimerGeometry g;
        g.zeta = zeta(rng);
        LaserField f;
        f.rabi_mag = scale(rng) / (3.0 * g.zeta * g.zeta);
        f.detuning = subradiant_resonance_detuning(f, g);
        const GateReport r = rotate_qubit(g, f, area(rng), RotationModel::Effective);
        EXPECT_LE(r.error_probability_numeric, r.budget.total) << "zeta " << g.zeta;
    }
}

TEST(Properties, RotationTruthTablesAreUnitary) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> area(0.0, 4.0 * kPi);
    for (int i = 0; i < kCases; ++i) {
        const DimerGeometry g = random_geometry(rng);
        LaserField f = random_field(rng);
        f.k_angle = std::fmod(f.k_angle, 1.2);
        const CMatrix t = rotate_qubit(g, f, area(rng)).truth_matrix();
        EXPECT_LT((t.adjoint() * t - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Properties, DetunedExchangeObeysTransferBound) {
    std::mt19937_64 rng(18);
    std::uniform_real_distribution<double> ratio(0.5, 40.0);
    const TwoDimerGeometry tg;
    const double coupling = inter_dimer_coupling_minus(tg);
    for (int i = 0; i < 12; ++i) {
        const GateReport r = swap_gate(tg, SwapFraction::Full, ratio(rng) * coupling);
        EXPECT_LE(r.diagnostics.at("max_transfer"), r.diagnostics.at("max_transfer_bound") + 1e-12);
    }
}

TEST(Properties, ReadoutErrorsGrowWithProbeTime) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> rabi(0.5, 10.0), eta(0.05, 1.0), t(0.1, 50.0);
    for (int i = 0; i < kCases; ++i) {
        const double o = rabi(rng), e = eta(rng), t1 = t(rng);
        const ReadoutReport a = readout_report(DimerGeometry{}, o, e, t1);
        const ReadoutReport b = readout_report(DimerGeometry{}, o, e, 1.5 * t1);
        EXPECT_GE(b.p_minus_fl, a.p_minus_fl);
        EXPECT_GE(a.reliability, 0.0);
        EXPECT_LE(a.reliability, 1.0);
    }
}

TEST(Properties, BudgetsScaleWithGamma) {
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> gamma(0.1, 10.0), xi(0.05, 0.25), drive(5.0, 200.0);
    for (int i = 0; i < kCases; ++i) {
        const double s = gamma(rng), x = xi(rng), w = drive(rng);
        const ErrorBudget a = cphase_error_budget(x, w);
        const ErrorBudget b = cphase_error_budget(x, w * s, s);
        EXPECT_NEAR(b.total, a.total, 1e-12 * a.total);
    }
}
