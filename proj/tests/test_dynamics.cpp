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

#include "dimerqc/drive.hpp"
#include "dimerqc/dynamics.hpp"
#include "dimerqc/errors.hpp"
#include "dimerqc/readout.hpp"

using namespace dimerqc;

namespace {

CMatrix two_level(double rabi, double decay, double detuning = 0.0) {
    CMatrix h = CMatrix::Zero(2, 2);
    h(1, 1) = Complex(detuning, -0.5 * decay);
    h(0, 1) = h(1, 0) = rabi;
    return h;
}

CMatrix lowering() {
    CMatrix l = CMatrix::Zero(2, 2);
    l(0, 1) = 1.0;
    return l;
}

// Textbook steady state of a resonantly driven two-level atom with
// H = w (|e><g| + h.c.) and decay g: rho_ee = w^2 / (g^2/4 + 2 w^2).
double rho_ee(double w, double g) { return w * w / (g * g / 4.0 + 2.0 * w * w); }

}  // namespace

TEST(Conditional, RabiFloppingWithoutDecay) {
    const double w = 2.0;
    const StateEvolution ev = propagate_conditional(two_level(w, 0.0), QuantumState::basis(2, 0),
                                                    1.0, {0.0, 0.25, 0.5, 1.0});
    ASSERT_EQ(ev.samples.size(), 4u);
    for (const auto& s : ev.samples)
        EXPECT_NEAR(std::norm(s.amplitudes(1)), std::pow(std::sin(w * s.t), 2), 1e-12);
    EXPECT_NEAR(ev.leaked_population, 0.0, 1e-12);
}

TEST(Conditional, NormLossIsDecayedPopulation) {
    const StateEvolution ev =
        propagate_conditional(two_level(0.0, 0.3), QuantumState(CVector::Ones(2) / std::sqrt(2.0)), 2.0);
    EXPECT_NEAR(ev.leaked_population, 0.5 * (1.0 - std::exp(-0.6)), 1e-12);
}

TEST(Conditional, GainingHamiltonianRejected) {
    CMatrix h = two_level(1.0, 0.0);
    h(1, 1) = Complex(0.0, 0.5);
    try {
        propagate_conditional(h, QuantumState::basis(2, 1), 1.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ModelError);
    }
}

TEST(Conditional, TimeDependentMatchesConstant) {
    const CMatrix h = two_level(1.3, 0.2, 0.4);
    const StateEvolution a = propagate_conditional(h, QuantumState::basis(2, 0), 3.0);
    const StateEvolution b = propagate_conditional([&](double) { return h; },
                                                   QuantumState::basis(2, 0), 3.0, 1e-11);
    EXPECT_LT((a.final_state.amplitudes() - b.final_state.amplitudes()).norm(), 1e-8);
}

TEST(Liouvillian, VectorizationRoundTrip) {
    std::mt19937 rng(5);
    std::normal_distribution<double> d;
    CMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Complex(d(rng), d(rng));
    EXPECT_EQ(unvectorize(vectorize(m), 3), m);
}

TEST(Liouvillian, NoRecyclingReproducesConditionalEvolution) {
    const CMatrix h = two_level(0.8, 0.5, 0.1);
    const JumpOperatorSet jumps = {{lowering(), 0.5, "decay"}};
    const CMatrix l = liouvillian(hermitian_part(h), jumps, false);
    const CMatrix rho0 = DensityMatrix::basis(2, 0).entries();
    const CMatrix rho = unvectorize(expm(l * 1.7) * vectorize(rho0), 2);
    const CVector psi = matexp(h, 1.7).col(0);
    EXPECT_LT((rho - psi * psi.adjoint()).norm(), 1e-12);
}

TEST(Master, DecayFromExcitedState) {
    const JumpOperatorSet jumps = {{lowering(), 1.0, "decay"}};
    const DensityEvolution ev =
        propagate_master(CMatrix(CMatrix::Zero(2, 2)), jumps, DensityMatrix::basis(2, 1), 2.0);
    EXPECT_NEAR(ev.final_state.populations()[1], std::exp(-2.0), 1e-10);
    EXPECT_NEAR(ev.final_state.trace(), 1.0, 1e-12);
}

TEST(Master, ExponentialAndRungeKuttaAgree) {
    const CMatrix h = hermitian_part(two_level(1.1, 0.0, 0.3));
    const JumpOperatorSet jumps = {{lowering(), 0.7, "decay"}};
    MasterOptions exp_opt, rk_opt;
    exp_opt.method = MasterOptions::Method::Exponential;
    rk_opt.method = MasterOptions::Method::RungeKutta;
    rk_opt.tol = 1e-11;
    const DensityEvolution a = propagate_master(h, jumps, DensityMatrix::basis(2, 0), 4.0, exp_opt);
    const DensityEvolution b = propagate_master(h, jumps, DensityMatrix::basis(2, 0), 4.0, rk_opt);
    EXPECT_LT((a.final_state.entries() - b.final_state.entries()).norm(), 1e-8);
}

TEST(Master, RejectsNonHermitianHamiltonian) {
    EXPECT_THROW(propagate_master(two_level(1.0, 0.5), {}, DensityMatrix::basis(2, 0), 1.0), Error);
}

TEST(Master, InvariantsOnDimerUnderProbe) {
    const DimerGeometry g;
    const LaserField f = probe_field(g, 3.0);
    MasterOptions opt;
    for (int i = 0; i <= 10; ++i) opt.sample_times.push_back(2.0 * i);
    const DensityEvolution ev = propagate_master(hermitian_part(full_dimer_hamiltonian(f, g)),
                                                 jump_operators(g), DensityMatrix::basis(4, kMinus),
                                                 20.0, opt);
    for (const auto& s : ev.samples) {
        EXPECT_NEAR(s.rho.trace().real(), 1.0, kTraceDriftBound);
        EXPECT_LT((s.rho - s.rho.adjoint()).norm(), 1e-10);
        EXPECT_GE(min_hermitian_eigenvalue(hermitian_part(s.rho)), -kPositivityBound);
    }
}

TEST(SteadyState, DrivenTwoLevelAtom) {
    for (double w : {0.1, 0.5, 1.0, 3.0}) {
        const SteadyState ss = steady_state(hermitian_part(two_level(w, 0.0)),
                                            {{lowering(), 2.0, "decay"}});
        EXPECT_NEAR(ss.rho.populations()[1], rho_ee(w, 2.0), 1e-10) << "w " << w;
        EXPECT_LT(ss.residual, 1e-10);
    }
}

TEST(SteadyState, DegenerateNullSpaceRejected) {
    try {
        steady_state(CMatrix::Zero(2, 2), {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonUniqueSteadyState);
    }
}

TEST(SampleGrid, LinearAndLogarithmic) {
    const std::vector<double> lin = default_sample_grid(10.0, 1.0, 2.0, 11);
    ASSERT_EQ(lin.size(), 11u);
    EXPECT_DOUBLE_EQ(lin.back(), 10.0);
    EXPECT_NEAR(lin[1], 1.0, 1e-12);
    const std::vector<double> lg = default_sample_grid(100.0, 1e-3, 1e3, 50);
    EXPECT_EQ(lg.front(), 0.0);
    EXPECT_DOUBLE_EQ(lg.back(), 100.0);
    EXPECT_LT(lg[1], 1e-3);
}
