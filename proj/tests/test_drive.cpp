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

#include "dimerqc/drive.hpp"
#include "dimerqc/errors.hpp"

using namespace dimerqc;

namespace {

LaserField field(double rabi, double k_angle = 0.0, double phase = 0.0) {
    LaserField f;
    f.rabi_mag = rabi;
    f.k_angle = k_angle;
    f.phase = phase;
    return f;
}

}  // namespace

TEST(Couplings, MatchReferenceAtUnitDrive) {
    const DriveCouplings c = drive_couplings(field(1.0), DimerGeometry{});
    EXPECT_NEAR(c.omega_minus.real(), 0.00038498470309184798, 1e-16);
    EXPECT_NEAR(c.omega_minus.imag(), 0.023330288793691687, 1e-16);
    EXPECT_NEAR(c.omega_plus.real(), 1.4138285776700032, 1e-15);
    EXPECT_NEAR(c.omega_plus.imag(), -0.023330288793691687, 1e-16);
}

TEST(Couplings, SumRuleAndScaling) {
    const DriveCouplings c = drive_couplings(field(300.0), DimerGeometry{});
    EXPECT_NEAR(std::abs(c.omega_minus), 7.0000394968657396, 1e-12);
    EXPECT_NEAR(std::norm(c.omega_plus) + std::norm(c.omega_minus), 2.0 * 300.0 * 300.0, 1e-8);
    EXPECT_NEAR(std::abs(c.omega_minus), 300.0 * 0.033 / std::sqrt(2.0), 1e-3);
}

TEST(Couplings, PerpendicularDriveLeavesSubradiantDark) {
    const DriveCouplings c = drive_couplings(field(300.0, kHalfPi), DimerGeometry{});
    EXPECT_EQ(c.omega_minus, Complex(0.0, 0.0));
    EXPECT_NEAR(std::abs(c.omega_plus), 300.0 * std::sqrt(2.0), 1e-10);
}

TEST(Couplings, LaserPhaseRotatesBoth) {
    const DimerGeometry g;
    const DriveCouplings a = drive_couplings(field(2.0), g);
    const DriveCouplings b = drive_couplings(field(2.0, 0.0, 0.7), g);
    EXPECT_LT(std::abs(b.omega_minus - a.omega_minus * std::exp(kI * 0.7)), 1e-15);
    EXPECT_LT(std::abs(b.omega_plus - a.omega_plus * std::exp(kI * 0.7)), 1e-14);
}

TEST(Couplings, InvalidFieldRejected) {
    EXPECT_THROW(drive_couplings(field(-1.0), DimerGeometry{}), Error);
    EXPECT_THROW(drive_couplings(field(std::nan("")), DimerGeometry{}), Error);
}

TEST(FullHamiltonian, StructureAndDecay) {
    const DimerGeometry g;
    LaserField f = field(300.0);
    f.detuning = 123.0;
    const CMatrix h = full_dimer_hamiltonian(f, g);
    const DriveCouplings c = drive_couplings(f, g);
    EXPECT_EQ(h(kMinus, kG), c.omega_minus);
    EXPECT_EQ(h(kE, kMinus), -c.omega_minus);
    EXPECT_EQ(h(kE, kPlus), c.omega_plus);
    EXPECT_NEAR(h(kE, kE).real(), 246.0, 1e-12);
    // Anti-Hermitian part is exactly -i/2 sum rate L^dag L of the jump set.
    const CMatrix anti = h - hermitian_part(h);
    EXPECT_LT((anti - anti_hermitian_from_jumps(jump_operators(g), 4)).norm(), 1e-14);
}

TEST(Jumps, RatesAddUpForDoublyExcitedState) {
    const DimerGeometry g;
    const JumpOperatorSet j = jump_operators(g);
    ASSERT_EQ(j.size(), 4u);
    double from_e = 0.0;
    for (const auto& op : j)
        if (std::abs(op.op(kPlus, kE)) > 0.0 || std::abs(op.op(kMinus, kE)) > 0.0) from_e += op.rate;
    EXPECT_NEAR(from_e, 2.0, 1e-14);
}

TEST(Effective, SubradiantModelAtOperatingPoint) {
    const DimerGeometry g;
    LaserField f = field(300.0);
    f.detuning = subradiant_resonance_detuning(f, g);
    const EffectiveHamiltonian eff = effective_minus_hamiltonian(f, g);
    EXPECT_TRUE(eff.valid) << (eff.warnings.empty() ? "" : eff.warnings.front());
    EXPECT_NEAR(eff.gamma_ground, 2.0678106817647652e-4, 1e-15);
    EXPECT_NEAR(std::abs(eff.h(1, 0)), 7.0000394968657396, 1e-12);
    EXPECT_NEAR(-2.0 * eff.h(1, 1).imag(), 2.1778729404522434e-4, 1e-15);
}

TEST(Effective, OffResonanceIsFlagged) {
    const DimerGeometry g;
    LaserField f = field(300.0);
    f.detuning = 0.0;
    const EffectiveHamiltonian eff = effective_minus_hamiltonian(f, g);
    EXPECT_FALSE(eff.valid);
    EXPECT_FALSE(eff.warnings.empty());
}

TEST(Effective, StrongDriveBreaksHierarchy) {
    const DimerGeometry g;
    LaserField f = field(5000.0);
    f.detuning = subradiant_resonance_detuning(f, g);
    EXPECT_FALSE(effective_minus_hamiltonian(f, g).valid);
}

TEST(Effective, SuperradiantModel) {
    const DimerGeometry g;
    LaserField f = field(3.0);
    f.detuning = superradiant_resonance_detuning(f, g);
    const EffectiveHamiltonian eff = effective_plus_hamiltonian(f, g);
    EXPECT_TRUE(eff.valid);
    EXPECT_NEAR(-2.0 * eff.h(1, 1).imag(), 2.0 - 2.1778729404522434e-4, 1e-14);
    EXPECT_NEAR(f.detuning, -20858.501224549922, 1.0);
}

TEST(SteadyPopulation, Limits) {
    EXPECT_EQ(superradiant_steady_population(0.0, 2.0), 0.0);
    EXPECT_NEAR(superradiant_steady_population(1e6, 2.0), 0.5, 1e-10);
    EXPECT_NEAR(superradiant_steady_population(1.0, 2.0), 1.0 / 3.0, 1e-15);
}
