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

#include "dimerqc/gates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dimerqc/errors.hpp"
#include "dimerqc/optimize.hpp"

namespace dimerqc {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double max_norm_loss(const CMatrix& u, const std::vector<int>& inputs) {
    double worst = 0.0;
    for (int k : inputs) worst = std::max(worst, 1.0 - u.col(k).squaredNorm());
    return std::max(worst, 0.0);
}

CMatrix block(const CMatrix& u, const std::vector<int>& idx) {
    const int n = static_cast<int>(idx.size());
    CMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = u(idx[r], idx[c]);
    return out;
}

std::vector<TruthTableEntry> table_from(const CMatrix& u, const std::vector<std::string>& names) {
    std::vector<TruthTableEntry> out;
    for (int k = 0; k < u.cols(); ++k) out.push_back({names[k], u.col(k)});
    return out;
}

ErrorBudget scaled_budget(const ErrorBudget& b, double factor) {
    ErrorBudget out;
    for (const auto& c : b.components) out.add(c.name, c.probability * factor);
    out.values = b.values;
    out.warnings = b.warnings;
    out.upper_bound = b.upper_bound;
    return out;
}

}  // namespace

CMatrix GateReport::truth_matrix() const {
    if (truth_table.empty()) return CMatrix();
    const int n = static_cast<int>(truth_table.front().output.size());
    CMatrix m(n, static_cast<int>(truth_table.size()));
    for (std::size_t k = 0; k < truth_table.size(); ++k)
        m.col(static_cast<int>(k)) = truth_table[k].output;
    return m;
}

double average_gate_fidelity(const CMatrix& m, const CMatrix& target) {
    if (m.rows() != target.rows() || m.cols() != target.cols() || m.rows() != m.cols())
        throw Error(ErrorKind::InvalidInput, "average_gate_fidelity: shape mismatch");
    const double d = static_cast<double>(m.rows());
    const double tr_mm = (m * m.adjoint()).trace().real();
    const double overlap = std::norm((target.adjoint() * m).trace());
    return clamp01((tr_mm + overlap) / (d * (d + 1.0)));
}

double concurrence(const CVector& psi) {
    if (psi.size() != 4) throw Error(ErrorKind::InvalidInput, "concurrence needs a 4-vector");
    const double n = psi.squaredNorm();
    if (!(n > 0.0)) throw Error(ErrorKind::InvalidInput, "concurrence of the zero vector");
    return 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2)) / n;
}

GateReport rotate_qubit(const DimerGeometry& g, const LaserField& f, double pulse_area,
                        RotationModel model) {
    g.validate();
    f.validate();
    if (!(pulse_area >= 0.0) || !std::isfinite(pulse_area))
        throw Error(ErrorKind::InvalidInput, "pulse area must be finite and >= 0");
    const DriveCouplings c = drive_couplings(f, g);
    const double w = std::abs(c.omega_minus);
    if (!(w > 0.0))
        throw Error(ErrorKind::NoCoupling,
                    "Omega_- = 0: the drive does not couple |G> to |-> (perpendicular k)");

    GateReport r;
    r.name = "rotation";
    r.duration = pulse_area / w;
    r.nominal_duration = r.duration;

    const double alpha = std::arg(c.omega_minus);
    const double cs = std::cos(pulse_area);
    const double sn = std::sin(pulse_area);
    r.target = CMatrix(2, 2);
    r.target << cs, -kI * std::exp(-kI * alpha) * sn, -kI * std::exp(kI * alpha) * sn, cs;
    r.truth_table = table_from(r.target, {"G", "minus"});

    const EffectiveHamiltonian eff = effective_minus_hamiltonian(f, g);
    for (const auto& wmsg : eff.warnings) r.warnings.push_back(wmsg);

    CMatrix u;
    if (model == RotationModel::Full) {
        u = matexp(full_dimer_hamiltonian(f, g), r.duration);
    } else {
        u = matexp(eff.h, r.duration);
    }
    r.numeric_map = u.topLeftCorner(2, 2);
    r.fidelity_numeric = average_gate_fidelity(r.numeric_map, r.target);
    r.error_probability_numeric = max_norm_loss(u, {0, 1});

    // Printed budget refers to a pi-pulse (area pi/2); rates scale with T.
    const ErrorBudget flip = rotation_error_budget(g, f.rabi_mag);
    r.budget = scaled_budget(flip, pulse_area / kHalfPi);
    r.budget.values["t_flip"] = kHalfPi / w;
    r.fidelity_analytic = clamp01(1.0 - r.budget.total);

    r.diagnostics["rotation_phase"] = -alpha;
    r.diagnostics["omega_minus"] = w;
    r.diagnostics["pulse_area"] = pulse_area;
    r.diagnostics["norm_loss_G"] = std::max(0.0, 1.0 - u.col(0).squaredNorm());
    r.diagnostics["norm_loss_minus"] = std::max(0.0, 1.0 - u.col(1).squaredNorm());
    return r;
}

CMatrix swap_model_hamiltonian(const TwoDimerGeometry& tg, double detuning_mismatch,
                               bool with_decay) {
    tg.validate();
    if (!std::isfinite(detuning_mismatch))
        throw Error(ErrorKind::InvalidInput, "detuning mismatch must be finite");
    const double coupling = inter_dimer_coupling_minus(tg);
    const double gm = with_decay ? rddi_coefficients(tg.dimer).gamma_minus(tg.dimer.gamma) : 0.0;
    CMatrix h = CMatrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const int k = 2 * a + b;
            h(k, k) = Complex(a * detuning_mismatch, -0.5 * gm * (a + b));
        }
    }
    h(1, 2) = coupling;
    h(2, 1) = coupling;
    return h;
}

GateReport swap_gate(const TwoDimerGeometry& tg, SwapFraction fraction,
                     double detuning_mismatch) {
    const bool half = fraction == SwapFraction::Half;
    const double coupling = inter_dimer_coupling_minus(tg);
    const double t_full = kPi / (2.0 * coupling);

    GateReport r;
    r.name = half ? "sqrt_swap" : "swap";
    r.duration = half ? 0.5 * t_full : t_full;
    r.nominal_duration = r.duration;

    const double s = 1.0 / std::sqrt(2.0);
    r.target = CMatrix::Identity(4, 4);
    if (half) {
        r.target(1, 1) = s;
        r.target(2, 2) = s;
        r.target(1, 2) = -kI * s;
        r.target(2, 1) = -kI * s;
    } else {
        r.target(1, 1) = 0.0;
        r.target(2, 2) = 0.0;
        r.target(1, 2) = -kI;
        r.target(2, 1) = -kI;
    }

    const std::vector<std::string> names = {"GG", "G-", "-G", "--"};
    const CMatrix h_clean = swap_model_hamiltonian(tg, detuning_mismatch, false);
    r.truth_table = table_from(matexp(h_clean, r.duration), names);

    const CMatrix u = matexp(swap_model_hamiltonian(tg, detuning_mismatch, true), r.duration);
    r.numeric_map = u;
    r.fidelity_numeric = average_gate_fidelity(u, r.target);
    r.error_probability_numeric = max_norm_loss(u, {0, 1, 2, 3});

    r.budget = swap_error_budget(tg, half);
    r.fidelity_analytic = clamp01(1.0 - r.budget.total);
    r.warnings = r.budget.warnings;

    // Largest |-G> -> |G-> transfer over two full exchange periods.
    const int steps = 400;
    const double window = 4.0 * t_full;
    const CMatrix step = matexp(h_clean, window / steps);
    CVector psi = CVector::Zero(4);
    psi(2) = 1.0;
    double max_transfer = 0.0;
    for (int i = 0; i < steps; ++i) {
        psi = step * psi;
        max_transfer = std::max(max_transfer, std::norm(psi(1)));
    }
    const double ratio = detuning_mismatch / (2.0 * coupling);
    r.diagnostics["max_transfer"] = max_transfer;
    r.diagnostics["max_transfer_bound"] = 1.0 / (1.0 + ratio * ratio);
    r.diagnostics["concurrence_from_minusG"] = concurrence(r.truth_table[2].output);
    r.diagnostics["coupling"] = coupling;
    return r;
}

CMatrix cphase_model_hamiltonian(const TwoDimerGeometry& tg, double omega_c,
                                 double field_offset, bool with_decay) {
    tg.validate();
    if (!(omega_c >= 0.0) || !std::isfinite(omega_c) || !std::isfinite(field_offset))
        throw Error(ErrorKind::InvalidInput, "coupling field must be finite, omega_c >= 0");
    const RddiCoefficients c = rddi_coefficients(tg.dimer);
    const double gamma = tg.dimer.gamma;
    const double gp = with_decay ? c.gamma_plus(gamma) : 0.0;
    const double gm = with_decay ? c.gamma_minus(gamma) : 0.0;
    const double dab = inter_dimer_coupling_plus(tg);
    const std::array<double, 3> decay = {0.0, gm, gp};

    auto idx = [](int a, int b) { return 3 * a + b; };
    CMatrix h = CMatrix::Zero(9, 9);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const double e = (dab + field_offset) * ((a == 2) + (b == 2));
            h(idx(a, b), idx(a, b)) = Complex(e, -0.5 * (decay[a] + decay[b]));
        }
    }
    // k_c along r_AB: dimer B sees the field with an extra phase e^{-i xi}.
    const Complex oa = std::sqrt(2.0) * omega_c;
    const Complex ob = std::sqrt(2.0) * omega_c * std::exp(-kI * tg.xi);
    for (int b = 0; b < 3; ++b) {
        h(idx(2, b), idx(0, b)) += oa;
        h(idx(0, b), idx(2, b)) += std::conj(oa);
    }
    for (int a = 0; a < 3; ++a) {
        h(idx(a, 2), idx(a, 0)) += ob;
        h(idx(a, 0), idx(a, 2)) += std::conj(ob);
    }
    const int pg = idx(2, 0);
    const int gpl = idx(0, 2);
    h(pg, gpl) += dab;
    h(gpl, pg) += dab;

    if (with_decay) {
        // Collective decay in {+G, G+}: Gamma_M on |M>, and 2 Gamma_+ - Gamma_M on |P>.
        const double gamma_m = gp * tg.xi * tg.xi / 5.0;
        const double gamma_p = 2.0 * gp - gamma_m;
        CVector m = CVector::Zero(9);
        CVector p = CVector::Zero(9);
        const double s = 1.0 / std::sqrt(2.0);
        m(pg) = s;
        m(gpl) = -s;
        p(pg) = s;
        p(gpl) = s;
        h += -0.5 * kI * ((gamma_m - gp) * (m * m.adjoint()) + (gamma_p - gp) * (p * p.adjoint()));
    }
    return h;
}

double conditional_phase(const CMatrix& comp) {
    if (comp.rows() != 4 || comp.cols() != 4)
        throw Error(ErrorKind::InvalidInput, "conditional_phase needs a 4x4 map");
    return std::arg(comp(0, 0) * comp(3, 3) * std::conj(comp(1, 1) * comp(2, 2)));
}

namespace {

const std::vector<int> kComp(kCphaseComputational.begin(), kCphaseComputational.end());

CMatrix cphase_block(const TwoDimerGeometry& tg, double omega_c, double offset, double t) {
    return block(matexp(cphase_model_hamiltonian(tg, omega_c, offset, true), t), kComp);
}

struct CphaseShifts {
    double omega_m = 0.0;
    double ground_shift = 0.0;  // dispersive shift of |GG> from |P>, offset 0
    double needed = 0.0;        // detuning giving the compensating Rabi phase
};

CphaseShifts cphase_shifts(const TwoDimerGeometry& tg, double omega_c) {
    const double dab = inter_dimer_coupling_plus(tg);
    const Complex oa = std::sqrt(2.0) * omega_c;
    const Complex ob = std::sqrt(2.0) * omega_c * std::exp(-kI * tg.xi);
    CphaseShifts s;
    s.omega_m = std::abs(oa - ob) / std::sqrt(2.0);
    const double single = -std::norm(oa) / dab;
    s.ground_shift = -std::norm(oa + ob) / 2.0 / (2.0 * dab);
    s.needed = 2.0 * (2.0 * single - s.ground_shift);
    return s;
}

// Local Z corrections on each dimer (and a global phase) fixed by the
// single-excitation diagonal entries.
CMatrix remove_local_phases(const CMatrix& m) {
    const double a = std::arg(m(1, 1) / m(3, 3));
    const double b = std::arg(m(2, 2) / m(3, 3));
    const double c = std::arg(m(3, 3));
    CVector z(4);
    z << std::exp(-kI * (a + b + c)), std::exp(-kI * (a + c)), std::exp(-kI * (b + c)),
        std::exp(-kI * c);
    return z.asDiagonal() * m;
}

CMatrix cz_target() {
    CMatrix t = CMatrix::Identity(4, 4);
    t(0, 0) = -1.0;
    return t;
}

double corrected_fidelity(const TwoDimerGeometry& tg, double omega_c, double offset, double t) {
    return average_gate_fidelity(remove_local_phases(cphase_block(tg, omega_c, offset, t)),
                                 cz_target());
}

// The far-detuned |P> adds a fast ripple to the fidelity, so the duration is
// located on a dense grid first and only then refined.
ScalarMinimum best_duration(const TwoDimerGeometry& tg, double omega_c, double offset,
                            const CphaseShifts& s) {
    const double detuning = offset - s.ground_shift;
    const double estimate = 2.0 * kPi / std::sqrt(detuning * detuning + 4.0 * s.omega_m * s.omega_m);
    auto loss = [&](double t) { return 1.0 - corrected_fidelity(tg, omega_c, offset, t); };
    const int points = 240;
    const double lo = 0.85 * estimate;
    const double step = 0.3 * estimate / points;
    int best = 0;
    double best_loss = loss(lo);
    for (int i = 1; i <= points; ++i) {
        const double v = loss(lo + step * i);
        if (v < best_loss) {
            best_loss = v;
            best = i;
        }
    }
    const double centre = lo + step * best;
    return golden_section_minimize(loss, centre - step, centre + step, 1e-10);
}

}  // namespace

CphaseProtocol calibrate_cphase(const TwoDimerGeometry& tg, double omega_c) {
    tg.validate();
    if (!(omega_c > 0.0) || !std::isfinite(omega_c))
        throw Error(ErrorKind::InvalidInput, "omega_c must be finite and > 0");
    const CphaseShifts s = cphase_shifts(tg, omega_c);

    CphaseProtocol p;
    p.omega_m = s.omega_m;
    p.nominal_duration = kPi / s.omega_m;

    // Offset at which one detuned Rabi cycle cancels the conditional Stark phase.
    const double guess = s.needed + s.ground_shift;
    const double width = 0.25 * (std::abs(s.needed) + s.omega_m);
    const ScalarMinimum m = golden_section_minimize(
        [&](double offset) { return best_duration(tg, omega_c, offset, s).value; },
        guess - width, guess + width, 1e-8);
    p.field_offset = m.x;
    p.duration = best_duration(tg, omega_c, p.field_offset, s).x;
    return p;
}

GateReport cphase_gate(const TwoDimerGeometry& tg, double omega_c) {
    const CphaseProtocol p = calibrate_cphase(tg, omega_c);

    GateReport r;
    r.name = "cphase";
    r.duration = p.duration;
    r.nominal_duration = p.nominal_duration;
    r.target = cz_target();
    r.truth_table = table_from(r.target, {"GG", "G-", "-G", "--"});

    const CMatrix u = matexp(cphase_model_hamiltonian(tg, omega_c, p.field_offset, true), p.duration);
    const CMatrix m = block(u, kComp);

    r.numeric_map = remove_local_phases(m);
    r.fidelity_numeric = average_gate_fidelity(r.numeric_map, r.target);
    r.error_probability_numeric = max_norm_loss(u, kComp);

    r.budget = cphase_error_budget(tg.xi, omega_c, tg.dimer.gamma);
    r.fidelity_analytic = clamp01(1.0 - r.budget.total);
    r.warnings = r.budget.warnings;
    const double delta = rddi_coefficients(tg.dimer).delta;
    if (std::abs(delta) < 10.0 * std::sqrt(2.0) * omega_c)
        r.warnings.push_back("Delta is not >> Omega_c: truncation to (G, -, +) questionable");
    if (tg.asymptotics_degraded())
        r.warnings.push_back("xi >= 0.3: inter-dimer asymptotics degraded");

    double leak = 0.0;
    double off_diag = 0.0;
    for (int k = 0; k < 4; ++k) {
        leak = std::max(leak, 1.0 - m.col(k).squaredNorm());
        for (int j = 0; j < 4; ++j)
            if (j != k) off_diag = std::max(off_diag, std::abs(m(j, k)));
    }
    r.diagnostics["field_offset"] = p.field_offset;
    r.diagnostics["omega_m"] = p.omega_m;
    r.diagnostics["conditional_phase"] = conditional_phase(m);
    r.diagnostics["local_phase_A"] = std::arg(m(2, 2) / m(3, 3));
    r.diagnostics["local_phase_B"] = std::arg(m(1, 1) / m(3, 3));
    r.diagnostics["max_leakage"] = leak;
    r.diagnostics["max_off_diagonal"] = off_diag;
    return r;
}

}  // namespace dimerqc
