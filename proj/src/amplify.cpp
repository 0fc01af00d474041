// Copyright 2026 The qamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qamp/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qamp/error.hpp"

namespace qamp {

TargetSpec::TargetSpec(MarkedSet targets) : targets_(std::move(targets)) {
    if (targets_.empty()) {
        throw ArgumentError("target set is empty");
    }
}

SourceSpec SourceSpec::basis(BasisIndex index) {
    SourceSpec out;
    out.source_ = index;
    return out;
}

SourceSpec SourceSpec::arbitrary(StateVector state) {
    const double norm = std::sqrt(state.norm_squared());
    if (std::abs(norm - 1.0) > kAxisNormTolerance) {
        throw ArgumentError("source state has norm " + std::to_string(norm) +
                            ", expected 1");
    }
    state.normalize();
    SourceSpec out;
    out.source_ = std::make_shared<const StateVector>(std::move(state));
    return out;
}

StateVector SourceSpec::state(unsigned m) const {
    if (const auto *idx = std::get_if<BasisIndex>(&source_)) {
        return basis_state(m, *idx);
    }
    const auto &vec = *std::get<std::shared_ptr<const StateVector>>(source_);
    if (vec.num_qubits() != m) {
        throw ArgumentError("source state width does not match the program");
    }
    return vec;
}

void SourceSpec::reflect(StateVector &state) const {
    if (const auto *idx = std::get_if<BasisIndex>(&source_)) {
        if (*idx >= state.size()) {
            throw ArgumentError("source index out of range");
        }
        state[*idx] = -state[*idx];
        return;
    }
    apply_reflection(state,
                     *std::get<std::shared_ptr<const StateVector>>(source_));
}

double rotation_success(double theta, std::uint64_t eta) {
    const double s = std::sin((2.0 * static_cast<double>(eta) + 1.0) * theta);
    return s * s;
}

AmplificationPlan plan(double u) {
    if (!(u > 0.0) || u > 1.0) {
        throw ArgumentError("overlap u = " + std::to_string(u) +
                            " outside (0, 1]");
    }
    AmplificationPlan out;
    out.u = u;
    out.theta = std::asin(u);
    // sin²((2j+1)θ) peaks at j* = π/(4θ) - 1/2 and is symmetric about it, so
    // the nearest integer wins; an exact half goes to the smaller j.
    const double peak = std::numbers::pi / (4.0 * out.theta) - 0.5;
    const double lo = std::floor(std::max(peak, 0.0));
    out.eta = static_cast<std::uint64_t>(peak - lo > 0.5 ? lo + 1.0 : lo);
    out.predicted_success = rotation_success(out.theta, out.eta);
    return out;
}

namespace {

void require_consistent(const UnitaryProgram &program,
                        const TargetSpec &targets) {
    const std::uint64_t dim = std::uint64_t{1} << program.num_qubits();
    if (targets.set().bound() > dim) {
        throw ArgumentError("target index out of range for the program width");
    }
}

double checked_overlap(double mass) {
    const double u = std::min(std::sqrt(mass), 1.0);
    if (!(u >= kMinOverlap)) {
        throw DegenerateOverlapError(
            "U|s> has no component on the target set; amplification is "
            "undefined");
    }
    return u;
}

void axpy(StateVector &y, Complex a, const StateVector &x) {
    auto ya = y.amplitudes();
    const auto xa = x.amplitudes();
    for (std::size_t j = 0; j < ya.size(); ++j) {
        ya[j] += a * xa[j];
    }
}

} // namespace

double overlap_u(const UnitaryProgram &program, const SourceSpec &source,
                 const TargetSpec &targets) {
    require_consistent(program, targets);
    StateVector image = source.state(program.num_qubits());
    apply_program(image, program);
    return checked_overlap(probability_mass(image, targets.set()));
}

void apply_q(StateVector &state, const UnitaryProgram &program,
             const SourceSpec &source, const TargetSpec &targets) {
    require_consistent(program, targets);
    apply_program(state, program);
    apply_phase_flip(state, targets.set());
    apply_program_inverse(state, program);
    source.reflect(state);
    for (Complex &a : state.amplitudes()) {
        a = -a;
    }
}

StateVector run(const UnitaryProgram &program, const SourceSpec &source,
                const TargetSpec &targets, std::uint64_t eta) {
    require_consistent(program, targets);
    StateVector state = source.state(program.num_qubits());
    for (std::uint64_t j = 0; j < eta; ++j) {
        apply_q(state, program, source, targets);
    }
    apply_program(state, program);
    return state;
}

std::array<Complex, 2> eigenvalues_2x2(const std::array<Complex, 4> &a) {
    const Complex half_trace = 0.5 * (a[0] + a[3]);
    const Complex half_diff = 0.5 * (a[0] - a[3]);
    const Complex disc = std::sqrt(half_diff * half_diff + a[1] * a[2]);
    std::array<Complex, 2> out{half_trace + disc, half_trace - disc};
    if (out[0].imag() < out[1].imag()) {
        std::swap(out[0], out[1]);
    }
    return out;
}

SubspaceAnalysis subspace_analysis(const UnitaryProgram &program,
                                   const SourceSpec &source,
                                   const TargetSpec &targets) {
    require_consistent(program, targets);
    const unsigned m = program.num_qubits();
    const StateVector s = source.state(m);

    // Split U|s⟩ into its target part P_t U|s⟩ (norm u) and the rest (norm c).
    StateVector on = s;
    apply_program(on, program);
    StateVector off = on;
    for (Complex &a : on.amplitudes()) {
        a = Complex{};
    }
    targets.set().for_each([&](BasisIndex i) {
        on[i] = off[i];
        off[i] = Complex{};
    });
    const double u_raw = std::sqrt(on.norm_squared());
    const double c = std::sqrt(off.norm_squared());

    SubspaceAnalysis out;
    out.u = checked_overlap(u_raw * u_raw);
    // atan2 keeps θ accurate where arcsin(u) is ill-conditioned (u near 1).
    out.theta = std::atan2(u_raw, c);

    // w/u = U^-1 P_t U|s⟩ / u, with w = Σ_t U_ts U^-1|t⟩.
    StateVector w = on;
    for (Complex &a : w.amplitudes()) {
        a /= u_raw;
    }
    apply_program_inverse(w, program);

    StateVector qs = s;
    apply_q(qs, program, source, targets);
    StateVector qw = w;
    apply_q(qw, program, source, targets);

    // Orthonormal partner of |s⟩ in span{|s⟩, w}:
    //   e2 = (w/u - u|s⟩) / c = U^-1 [c·P_t U|s⟩/u - u·(1-P_t) U|s⟩/c],
    // assembled from the two unit pieces so it stays accurate as c -> 0.
    const bool planar = c > 0.0;
    StateVector e2 = on;
    if (planar) {
        auto e2a = e2.amplitudes();
        const auto oa = off.amplitudes();
        for (std::size_t j = 0; j < e2a.size(); ++j) {
            e2a[j] = (c / u_raw) * e2a[j] - (u_raw / c) * oa[j];
        }
        apply_program_inverse(e2, program);
    }

    auto residual = [&](const StateVector &v) {
        StateVector r = v;
        axpy(r, -inner_product(s, v), s);
        if (planar) {
            axpy(r, -inner_product(e2, v), e2);
        }
        return std::sqrt(r.norm_squared());
    };
    out.residual_s = residual(qs);
    out.residual_w = residual(qw);

    if (!planar) {
        // U|s⟩ lies entirely on the targets: w = u|s⟩ and Q|s⟩ = -|s⟩.
        const Complex lambda = inner_product(s, qs);
        out.two_by_two = {lambda, Complex{}, Complex{}, lambda};
        out.eigenvalues = {lambda, lambda};
        return out;
    }

    StateVector qe2 = e2;
    apply_q(qe2, program, source, targets);
    const std::array<Complex, 4> frame{
        inner_product(s, qs), inner_product(s, qe2), inner_product(e2, qs),
        inner_product(e2, qe2)};
    out.eigenvalues = eigenvalues_2x2(frame);

    // Change of basis to the (|s⟩, w/u) pair: its columns in the frame are
    // (1, 0) and (u, c), so two_by_two = B^-1 A B with B = [[1, u], [0, c]].
    const double uu = u_raw;
    const Complex ab00 = frame[0];
    const Complex ab01 = frame[0] * uu + frame[1] * c;
    const Complex ab10 = frame[2];
    const Complex ab11 = frame[2] * uu + frame[3] * c;
    out.two_by_two = {ab00 - (uu / c) * ab10, ab01 - (uu / c) * ab11,
                      ab10 / c, ab11 / c};
    return out;
}

} // namespace qamp
