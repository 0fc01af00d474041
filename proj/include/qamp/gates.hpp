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

/**
 * @file
 * Primitive unitaries and invertible gate programs.
 *
 * All gates act in place on a StateVector. The kinds are:
 *  - M on one qubit, (1/√2)[[1, 1], [1, -1]];
 *  - the Walsh-Hadamard transform, M on each qubit of a set;
 *  - selective phase inversion of a marked set of basis states;
 *  - reflection I - 2|a⟩⟨a| about an arbitrary normalized axis;
 *  - the conditional rotation that takes |0,x⟩ to f(x)|0,x⟩ + g(x)|1,x⟩
 *    with g = √(1 - |f|²), the ancilla being the most significant qubit.
 *
 * The conditional rotation's |1,x⟩ column is (g, -conj f), which makes each
 * 2x2 block unitary for complex f. Its inverse is the conjugate transpose.
 * Every other kind is its own inverse.
 */

#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qamp/amplitude_spec.hpp"
#include "qamp/marked_set.hpp"
#include "qamp/statevec.hpp"

namespace qamp {

/// Axis norms within this distance of 1 are accepted and renormalized.
inline constexpr double kAxisNormTolerance = 1e-10;

void apply_m(StateVector &state, unsigned qubit);

/// Qubits must be distinct and in range.
void apply_wh(StateVector &state, std::span<const unsigned> qubits);

void apply_phase_flip(StateVector &state, const MarkedSet &marked);

/// state <- state - 2⟨axis|state⟩ axis.
void apply_reflection(StateVector &state, const StateVector &axis);

/// `state` must have n + 1 qubits where f covers 2^n register states.
/// With `adjoint` the conjugate-transpose block is applied instead.
void apply_cond_rot(StateVector &state, const AmplitudeSpec &f,
                    bool adjoint = false);

struct MStep {
    unsigned qubit{0};
};

struct WHStep {
    std::vector<unsigned> qubits;
};

struct PhaseFlipStep {
    MarkedSet marked;
};

struct ReflectStep {
    /// Normalized at construction by make_reflect().
    std::shared_ptr<const StateVector> axis;
};

struct CondRotStep {
    std::shared_ptr<const AmplitudeSpec> f;
    bool adjoint{false};
};

using GateStep =
    std::variant<MStep, WHStep, PhaseFlipStep, ReflectStep, CondRotStep>;

/// Validates the axis norm and stores a renormalized copy.
GateStep make_reflect(StateVector axis);

GateStep make_cond_rot(AmplitudeSpec f);

/// WH over qubits [first, first + count).
GateStep make_wh_range(unsigned first, unsigned count);

[[nodiscard]] GateStep inverse(const GateStep &step);

[[nodiscard]] std::string describe(const GateStep &step);

void apply_step(StateVector &state, const GateStep &step);

/// Ordered sequence of gate steps on a fixed register width.
class UnitaryProgram {
  public:
    explicit UnitaryProgram(unsigned m = 0) : m_(m) {}

    /// Appends a step after checking it fits this register.
    UnitaryProgram &add(GateStep step);

    [[nodiscard]] unsigned num_qubits() const noexcept { return m_; }
    [[nodiscard]] std::span<const GateStep> steps() const noexcept {
        return steps_;
    }
    [[nodiscard]] bool empty() const noexcept { return steps_.empty(); }

    /// Reversed order, each step inverted.
    [[nodiscard]] UnitaryProgram inverse() const;

  private:
    unsigned m_;
    std::vector<GateStep> steps_;
};

void apply_program(StateVector &state, const UnitaryProgram &program);
void apply_program_inverse(StateVector &state, const UnitaryProgram &program);

} // namespace qamp
