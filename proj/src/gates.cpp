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

#include "qamp/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "qamp/error.hpp"

namespace qamp {

namespace {

void require_qubit(const StateVector &state, unsigned qubit) {
    if (qubit >= state.num_qubits()) {
        throw ArgumentError("qubit " + std::to_string(qubit) +
                            " out of range for " +
                            std::to_string(state.num_qubits()) + " qubits");
    }
}

void require_distinct(std::span<const unsigned> qubits) {
    std::vector<unsigned> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ArgumentError("duplicate qubit in Walsh-Hadamard set");
    }
}

void require_marked_in_range(std::uint64_t dim, const MarkedSet &marked) {
    if (marked.bound() > dim) {
        throw ArgumentError("marked index " +
                            std::to_string(marked.bound() - 1) +
                            " out of range for " + std::to_string(dim) +
                            " basis states");
    }
}

void require_cond_rot_width(unsigned m, const AmplitudeSpec &f) {
    if (m != f.register_qubits() + 1) {
        throw ArgumentError("conditional rotation over 2^" +
                            std::to_string(f.register_qubits()) +
                            " states needs " +
                            std::to_string(f.register_qubits() + 1) +
                            " qubits, register has " + std::to_string(m));
    }
}

// Returns the norm of `axis` after checking it lies within tolerance of 1.
double checked_axis_norm(const StateVector &axis) {
    const double norm = std::sqrt(axis.norm_squared());
    if (std::abs(norm - 1.0) > kAxisNormTolerance) {
        throw ArgumentError("reflection axis has norm " +
                            std::to_string(norm) + ", expected 1");
    }
    return norm;
}

} // namespace

void apply_m(StateVector &state, unsigned qubit) {
    require_qubit(state, qubit);
    constexpr double r = 1.0 / std::numbers::sqrt2;
    auto amps = state.amplitudes();
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = amps.size();
    // Outer loop walks blocks of 2*stride; the inner loop pairs i with
    // i + stride, the two indices differing only in bit `qubit`.
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = (a0 + a1) * r;
            amps[i + stride] = (a0 - a1) * r;
        }
    }
}

void apply_wh(StateVector &state, std::span<const unsigned> qubits) {
    for (unsigned q : qubits) {
        require_qubit(state, q);
    }
    require_distinct(qubits);
    for (unsigned q : qubits) {
        apply_m(state, q);
    }
}

void apply_phase_flip(StateVector &state, const MarkedSet &marked) {
    require_marked_in_range(state.size(), marked);
    marked.for_each([&](BasisIndex i) { state[i] = -state[i]; });
}

void apply_reflection(StateVector &state, const StateVector &axis) {
    if (axis.num_qubits() != state.num_qubits()) {
        throw ArgumentError("reflection axis width does not match the state");
    }
    const double norm = checked_axis_norm(axis);
    const Complex coeff = 2.0 * inner_product(axis, state) / (norm * norm);
    auto amps = state.amplitudes();
    const auto a = axis.amplitudes();
    for (std::size_t j = 0; j < amps.size(); ++j) {
        amps[j] -= coeff * a[j];
    }
}

void apply_cond_rot(StateVector &state, const AmplitudeSpec &f, bool adjoint) {
    require_cond_rot_width(state.num_qubits(), f);
    auto amps = state.amplitudes();
    const std::size_t half = f.size();
    const auto table = f.values();
    for (std::size_t x = 0; x < half; ++x) {
        const Complex fx = table[x];
        const double g = std::sqrt(std::max(0.0, 1.0 - std::norm(fx)));
        const Complex a0 = amps[x];
        const Complex a1 = amps[half + x];
        if (!adjoint) {
            // [[f, g], [g, -conj f]]
            amps[x] = fx * a0 + g * a1;
            amps[half + x] = g * a0 - std::conj(fx) * a1;
        } else {
            // [[conj f, g], [g, -f]]
            amps[x] = std::conj(fx) * a0 + g * a1;
            amps[half + x] = g * a0 - fx * a1;
        }
    }
}

GateStep make_reflect(StateVector axis) {
    (void)checked_axis_norm(axis);
    axis.normalize();
    return ReflectStep{std::make_shared<const StateVector>(std::move(axis))};
}

GateStep make_cond_rot(AmplitudeSpec f) {
    return CondRotStep{std::make_shared<const AmplitudeSpec>(std::move(f)),
                       false};
}

GateStep make_wh_range(unsigned first, unsigned count) {
    WHStep step;
    step.qubits.reserve(count);
    for (unsigned q = first; q < first + count; ++q) {
        step.qubits.push_back(q);
    }
    return step;
}

GateStep inverse(const GateStep &step) {
    if (const auto *rot = std::get_if<CondRotStep>(&step)) {
        return CondRotStep{rot->f, !rot->adjoint};
    }
    return step;
}

std::string describe(const GateStep &step) {
    struct Visitor {
        std::string operator()(const MStep &s) const {
            return "M(" + std::to_string(s.qubit) + ")";
        }
        std::string operator()(const WHStep &s) const {
            std::ostringstream os;
            os << "WH{";
            for (std::size_t i = 0; i < s.qubits.size(); ++i) {
                os << (i ? "," : "") << s.qubits[i];
            }
            os << "}";
            return os.str();
        }
        std::string operator()(const PhaseFlipStep &s) const {
            if (!s.marked.is_explicit()) {
                return "PhaseFlip(" + s.marked.id() + ")";
            }
            return "PhaseFlip[" + std::to_string(s.marked.count()) + "]";
        }
        std::string operator()(const ReflectStep &s) const {
            return "Reflect(" + std::to_string(s.axis->num_qubits()) +
                   " qubits)";
        }
        std::string operator()(const CondRotStep &s) const {
            return std::string(s.adjoint ? "CondRot^-1" : "CondRot") + "(N=" +
                   std::to_string(s.f->size()) + ")";
        }
    };
    return std::visit(Visitor{}, step);
}

void apply_step(StateVector &state, const GateStep &step) {
    struct Visitor {
        StateVector &state;
        void operator()(const MStep &s) const { apply_m(state, s.qubit); }
        void operator()(const WHStep &s) const { apply_wh(state, s.qubits); }
        void operator()(const PhaseFlipStep &s) const {
            apply_phase_flip(state, s.marked);
        }
        void operator()(const ReflectStep &s) const {
            apply_reflection(state, *s.axis);
        }
        void operator()(const CondRotStep &s) const {
            apply_cond_rot(state, *s.f, s.adjoint);
        }
    };
    std::visit(Visitor{state}, step);
}

UnitaryProgram &UnitaryProgram::add(GateStep step) {
    const std::uint64_t dim = std::uint64_t{1} << m_;
    struct Checker {
        unsigned m;
        std::uint64_t dim;
        void operator()(const MStep &s) const {
            if (s.qubit >= m) {
                throw ArgumentError("M qubit " + std::to_string(s.qubit) +
                                    " out of range");
            }
        }
        void operator()(const WHStep &s) const {
            for (unsigned q : s.qubits) {
                if (q >= m) {
                    throw ArgumentError("WH qubit " + std::to_string(q) +
                                        " out of range");
                }
            }
            require_distinct(s.qubits);
        }
        void operator()(const PhaseFlipStep &s) const {
            require_marked_in_range(dim, s.marked);
        }
        void operator()(const ReflectStep &s) const {
            if (!s.axis || s.axis->num_qubits() != m) {
                throw ArgumentError("reflection axis width does not match "
                                    "the program");
            }
        }
        void operator()(const CondRotStep &s) const {
            if (!s.f) {
                throw ArgumentError("conditional rotation without a table");
            }
            require_cond_rot_width(m, *s.f);
        }
    };
    std::visit(Checker{m_, dim}, step);
    steps_.push_back(std::move(step));
    return *this;
}

UnitaryProgram UnitaryProgram::inverse() const {
    UnitaryProgram out(m_);
    out.steps_.reserve(steps_.size());
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        out.steps_.push_back(qamp::inverse(*it));
    }
    return out;
}

namespace {
void require_program_width(const StateVector &state,
                           const UnitaryProgram &program) {
    if (state.num_qubits() != program.num_qubits()) {
        throw ArgumentError("program acts on " +
                            std::to_string(program.num_qubits()) +
                            " qubits, state has " +
                            std::to_string(state.num_qubits()));
    }
}
} // namespace

void apply_program(StateVector &state, const UnitaryProgram &program) {
    require_program_width(state, program);
    for (const GateStep &step : program.steps()) {
        apply_step(state, step);
    }
}

void apply_program_inverse(StateVector &state, const UnitaryProgram &program) {
    require_program_width(state, program);
    const auto steps = program.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        apply_step(state, inverse(*it));
    }
}

} // namespace qamp
