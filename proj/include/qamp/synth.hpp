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
 * Preparing a register state proportional to an arbitrary bounded f.
 *
 * The register of n qubits is extended by one ancilla (the most significant
 * qubit). U applies Walsh-Hadamard to the register and then the conditional
 * rotation |0,x⟩ -> f(x)|0,x⟩ + √(1-|f(x)|²)|1,x⟩, so starting from
 * s = |0,0...0⟩ the overlap with the target set {|0,x⟩} is
 * u = √(Σ|f|²/N). Amplifying towards that set and measuring ancilla = 0
 * leaves the register in Σ_x f(x)|x⟩ up to normalization.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qamp/amplify.hpp"
#include "qamp/amplitude_spec.hpp"
#include "qamp/gates.hpp"
#include "qamp/statevec.hpp"

namespace qamp {

struct SynthesisProblem {
    UnitaryProgram program;
    SourceSpec source;
    TargetSpec targets;
};

/// Throws ResourceError when n + 1 exceeds max_qubits.
[[nodiscard]] SynthesisProblem
build_program(const AmplitudeSpec &f, unsigned max_qubits = kDefaultMaxQubits);

struct SynthesisResult {
    AmplificationPlan plan;
    /// The η actually run (the plan's unless overridden).
    std::uint64_t eta{0};
    StateVector final_state;
    /// Mass on ancilla = 0.
    double success_probability{0.0};
    /// Normalized ancilla-0 branch.
    std::vector<Complex> conditioned_amplitudes;
    std::vector<double> conditioned_distribution;
    /// max_x |a_x - c f(x)| for the least-squares complex c.
    double conditioned_state_error{0.0};
};

[[nodiscard]] SynthesisResult
synthesize(const AmplitudeSpec &f,
           std::optional<std::uint64_t> eta_override = std::nullopt,
           unsigned max_qubits = kDefaultMaxQubits);

/// Iteration counts tried by the adaptive protocol when Σ|f|² is unknown.
///
/// Round 1 runs η = 0 (U alone). Round j >= 2 runs min(cap, ⌈growth^(j-1)⌉).
/// Once a round has reached the cap, later rounds draw η uniformly from
/// [0, cap] when `randomize_at_cap` is set. The default cap ⌈(π/4)√N⌉ is the
/// optimal count for the smallest admissible weight Σ|f|² = 1.
struct RuntimeSchedule {
    double growth{2.0};
    std::uint64_t cap{1};
    std::uint64_t max_rounds{64};
    bool randomize_at_cap{true};

    [[nodiscard]] static RuntimeSchedule for_size(std::uint64_t N);

    /// True when round j draws η at random.
    [[nodiscard]] bool is_random_round(std::uint64_t round) const;

    /// η of a deterministic round (1-based).
    [[nodiscard]] std::uint64_t deterministic_eta(std::uint64_t round) const;

    /// Exact success probability of round j for rotation angle theta,
    /// averaged over the draw for random rounds.
    [[nodiscard]] double round_success(std::uint64_t round,
                                       double theta) const;
};

struct AdaptiveResult {
    SynthesisResult result;
    std::uint64_t rounds{0};
    std::uint64_t total_iterations{0};
    std::vector<std::uint64_t> etas;
};

/// Repeats fresh synthesis runs with η taken from the schedule, measuring
/// the ancilla after each, until ancilla = 0 is observed. The planner never
/// sees Σ|f|². Deterministic per seed. Throws AdaptiveFailureError once
/// schedule.max_rounds rounds have all failed.
[[nodiscard]] AdaptiveResult adaptive_synthesize(const AmplitudeSpec &f,
                                                 std::uint64_t seed,
                                                 const RuntimeSchedule &schedule,
                                                 unsigned max_qubits =
                                                     kDefaultMaxQubits);

} // namespace qamp
