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

#include "qamp/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "qamp/error.hpp"
#include "qamp/sampler.hpp"

namespace qamp {

SynthesisProblem build_program(const AmplitudeSpec &f, unsigned max_qubits) {
    const unsigned n = f.register_qubits();
    check_register_width(n + 1, max_qubits);
    UnitaryProgram program(n + 1);
    program.add(make_wh_range(0, n));
    program.add(make_cond_rot(f));
    return {std::move(program), SourceSpec::basis(0),
            TargetSpec(MarkedSet::prefix(f.size()))};
}

SynthesisResult synthesize(const AmplitudeSpec &f,
                           std::optional<std::uint64_t> eta_override,
                           unsigned max_qubits) {
    const SynthesisProblem problem = build_program(f, max_qubits);
    SynthesisResult out;
    out.plan = plan(overlap_u(problem.program, problem.source, problem.targets));
    out.eta = eta_override.value_or(out.plan.eta);
    out.final_state =
        run(problem.program, problem.source, problem.targets, out.eta);

    const std::size_t N = f.size();
    const auto amps = out.final_state.amplitudes();
    double mass = 0.0;
    for (std::size_t x = 0; x < N; ++x) {
        mass += std::norm(amps[x]);
    }
    out.success_probability = mass;
    out.conditioned_amplitudes.assign(N, Complex{});
    out.conditioned_distribution.assign(N, 0.0);
    if (!(mass > 0.0)) {
        // Exact over-rotation onto ancilla = 1; nothing to condition on.
        return out;
    }

    const double scale = 1.0 / std::sqrt(mass);
    for (std::size_t x = 0; x < N; ++x) {
        out.conditioned_amplitudes[x] = amps[x] * scale;
        out.conditioned_distribution[x] = std::norm(amps[x]) / mass;
    }

    // Least-squares c = ⟨f|a⟩ / ⟨f|f⟩, then the worst pointwise miss.
    const auto table = f.values();
    Complex fa{};
    for (std::size_t x = 0; x < N; ++x) {
        fa += std::conj(table[x]) * out.conditioned_amplitudes[x];
    }
    const Complex c = fa / f.sum_sq();
    for (std::size_t x = 0; x < N; ++x) {
        out.conditioned_state_error =
            std::max(out.conditioned_state_error,
                     std::abs(out.conditioned_amplitudes[x] - c * table[x]));
    }
    return out;
}

RuntimeSchedule RuntimeSchedule::for_size(std::uint64_t N) {
    RuntimeSchedule out;
    out.cap = static_cast<std::uint64_t>(
        std::ceil(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(N))));
    return out;
}

std::uint64_t RuntimeSchedule::deterministic_eta(std::uint64_t round) const {
    if (round <= 1) {
        return 0;
    }
    const double grown =
        std::ceil(std::pow(growth, static_cast<double>(round - 1)));
    if (!(grown < static_cast<double>(cap))) {
        return cap;
    }
    return static_cast<std::uint64_t>(grown);
}

bool RuntimeSchedule::is_random_round(std::uint64_t round) const {
    return randomize_at_cap && round >= 2 &&
           deterministic_eta(round - 1) >= cap;
}

double RuntimeSchedule::round_success(std::uint64_t round,
                                      double theta) const {
    if (!is_random_round(round)) {
        return rotation_success(theta, deterministic_eta(round));
    }
    double sum = 0.0;
    for (std::uint64_t e = 0; e <= cap; ++e) {
        sum += rotation_success(theta, e);
    }
    return sum / static_cast<double>(cap + 1);
}

AdaptiveResult adaptive_synthesize(const AmplitudeSpec &f, std::uint64_t seed,
                                   const RuntimeSchedule &schedule,
                                   unsigned max_qubits) {
    check_register_width(f.register_qubits() + 1, max_qubits);
    std::mt19937_64 rng(seed);
    AdaptiveResult out;
    const BasisIndex ancilla_bit = BasisIndex{1} << f.register_qubits();
    while (out.rounds < schedule.max_rounds) {
        ++out.rounds;
        const std::uint64_t eta =
            schedule.is_random_round(out.rounds)
                ? rng() % (schedule.cap + 1)
                : schedule.deterministic_eta(out.rounds);
        out.etas.push_back(eta);
        out.total_iterations += eta;

        SynthesisResult attempt = synthesize(f, eta, max_qubits);
        const Counts shot = measure_shots(attempt.final_state, 1, rng());
        if ((shot.begin()->first & ancilla_bit) == 0) {
            out.result = std::move(attempt);
            return out;
        }
        // Ancilla read 1: the state has collapsed away from the target, so
        // the next round starts again from |s⟩.
    }
    throw AdaptiveFailureError(out.rounds, out.total_iterations);
}

} // namespace qamp
