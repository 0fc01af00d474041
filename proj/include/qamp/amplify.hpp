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
 * Generalized amplitude amplification with an arbitrary unitary program U.
 *
 * One iteration is Q = -I_s U^-1 I_t U, where I_t flips the phase of every
 * target state and I_s reflects about the source. With
 * u = sqrt(Σ_t |⟨t|U|s⟩|²) and w = Σ_t ⟨t|U|s⟩ U^-1|t⟩, Q maps span{|s⟩, w}
 * into itself and acts there as a rotation by 2·arcsin(u):
 *
 *     Q|s⟩ = (1 - 4u²)|s⟩ + 2w
 *     Q w  = w - 2u²|s⟩
 *
 * so after η iterations followed by one U the target mass is
 * sin²((2η + 1)·arcsin u).
 */

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <variant>

#include "qamp/gates.hpp"
#include "qamp/marked_set.hpp"
#include "qamp/statevec.hpp"

namespace qamp {

/// Overlaps below this are treated as zero.
inline constexpr double kMinOverlap = 1e-12;

/// Non-empty set of target basis states.
class TargetSpec {
  public:
    explicit TargetSpec(MarkedSet targets);

    [[nodiscard]] const MarkedSet &set() const noexcept { return targets_; }

  private:
    MarkedSet targets_;
};

/// The state amplification starts from: a basis state or any normalized
/// vector.
class SourceSpec {
  public:
    static SourceSpec basis(BasisIndex index);

    /// Throws ArgumentError unless the norm is within kAxisNormTolerance of 1.
    static SourceSpec arbitrary(StateVector state);

    [[nodiscard]] bool is_basis() const noexcept {
        return std::holds_alternative<BasisIndex>(source_);
    }

    /// Materializes the source on an m-qubit register.
    [[nodiscard]] StateVector state(unsigned m) const;

    /// Applies I_s = I - 2|s⟩⟨s| in place.
    void reflect(StateVector &state) const;

  private:
    std::variant<BasisIndex, std::shared_ptr<const StateVector>> source_;
};

struct AmplificationPlan {
    double u{0.0};
    double theta{0.0};
    std::uint64_t eta{0};
    double predicted_success{0.0};
};

/// Q restricted to span{|s⟩, w}.
struct SubspaceAnalysis {
    double u{0.0};
    /// Rotation half-angle arcsin(u), computed as atan2 of the target and
    /// non-target norms of U|s⟩.
    double theta{0.0};
    /// Row-major matrix of Q in the (|s⟩, w/u) pair: column j holds the
    /// coefficients of Q applied to the j-th vector.
    std::array<Complex, 4> two_by_two{};
    /// Eigenvalue with non-negative imaginary part first.
    std::array<Complex, 2> eigenvalues{};
    /// Norms of the parts of Q|s⟩ and Q(w/u) outside span{|s⟩, w}.
    double residual_s{0.0};
    double residual_w{0.0};
};

/// sin²((2η + 1)θ).
[[nodiscard]] double rotation_success(double theta, std::uint64_t eta);

/// Iteration count maximizing the success probability within the first
/// rotation lobe: round(π/(4θ) - 1/2), halves rounded down.
/// Throws ArgumentError unless 0 < u <= 1.
[[nodiscard]] AmplificationPlan plan(double u);

/// sqrt of the target mass of U|s⟩. Throws DegenerateOverlapError when it is
/// below kMinOverlap.
[[nodiscard]] double overlap_u(const UnitaryProgram &program,
                               const SourceSpec &source,
                               const TargetSpec &targets);

/// One iteration of Q in place.
void apply_q(StateVector &state, const UnitaryProgram &program,
             const SourceSpec &source, const TargetSpec &targets);

/// U Q^η |s⟩.
[[nodiscard]] StateVector run(const UnitaryProgram &program,
                              const SourceSpec &source,
                              const TargetSpec &targets, std::uint64_t eta);

[[nodiscard]] SubspaceAnalysis subspace_analysis(const UnitaryProgram &program,
                                                 const SourceSpec &source,
                                                 const TargetSpec &targets);

/// Roots of the characteristic polynomial of a row-major 2x2 matrix.
[[nodiscard]] std::array<Complex, 2>
eigenvalues_2x2(const std::array<Complex, 4> &a);

} // namespace qamp
