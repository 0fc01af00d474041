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
 * Brute-force dense reference for small registers.
 *
 * Every gate kind is materialized directly from its matrix definition
 * (tensor entries for M and WH, diagonal for phase flips, I - 2aa† for
 * reflections, 2x2 blocks for the conditional rotation) and composed by
 * explicit matrix products, independently of the strided kernels in gates.
 */

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qamp/amplify.hpp"
#include "qamp/amplitude_spec.hpp"
#include "qamp/gates.hpp"
#include "qamp/statevec.hpp"

namespace qamp::oracle {

inline constexpr unsigned kDefaultDenseCap = 6;

/// Square complex matrix, row-major.
class DenseUnitary {
  public:
    explicit DenseUnitary(std::size_t dim = 1);

    static DenseUnitary identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    [[nodiscard]] Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * dim_ + c];
    }
    [[nodiscard]] const Complex &operator()(std::size_t r,
                                            std::size_t c) const {
        return entries_[r * dim_ + c];
    }

    [[nodiscard]] DenseUnitary adjoint() const;
    [[nodiscard]] std::vector<Complex> apply(std::span<const Complex> v) const;

    friend DenseUnitary operator*(const DenseUnitary &a, const DenseUnitary &b);

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Largest |a_ij - b_ij|.
[[nodiscard]] double max_entry_deviation(const DenseUnitary &a,
                                         const DenseUnitary &b);

/// ‖M†M - I‖_max.
[[nodiscard]] double unitarity_deviation(const DenseUnitary &m);

[[nodiscard]] DenseUnitary dense_of_step(const GateStep &step, unsigned m);

/// Throws ResourceError when the program is wider than `cap` qubits.
[[nodiscard]] DenseUnitary dense_of_program(const UnitaryProgram &program,
                                            unsigned cap = kDefaultDenseCap);

/// -R_s P† F_t P.
[[nodiscard]] DenseUnitary dense_q(const UnitaryProgram &program,
                                   const SourceSpec &source,
                                   const TargetSpec &targets,
                                   unsigned cap = kDefaultDenseCap);

/// Max amplitude deviation between strided application and the dense
/// product over `trials` random normalized states.
[[nodiscard]] double equivalence_check(const UnitaryProgram &program,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned cap = kDefaultDenseCap);

/// Max |‖Mv‖ - ‖v‖| over random unit vectors; zero for a unitary up to
/// rounding, which bounds every eigenvalue to the unit circle.
[[nodiscard]] double norm_preservation_deviation(const DenseUnitary &m,
                                                 std::uint64_t trials,
                                                 std::uint64_t seed);

/// Eigenvalues of M restricted to span{a, b} via its 2x2 compression onto a
/// Gram-Schmidt frame, solved as a quadratic. Positive imaginary part first.
[[nodiscard]] std::array<Complex, 2>
projected_eigenvalues(const DenseUnitary &m, std::span<const Complex> a,
                      std::span<const Complex> b);

/// w = Σ_t U_ts U^-1|t⟩ computed from the dense P.
[[nodiscard]] std::vector<Complex> dense_w(const DenseUnitary &program_matrix,
                                           const StateVector &source,
                                           const MarkedSet &targets);

// Random instance generators shared by tests and the self-check command.

[[nodiscard]] StateVector random_state(unsigned m, std::mt19937_64 &rng);

/// Complex f with |f| <= 1; roughly a tenth of entries sit at each boundary
/// magnitude 0 and 1.
[[nodiscard]] AmplitudeSpec random_amplitude_spec(unsigned n,
                                                  std::mt19937_64 &rng);

/// One to five random steps drawn from every gate kind.
[[nodiscard]] UnitaryProgram random_program(unsigned m, std::mt19937_64 &rng);

[[nodiscard]] MarkedSet random_nonempty_subset(std::uint64_t dim,
                                               std::mt19937_64 &rng);

struct RandomInstance {
    UnitaryProgram program;
    SourceSpec source;
    TargetSpec targets;
};

/// Random program, source (basis or arbitrary) and target set with
/// overlap u >= min_u.
[[nodiscard]] RandomInstance random_instance(unsigned m, std::mt19937_64 &rng,
                                             double min_u = 1e-6);

struct SuiteResult {
    std::string name;
    double worst{0.0};
    double tolerance{0.0};
    [[nodiscard]] bool passed() const { return worst <= tolerance; }
};

/// Runs the equivalence, unitarity, 2-D invariance and rotation-law suites
/// over randomized instances on 1..max_qubits qubits.
[[nodiscard]] std::vector<SuiteResult>
run_self_check(unsigned max_qubits, std::uint64_t trials, std::uint64_t seed,
               unsigned cap = kDefaultDenseCap);

} // namespace qamp::oracle
