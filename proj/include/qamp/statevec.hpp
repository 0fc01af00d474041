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
 * Dense state vector over an m-qubit register.
 *
 * Basis index bit q is the value of qubit q. Whenever a register carries an
 * ancilla (the synthesis construction), the ancilla is the most significant
 * bit, so index = ancilla * 2^n + x and the two ancilla branches are the two
 * contiguous halves of the amplitude array.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qamp/marked_set.hpp"

namespace qamp {

using Complex = std::complex<double>;

/// Registers wider than this are refused unless the caller raises the cap.
/// 2^26 complex doubles is 1 GiB.
inline constexpr unsigned kDefaultMaxQubits = 26;

/// Throws ResourceError if m exceeds max_qubits.
void check_register_width(unsigned m, unsigned max_qubits = kDefaultMaxQubits);

class StateVector {
  public:
    /// The one-amplitude empty register, in state 1.
    StateVector();

    /// |0...0⟩ on m qubits.
    explicit StateVector(unsigned m, unsigned max_qubits = kDefaultMaxQubits);

    /// Wraps an amplitude array; its length must be a power of two. The
    /// array is taken as-is (no normalization).
    static StateVector from_amplitudes(std::vector<Complex> amps,
                                       unsigned max_qubits = kDefaultMaxQubits);

    [[nodiscard]] unsigned num_qubits() const noexcept { return m_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    [[nodiscard]] const Complex &operator[](BasisIndex i) const {
        return amps_[i];
    }
    [[nodiscard]] Complex &operator[](BasisIndex i) { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;

    /// Rescales to unit norm. Throws ArgumentError on the zero vector.
    void normalize();

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    unsigned m_{0};
    std::vector<Complex> amps_;
};

/// One-hot state with amplitude 1 at index i.
StateVector basis_state(unsigned m, BasisIndex i,
                        unsigned max_qubits = kDefaultMaxQubits);

/// Σ conj(a_j) b_j.
Complex inner_product(const StateVector &a, const StateVector &b);

/// Σ_{i ∈ marked} |a_i|².
double probability_mass(const StateVector &a, const MarkedSet &marked);

/// Largest |a_i - b_i|. Dimensions must match.
double max_deviation(const StateVector &a, const StateVector &b);

struct AncillaSplit {
    std::vector<Complex> ancilla0;
    std::vector<Complex> ancilla1;
};

/// Splits on the most significant qubit. Neither half is renormalized.
AncillaSplit split_ancilla(const StateVector &a);

} // namespace qamp
