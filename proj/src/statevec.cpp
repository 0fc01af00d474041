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

#include "qamp/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "qamp/error.hpp"

namespace qamp {

void check_register_width(unsigned m, unsigned max_qubits) {
    if (m > max_qubits) {
        throw ResourceError("register of " + std::to_string(m) +
                            " qubits exceeds the cap of " +
                            std::to_string(max_qubits));
    }
}

StateVector::StateVector() : amps_{Complex{1.0, 0.0}} {}

StateVector::StateVector(unsigned m, unsigned max_qubits) : m_(m) {
    check_register_width(m, max_qubits);
    amps_.assign(std::size_t{1} << m, Complex{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps,
                                         unsigned max_qubits) {
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw ArgumentError("amplitude array length " +
                            std::to_string(amps.size()) +
                            " is not a power of two");
    }
    const auto m = static_cast<unsigned>(std::countr_zero(amps.size()));
    check_register_width(m, max_qubits);
    StateVector out;
    out.m_ = m;
    out.amps_ = std::move(amps);
    return out;
}

double StateVector::norm_squared() const noexcept {
    double sum = 0.0;
    for (const Complex &a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

void StateVector::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) {
        throw ArgumentError("cannot normalize the zero vector");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (Complex &a : amps_) {
        a *= scale;
    }
}

StateVector basis_state(unsigned m, BasisIndex i, unsigned max_qubits) {
    StateVector out(m, max_qubits);
    if (i >= out.size()) {
        throw ArgumentError("basis index " + std::to_string(i) +
                            " out of range for " + std::to_string(m) +
                            " qubits");
    }
    out[0] = 0.0;
    out[i] = 1.0;
    return out;
}

namespace {
void require_same_width(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ArgumentError("state width mismatch: " +
                            std::to_string(a.num_qubits()) + " vs " +
                            std::to_string(b.num_qubits()) + " qubits");
    }
}
} // namespace

Complex inner_product(const StateVector &a, const StateVector &b) {
    require_same_width(a, b);
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    Complex sum{};
    for (std::size_t j = 0; j < x.size(); ++j) {
        sum += std::conj(x[j]) * y[j];
    }
    return sum;
}

double probability_mass(const StateVector &a, const MarkedSet &marked) {
    if (marked.bound() > a.size()) {
        throw ArgumentError("marked index " + std::to_string(marked.bound() - 1) +
                            " out of range for a register of " +
                            std::to_string(a.size()) + " states");
    }
    double sum = 0.0;
    marked.for_each([&](BasisIndex i) { sum += std::norm(a[i]); });
    return sum;
}

double max_deviation(const StateVector &a, const StateVector &b) {
    require_same_width(a, b);
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

AncillaSplit split_ancilla(const StateVector &a) {
    if (a.num_qubits() == 0) {
        throw ArgumentError("split_ancilla needs at least one qubit");
    }
    const auto amps = a.amplitudes();
    const std::size_t half = amps.size() / 2;
    return {{amps.begin(), amps.begin() + half},
            {amps.begin() + half, amps.end()}};
}

} // namespace qamp
