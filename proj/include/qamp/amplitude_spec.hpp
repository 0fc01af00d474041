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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qamp {

enum class SpecOrigin { kRawAmplitudes, kProbabilities };

std::string_view to_string(SpecOrigin origin);

/// Target function f over N = 2^n register states, |f(x)| <= 1.
///
/// Inputs whose length is not a power of two are zero-padded; the original
/// length is kept in input_length(). Magnitudes in (1, 1 + 1e-12] are clamped
/// onto the unit circle; anything larger is rejected.
class AmplitudeSpec {
  public:
    /// Tolerance on |f(x)| above 1 that is absorbed by clamping.
    static constexpr double kMagnitudeSlack = 1e-12;

    /// Throws SpecError on non-finite values or |f| beyond the slack, and
    /// DegenerateSpecError when every value is zero.
    static AmplitudeSpec from_amplitudes(std::vector<std::complex<double>> f);

    /// f(x) = sqrt(p(x) / max p). Throws SpecError on negative or non-finite
    /// entries and DegenerateSpecError when all entries are zero.
    static AmplitudeSpec from_probabilities(std::span<const double> p);

    [[nodiscard]] unsigned register_qubits() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return f_.size(); }
    [[nodiscard]] std::uint64_t input_length() const noexcept {
        return input_length_;
    }
    [[nodiscard]] SpecOrigin origin() const noexcept { return origin_; }
    [[nodiscard]] std::span<const std::complex<double>> values() const noexcept {
        return f_;
    }
    [[nodiscard]] std::complex<double> operator[](std::uint64_t x) const {
        return f_[x];
    }

    /// Σ|f(x)|².
    [[nodiscard]] double sum_sq() const noexcept { return sum_sq_; }

    /// |f(x)|² / Σ|f|².
    [[nodiscard]] std::vector<double> target_distribution() const;

  private:
    unsigned n_{0};
    std::uint64_t input_length_{0};
    SpecOrigin origin_{SpecOrigin::kRawAmplitudes};
    std::vector<std::complex<double>> f_;
    double sum_sq_{0.0};
};

} // namespace qamp
