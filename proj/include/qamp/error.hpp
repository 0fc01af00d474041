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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qamp {

/// Bad index, mismatched dimensions, malformed parameters.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Requested register or dense matrix exceeds the configured size cap.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An amplitude or probability table violates its constraints.
class SpecError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The table carries no weight at all (Σ|f|² = 0).
class DegenerateSpecError : public SpecError {
  public:
    using SpecError::SpecError;
};

/// U|s⟩ has no component on the target set, so there is nothing to amplify.
class DegenerateOverlapError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class EmptySampleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when the adaptive protocol runs out of rounds without observing
/// ancilla = 0.
class AdaptiveFailureError : public std::runtime_error {
  public:
    AdaptiveFailureError(std::uint64_t rounds, std::uint64_t total_iterations)
        : std::runtime_error("adaptive synthesis exhausted " +
                             std::to_string(rounds) + " rounds (" +
                             std::to_string(total_iterations) +
                             " iterations) without a successful herald"),
          rounds_(rounds), total_iterations_(total_iterations) {}

    [[nodiscard]] std::uint64_t rounds() const noexcept { return rounds_; }
    [[nodiscard]] std::uint64_t total_iterations() const noexcept {
        return total_iterations_;
    }

  private:
    std::uint64_t rounds_;
    std::uint64_t total_iterations_;
};

} // namespace qamp
