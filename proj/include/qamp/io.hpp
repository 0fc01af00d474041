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
 * JSON spec files and reports.
 *
 * A spec file is an object with exactly one of
 *   "amplitudes":    [[re, im], ...]
 *   "probabilities": [p, ...]
 * and an optional string "label". Any other key is rejected.
 *
 * Reports are ordered JSON objects; doubles are written in shortest
 * round-trip form.
 */

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qamp/amplify.hpp"
#include "qamp/amplitude_spec.hpp"
#include "qamp/sampler.hpp"
#include "qamp/synth.hpp"

namespace qamp::io {

using Json = nlohmann::ordered_json;

/// Malformed or unreadable spec file.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SpecFile {
    std::optional<std::string> label;
    SpecOrigin origin{SpecOrigin::kRawAmplitudes};
    std::vector<Complex> amplitudes;
    std::vector<double> probabilities;
};

[[nodiscard]] SpecFile parse_spec(std::string_view text);
[[nodiscard]] SpecFile read_spec_file(const std::filesystem::path &path);

/// Validates through AmplitudeSpec, so SpecError / DegenerateSpecError
/// propagate.
[[nodiscard]] AmplitudeSpec to_amplitude_spec(const SpecFile &file);

[[nodiscard]] Json spec_echo(const SpecFile &file, const AmplitudeSpec &spec);
[[nodiscard]] Json plan_json(const AmplificationPlan &plan);
[[nodiscard]] Json run_json(const SynthesisResult &result);

struct SamplingSummary {
    std::uint64_t shots{0};
    std::uint64_t seed{0};
    ConditionedCounts conditioned;
    /// Absent when no shot was accepted.
    std::optional<Comparison> comparison;
};

[[nodiscard]] Json sampling_json(const SamplingSummary &summary);

/// version and RNG name; with `timestamp` also the generation time.
[[nodiscard]] Json tool_json(bool timestamp = false);

/// Two-space indented, newline terminated.
[[nodiscard]] std::string dump(const Json &doc);

} // namespace qamp::io
