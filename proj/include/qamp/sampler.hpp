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
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "qamp/statevec.hpp"

namespace qamp {

/// Shots are drawn in fixed-size shards. Shard k runs its own mt19937_64
/// seeded with splitmix64(seed ^ splitmix64(k)), so the merged counts do not
/// depend on how shards are spread over worker threads.
inline constexpr std::string_view kRngName = "mt19937_64/splitmix64-shards";
inline constexpr std::uint64_t kShotsPerShard = std::uint64_t{1} << 16;

/// Basis index -> number of shots that landed there. Only non-zero entries.
using Counts = std::map<BasisIndex, std::uint64_t>;

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Sub-seed for stream `index` derived from a master seed.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed,
                                        std::uint64_t index) noexcept;

/// Draws `shots` basis indices from |a_i|² by inverse CDF. The state must be
/// normalized to within 1e-10.
[[nodiscard]] Counts measure_shots(const StateVector &state,
                                   std::uint64_t shots, std::uint64_t seed,
                                   unsigned workers = 1);

struct ConditionedCounts {
    /// Keyed by register index x (ancilla bit stripped).
    Counts counts;
    std::uint64_t accepted{0};
};

/// Keeps shots whose ancilla (bit n) is 0. Every index must be < 2^(n+1).
[[nodiscard]] ConditionedCounts condition_on_ancilla(const Counts &counts,
                                                     unsigned n);

struct Comparison {
    double tv_distance{0.0};
    double chi_square{0.0};
    std::uint64_t dof{0};
};

/// ½ Σ|p - q|. Lengths must match.
[[nodiscard]] double total_variation(std::span<const double> p,
                                     std::span<const double> q);

/// Empirical distribution of `counts` against `target` (which must sum to 1
/// within 1e-9). Chi-square bins with expected count below 5 are pooled into
/// one bin; if that pooled bin is itself below 5 it joins the smallest
/// remaining bin. dof = bins - 1.
[[nodiscard]] Comparison compare(const Counts &counts,
                                 std::span<const double> target);

} // namespace qamp
