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

#include "qamp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "qamp/error.hpp"

namespace qamp {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(seed ^ splitmix64(index));
}

namespace {

constexpr double kNormTolerance = 1e-10;

// Kahan-compensated running sum of |a_i|². Entries from the last non-zero
// probability onward are pinned to exactly 1.
std::vector<double> cumulative_probabilities(const StateVector &state) {
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double sum = 0.0;
    double comp = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > 0.0) {
            last_nonzero = i;
        }
        const double y = p - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        cdf[i] = sum;
    }
    std::fill(cdf.begin() + static_cast<std::ptrdiff_t>(last_nonzero),
              cdf.end(), 1.0);
    return cdf;
}

std::vector<std::pair<BasisIndex, std::uint64_t>>
draw_shard(const std::vector<double> &cdf, std::uint64_t shots,
           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BasisIndex> draws(shots);
    for (auto &d : draws) {
        // 53 random bits -> uniform double in [0, 1).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        d = static_cast<BasisIndex>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
    std::sort(draws.begin(), draws.end());
    std::vector<std::pair<BasisIndex, std::uint64_t>> runs;
    for (std::size_t i = 0; i < draws.size();) {
        std::size_t j = i;
        while (j < draws.size() && draws[j] == draws[i]) {
            ++j;
        }
        runs.emplace_back(draws[i], j - i);
        i = j;
    }
    return runs;
}

} // namespace

Counts measure_shots(const StateVector &state, std::uint64_t shots,
                     std::uint64_t seed, unsigned workers) {
    if (shots == 0) {
        throw ArgumentError("shots must be at least 1");
    }
    const double n2 = state.norm_squared();
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw ArgumentError("cannot sample from a state with norm² " +
                            std::to_string(n2));
    }
    const std::vector<double> cdf = cumulative_probabilities(state);
    const std::uint64_t shards = (shots + kShotsPerShard - 1) / kShotsPerShard;
    std::vector<std::vector<std::pair<BasisIndex, std::uint64_t>>> results(
        shards);

    auto work = [&](std::uint64_t first) {
        for (std::uint64_t k = first; k < shards;
             k += std::max(workers, 1U)) {
            const std::uint64_t n =
                std::min(kShotsPerShard, shots - k * kShotsPerShard);
            results[k] = draw_shard(cdf, n, derive_seed(seed, k));
        }
    };
    if (workers <= 1 || shards == 1) {
        workers = 1;
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    Counts counts;
    for (const auto &runs : results) {
        for (const auto &[index, n] : runs) {
            counts[index] += n;
        }
    }
    return counts;
}

ConditionedCounts condition_on_ancilla(const Counts &counts, unsigned n) {
    const BasisIndex half = BasisIndex{1} << n;
    ConditionedCounts out;
    for (const auto &[index, c] : counts) {
        if (index >= 2 * half) {
            throw ArgumentError("count index " + std::to_string(index) +
                                " out of range for " + std::to_string(n) +
                                " register qubits plus ancilla");
        }
        if (index < half) {
            out.counts[index] += c;
            out.accepted += c;
        }
    }
    return out;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw ArgumentError("distribution lengths differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        sum += std::abs(p[i] - q[i]);
    }
    return 0.5 * sum;
}

Comparison compare(const Counts &counts, std::span<const double> target) {
    const double target_sum = std::accumulate(target.begin(), target.end(), 0.0);
    if (std::abs(target_sum - 1.0) > 1e-9) {
        throw ArgumentError("target distribution sums to " +
                            std::to_string(target_sum));
    }
    std::uint64_t accepted = 0;
    for (const auto &[index, c] : counts) {
        if (index >= target.size()) {
            throw ArgumentError("count index " + std::to_string(index) +
                                " outside the target support");
        }
        accepted += c;
    }
    if (accepted == 0) {
        throw EmptySampleError("no accepted shots to compare");
    }

    const double total = static_cast<double>(accepted);
    std::vector<double> empirical(target.size(), 0.0);
    for (const auto &[index, c] : counts) {
        empirical[index] = static_cast<double>(c) / total;
    }
    Comparison out;
    out.tv_distance = total_variation(empirical, target);

    // (observed, expected) per chi-square bin.
    std::vector<std::pair<double, double>> bins;
    double pooled_obs = 0.0;
    double pooled_exp = 0.0;
    for (std::size_t x = 0; x < target.size(); ++x) {
        const double obs = empirical[x] * total;
        const double exp = target[x] * total;
        if (exp >= 5.0) {
            bins.emplace_back(obs, exp);
        } else {
            pooled_obs += obs;
            pooled_exp += exp;
        }
    }
    if (pooled_exp >= 5.0) {
        bins.emplace_back(pooled_obs, pooled_exp);
    } else if (pooled_obs > 0.0 || pooled_exp > 0.0) {
        if (bins.empty()) {
            bins.emplace_back(pooled_obs, pooled_exp);
        } else {
            auto smallest = std::min_element(
                bins.begin(), bins.end(),
                [](const auto &a, const auto &b) { return a.second < b.second; });
            smallest->first += pooled_obs;
            smallest->second += pooled_exp;
        }
    }
    for (const auto &[obs, exp] : bins) {
        if (exp > 0.0) {
            out.chi_square += (obs - exp) * (obs - exp) / exp;
        }
    }
    out.dof = bins.empty() ? 0 : bins.size() - 1;
    return out;
}

} // namespace qamp
