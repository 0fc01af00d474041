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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qamp {

using BasisIndex = std::uint64_t;

/// A set of basis indices, stored either as an explicit sorted list or as a
/// membership predicate over [0, bound).
class MarkedSet {
  public:
    /// Sets with more members than this are better represented by predicate.
    static constexpr std::size_t kExplicitLimit = std::size_t{1} << 20;

    using Predicate = std::function<bool(BasisIndex)>;

    MarkedSet() = default;

    /// Sorts and deduplicates.
    static MarkedSet from_indices(std::vector<BasisIndex> indices);

    /// `id` names the predicate in diagnostics.
    static MarkedSet from_predicate(Predicate pred, std::uint64_t dim,
                                    std::string id);

    /// {0, 1, ..., count-1}; explicit up to kExplicitLimit members, a
    /// predicate beyond.
    static MarkedSet prefix(std::uint64_t count);

    [[nodiscard]] bool is_explicit() const noexcept { return !pred_; }

    /// Exclusive upper bound on every member; a register must have at least
    /// this many amplitudes for the set to be in range.
    [[nodiscard]] std::uint64_t bound() const noexcept { return bound_; }

    [[nodiscard]] bool contains(BasisIndex i) const;

    /// Members in increasing order. Predicate sets are scanned over [0, bound).
    template <class F> void for_each(F &&fn) const {
        if (!pred_) {
            for (BasisIndex i : indices_) {
                fn(i);
            }
            return;
        }
        for (BasisIndex i = 0; i < bound_; ++i) {
            if ((*pred_)(i)) {
                fn(i);
            }
        }
    }

    /// Explicit members in sorted order (empty for predicate sets).
    [[nodiscard]] std::span<const BasisIndex> indices() const noexcept {
        return indices_;
    }

    /// Expands to an explicit sorted list regardless of representation.
    [[nodiscard]] std::vector<BasisIndex> materialize() const;

    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
    [[nodiscard]] bool empty() const noexcept { return count_ == 0; }

    [[nodiscard]] const std::string &id() const noexcept { return id_; }

  private:
    std::vector<BasisIndex> indices_;
    std::shared_ptr<const Predicate> pred_;
    std::uint64_t bound_{0};
    std::uint64_t count_{0};
    std::string id_;
};

} // namespace qamp
