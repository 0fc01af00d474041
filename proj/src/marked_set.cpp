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

#include "qamp/marked_set.hpp"

#include <utility>

namespace qamp {

MarkedSet MarkedSet::from_indices(std::vector<BasisIndex> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    MarkedSet out;
    out.bound_ = indices.empty() ? 0 : indices.back() + 1;
    out.count_ = indices.size();
    out.indices_ = std::move(indices);
    return out;
}

MarkedSet MarkedSet::from_predicate(Predicate pred, std::uint64_t dim,
                                    std::string id) {
    MarkedSet out;
    out.pred_ = std::make_shared<const Predicate>(std::move(pred));
    out.bound_ = dim;
    out.id_ = std::move(id);
    for (BasisIndex i = 0; i < dim; ++i) {
        if ((*out.pred_)(i)) {
            ++out.count_;
        }
    }
    return out;
}

MarkedSet MarkedSet::prefix(std::uint64_t count) {
    if (count <= kExplicitLimit) {
        std::vector<BasisIndex> idx(count);
        for (BasisIndex i = 0; i < count; ++i) {
            idx[i] = i;
        }
        MarkedSet out = from_indices(std::move(idx));
        out.id_ = "prefix";
        return out;
    }
    MarkedSet out;
    out.pred_ = std::make_shared<const Predicate>(
        [count](BasisIndex i) { return i < count; });
    out.bound_ = count;
    out.count_ = count;
    out.id_ = "prefix";
    return out;
}

bool MarkedSet::contains(BasisIndex i) const {
    if (pred_) {
        return i < bound_ && (*pred_)(i);
    }
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::vector<BasisIndex> MarkedSet::materialize() const {
    if (!pred_) {
        return indices_;
    }
    std::vector<BasisIndex> out;
    out.reserve(count_);
    for_each([&](BasisIndex i) { out.push_back(i); });
    return out;
}

} // namespace qamp
