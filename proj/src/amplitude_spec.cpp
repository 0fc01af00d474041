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

#include "qamp/amplitude_spec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "qamp/error.hpp"

namespace qamp {

std::string_view to_string(SpecOrigin origin) {
    switch (origin) {
    case SpecOrigin::kRawAmplitudes:
        return "amplitudes";
    case SpecOrigin::kProbabilities:
        return "probabilities";
    }
    return "unknown";
}

AmplitudeSpec AmplitudeSpec::from_amplitudes(
    std::vector<std::complex<double>> f) {
    if (f.empty()) {
        throw SpecError("amplitude table is empty");
    }
    AmplitudeSpec out;
    out.input_length_ = f.size();
    for (std::size_t x = 0; x < f.size(); ++x) {
        auto &v = f[x];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw SpecError("non-finite amplitude at index " +
                            std::to_string(x));
        }
        const double mag = std::abs(v);
        if (mag > 1.0 + kMagnitudeSlack) {
            throw SpecError("|f(" + std::to_string(x) + ")| = " +
                            std::to_string(mag) + " exceeds 1");
        }
        if (mag > 1.0) {
            v /= mag;
        }
        out.sum_sq_ += std::norm(v);
    }
    if (!(out.sum_sq_ > 0.0)) {
        throw DegenerateSpecError("amplitude table is identically zero");
    }
    f.resize(std::bit_ceil(f.size()), std::complex<double>{});
    out.n_ = static_cast<unsigned>(std::countr_zero(f.size()));
    out.f_ = std::move(f);
    return out;
}

AmplitudeSpec AmplitudeSpec::from_probabilities(std::span<const double> p) {
    if (p.empty()) {
        throw SpecError("probability table is empty");
    }
    double max_p = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!std::isfinite(p[x]) || p[x] < 0.0) {
            throw SpecError("probability at index " + std::to_string(x) +
                            " is negative or non-finite");
        }
        max_p = std::max(max_p, p[x]);
    }
    if (!(max_p > 0.0)) {
        throw DegenerateSpecError("probability table is identically zero");
    }
    std::vector<std::complex<double>> f(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        f[x] = std::sqrt(p[x] / max_p);
    }
    AmplitudeSpec out = from_amplitudes(std::move(f));
    out.origin_ = SpecOrigin::kProbabilities;
    return out;
}

std::vector<double> AmplitudeSpec::target_distribution() const {
    std::vector<double> out(f_.size());
    for (std::size_t x = 0; x < f_.size(); ++x) {
        out[x] = std::norm(f_[x]) / sum_sq_;
    }
    return out;
}

} // namespace qamp
