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

#include "qamp/io.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#ifndef QAMP_VERSION
#define QAMP_VERSION "0.0.0"
#endif

namespace qamp::io {

namespace {

double finite_number(const Json &v, const std::string &where) {
    if (!v.is_number()) {
        throw ParseError(where + " is not a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ParseError(where + " is not finite");
    }
    return x;
}

} // namespace

SpecFile parse_spec(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("spec must be a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (key != "amplitudes" && key != "probabilities" && key != "label") {
            throw ParseError("unknown field \"" + key + "\"");
        }
    }
    const bool has_amps = doc.contains("amplitudes");
    const bool has_probs = doc.contains("probabilities");
    if (has_amps == has_probs) {
        throw ParseError(
            "spec needs exactly one of \"amplitudes\" or \"probabilities\"");
    }

    SpecFile out;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw ParseError("\"label\" must be a string");
        }
        out.label = doc["label"].get<std::string>();
    }

    const Json &list = has_amps ? doc["amplitudes"] : doc["probabilities"];
    if (!list.is_array() || list.empty()) {
        throw ParseError("value list must be a non-empty array");
    }
    if (has_amps) {
        out.origin = SpecOrigin::kRawAmplitudes;
        out.amplitudes.reserve(list.size());
        for (std::size_t i = 0; i < list.size(); ++i) {
            const Json &pair = list[i];
            const std::string where = "amplitudes[" + std::to_string(i) + "]";
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError(where + " must be a [re, im] pair");
            }
            out.amplitudes.emplace_back(finite_number(pair[0], where),
                                        finite_number(pair[1], where));
        }
    } else {
        out.origin = SpecOrigin::kProbabilities;
        out.probabilities.reserve(list.size());
        for (std::size_t i = 0; i < list.size(); ++i) {
            out.probabilities.push_back(finite_number(
                list[i], "probabilities[" + std::to_string(i) + "]"));
        }
    }
    return out;
}

SpecFile read_spec_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

AmplitudeSpec to_amplitude_spec(const SpecFile &file) {
    if (file.origin == SpecOrigin::kProbabilities) {
        return AmplitudeSpec::from_probabilities(file.probabilities);
    }
    return AmplitudeSpec::from_amplitudes(file.amplitudes);
}

Json spec_echo(const SpecFile &file, const AmplitudeSpec &spec) {
    Json out;
    out["label"] = file.label ? Json(*file.label) : Json(nullptr);
    out["N"] = spec.size();
    out["origin"] = std::string(to_string(spec.origin()));
    out["input_length"] = spec.input_length();
    Json values = Json::array();
    if (file.origin == SpecOrigin::kProbabilities) {
        for (double p : file.probabilities) {
            values.push_back(p);
        }
    } else {
        for (const Complex &a : file.amplitudes) {
            values.push_back(Json::array({a.real(), a.imag()}));
        }
    }
    out["input"] = std::move(values);
    return out;
}

Json plan_json(const AmplificationPlan &plan) {
    Json out;
    out["u"] = plan.u;
    out["theta"] = plan.theta;
    out["eta"] = plan.eta;
    out["predicted_success"] = plan.predicted_success;
    return out;
}

Json run_json(const SynthesisResult &result) {
    Json out;
    out["eta"] = result.eta;
    out["success_probability"] = result.success_probability;
    out["conditioned_state_error"] = result.conditioned_state_error;
    out["conditioned_distribution"] = result.conditioned_distribution;
    return out;
}

Json sampling_json(const SamplingSummary &summary) {
    Json out;
    out["shots"] = summary.shots;
    out["seed"] = summary.seed;
    out["accepted"] = summary.conditioned.accepted;
    if (summary.comparison) {
        out["tv_distance"] = summary.comparison->tv_distance;
        out["chi_square"] = summary.comparison->chi_square;
        out["dof"] = summary.comparison->dof;
    } else {
        out["tv_distance"] = nullptr;
        out["chi_square"] = nullptr;
        out["dof"] = nullptr;
    }
    Json counts = Json::object();
    for (const auto &[index, c] : summary.conditioned.counts) {
        counts[std::to_string(index)] = c;
    }
    out["conditioned_counts"] = std::move(counts);
    return out;
}

Json tool_json(bool timestamp) {
    Json out;
    out["version"] = QAMP_VERSION;
    out["rng_name"] = std::string(kRngName);
    if (timestamp) {
        const auto now = std::chrono::system_clock::now();
        out["generated_at_unix"] =
            std::chrono::duration_cast<std::chrono::seconds>(
                now.time_since_epoch())
                .count();
    }
    return out;
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

} // namespace qamp::io
