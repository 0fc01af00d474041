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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qamp/error.hpp"

namespace qamp::io {
namespace {

TEST(ParseSpecTest, Probabilities) {
    const SpecFile s =
        parse_spec(R"({"label": "dyadic", "probabilities": [0.5, 0.25, 0.25]})");
    ASSERT_TRUE(s.label.has_value());
    EXPECT_EQ(*s.label, "dyadic");
    EXPECT_EQ(s.origin, SpecOrigin::kProbabilities);
    EXPECT_EQ(s.probabilities, (std::vector<double>{0.5, 0.25, 0.25}));
}

TEST(ParseSpecTest, Amplitudes) {
    const SpecFile s = parse_spec(R"({"amplitudes": [[1, 0], [0, -0.5]]})");
    EXPECT_FALSE(s.label.has_value());
    EXPECT_EQ(s.origin, SpecOrigin::kRawAmplitudes);
    ASSERT_EQ(s.amplitudes.size(), 2u);
    EXPECT_EQ(s.amplitudes[1], Complex(0.0, -0.5));
}

TEST(ParseSpecTest, Rejections) {
    EXPECT_THROW((void)parse_spec("not json"), ParseError);
    EXPECT_THROW((void)parse_spec("[1, 2]"), ParseError);
    EXPECT_THROW((void)parse_spec(R"({"probabilities": [1], "extra": 1})"),
                 ParseError);
    EXPECT_THROW((void)parse_spec(R"({"label": "x"})"), ParseError);
    EXPECT_THROW(
        (void)parse_spec(R"({"probabilities": [1], "amplitudes": [[1, 0]]})"),
        ParseError);
    EXPECT_THROW((void)parse_spec(R"({"probabilities": []})"), ParseError);
    EXPECT_THROW((void)parse_spec(R"({"probabilities": ["a"]})"), ParseError);
    EXPECT_THROW((void)parse_spec(R"({"amplitudes": [[1, 0, 0]]})"), ParseError);
    EXPECT_THROW((void)parse_spec(R"({"amplitudes": [1]})"), ParseError);
    EXPECT_THROW((void)parse_spec(R"({"label": 3, "probabilities": [1]})"),
                 ParseError);
}

TEST(ParseSpecTest, ValidationDeferredToAmplitudeSpec) {
    const SpecFile s = parse_spec(R"({"probabilities": [0, 0]})");
    EXPECT_THROW((void)to_amplitude_spec(s), DegenerateSpecError);
    const SpecFile t = parse_spec(R"({"amplitudes": [[2, 0]]})");
    EXPECT_THROW((void)to_amplitude_spec(t), SpecError);
}

TEST(ReadSpecFileTest, MissingFile) {
    EXPECT_THROW((void)read_spec_file("/nonexistent/spec.json"), ParseError);
}

TEST(ReportTest, SpecEcho) {
    const SpecFile s = parse_spec(R"({"probabilities": [0.5, 0.25, 0.25]})");
    const Json j = spec_echo(s, to_amplitude_spec(s));
    EXPECT_TRUE(j["label"].is_null());
    EXPECT_EQ(j["N"], 4);
    EXPECT_EQ(j["origin"], "probabilities");
    EXPECT_EQ(j["input_length"], 3);
    EXPECT_EQ(j["input"].size(), 3u);
}

TEST(ReportTest, SamplingWithoutComparisonUsesNulls) {
    SamplingSummary s;
    s.shots = 10;
    s.seed = 1;
    const Json j = sampling_json(s);
    EXPECT_EQ(j["accepted"], 0);
    EXPECT_TRUE(j["tv_distance"].is_null());
    EXPECT_TRUE(j["dof"].is_null());
    EXPECT_TRUE(j["conditioned_counts"].empty());
}

TEST(ReportTest, ToolBlock) {
    const Json j = tool_json();
    EXPECT_TRUE(j["version"].is_string());
    EXPECT_EQ(j["rng_name"], std::string(kRngName));
    EXPECT_FALSE(j.contains("generated_at_unix"));
    EXPECT_TRUE(tool_json(true).contains("generated_at_unix"));
}

TEST(ReportTest, DoublesRoundTripExactly) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = uni(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        Json doc;
        doc["x"] = x;
        const Json back = Json::parse(dump(doc));
        EXPECT_EQ(back["x"].get<double>(), x);
    }
}

TEST(ReportTest, DumpIsNewlineTerminated) {
    Json doc;
    doc["a"] = 1;
    const std::string s = dump(doc);
    EXPECT_EQ(s, "{\n  \"a\": 1\n}\n");
}

} // namespace
} // namespace qamp::io
