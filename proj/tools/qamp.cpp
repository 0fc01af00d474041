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

// qamp: command-line front end for amplitude amplification and state
// synthesis.
//
// Exit codes: 0 ok, 1 check failure, 2 parse/usage, 3 degenerate spec,
// 4 resource cap, 5 empty sample, 6 adaptive exhaustion.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qamp/error.hpp"
#include "qamp/io.hpp"
#include "qamp/oracle.hpp"
#include "qamp/sampler.hpp"
#include "qamp/synth.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kCheckFailure = 1,
    kUsage = 2,
    kDegenerate = 3,
    kResource = 4,
    kEmptySample = 5,
    kAdaptiveExhausted = 6,
};

using qamp::io::Json;

struct CommonOptions {
    bool timestamp{false};
};

void emit(const Json &doc, const std::string &output) {
    const std::string text = qamp::io::dump(doc);
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        throw qamp::io::ParseError("cannot write " + output);
    }
    out << text;
}

struct LoadedSpec {
    qamp::io::SpecFile file;
    qamp::AmplitudeSpec spec;
};

LoadedSpec load(const std::string &path) {
    qamp::io::SpecFile file = qamp::io::read_spec_file(path);
    qamp::AmplitudeSpec spec = qamp::io::to_amplitude_spec(file);
    return {std::move(file), std::move(spec)};
}

int cmd_analyze(const std::string &input, const CommonOptions &common) {
    const LoadedSpec loaded = load(input);
    const auto problem = qamp::build_program(loaded.spec);
    const auto plan = qamp::plan(
        qamp::overlap_u(problem.program, problem.source, problem.targets));
    Json doc;
    doc["spec"] = qamp::io::spec_echo(loaded.file, loaded.spec);
    doc["plan"] = qamp::io::plan_json(plan);
    doc["tool"] = qamp::io::tool_json(common.timestamp);
    emit(doc, "");
    return kOk;
}

int cmd_synth(const std::string &input, std::optional<std::uint64_t> iterations,
              const std::string &output, const CommonOptions &common) {
    const LoadedSpec loaded = load(input);
    const auto result = qamp::synthesize(loaded.spec, iterations);
    Json doc;
    doc["spec"] = qamp::io::spec_echo(loaded.file, loaded.spec);
    doc["plan"] = qamp::io::plan_json(result.plan);
    doc["run"] = qamp::io::run_json(result);
    doc["tool"] = qamp::io::tool_json(common.timestamp);
    emit(doc, output);
    return kOk;
}

int cmd_sample(const std::string &input, std::uint64_t shots,
               std::uint64_t seed, unsigned workers, const std::string &output,
               const CommonOptions &common) {
    if (shots == 0) {
        throw qamp::ArgumentError("--shots must be at least 1");
    }
    const LoadedSpec loaded = load(input);
    const auto result = qamp::synthesize(loaded.spec);
    const auto counts =
        qamp::measure_shots(result.final_state, shots, seed, workers);

    qamp::io::SamplingSummary summary;
    summary.shots = shots;
    summary.seed = seed;
    summary.conditioned =
        qamp::condition_on_ancilla(counts, loaded.spec.register_qubits());
    if (summary.conditioned.accepted > 0) {
        summary.comparison = qamp::compare(summary.conditioned.counts,
                                           loaded.spec.target_distribution());
    }

    Json doc;
    doc["spec"] = qamp::io::spec_echo(loaded.file, loaded.spec);
    doc["plan"] = qamp::io::plan_json(result.plan);
    doc["run"] = qamp::io::run_json(result);
    doc["sampling"] = qamp::io::sampling_json(summary);
    doc["tool"] = qamp::io::tool_json(common.timestamp);
    emit(doc, output);
    if (summary.conditioned.accepted == 0) {
        std::cerr << "qamp: no shot heralded ancilla = 0\n";
        return kEmptySample;
    }
    return kOk;
}

std::vector<qamp::BasisIndex> parse_targets(const std::string &list,
                                            unsigned n) {
    std::vector<qamp::BasisIndex> out;
    std::stringstream ss(list);
    std::string item;
    const qamp::BasisIndex dim = qamp::BasisIndex{1} << n;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception &) {
            throw qamp::ArgumentError("bad target \"" + item + "\"");
        }
        if (used != item.size() || v >= dim) {
            throw qamp::ArgumentError("target \"" + item +
                                      "\" is not an index below " +
                                      std::to_string(dim));
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw qamp::ArgumentError("--targets must list at least one index");
    }
    std::vector<qamp::BasisIndex> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw qamp::ArgumentError("--targets contains duplicates");
    }
    return out;
}

int cmd_grover(unsigned n, const std::string &target_list, std::uint64_t shots,
               std::uint64_t seed, const std::string &output,
               const CommonOptions &common) {
    if (shots == 0) {
        throw qamp::ArgumentError("--shots must be at least 1");
    }
    qamp::check_register_width(n + 1);
    const auto targets = parse_targets(target_list, n);
    std::vector<qamp::Complex> f(std::size_t{1} << n, qamp::Complex{});
    for (auto t : targets) {
        f[t] = 1.0;
    }
    const auto spec = qamp::AmplitudeSpec::from_amplitudes(std::move(f));
    const auto result = qamp::synthesize(spec);
    const auto counts = qamp::measure_shots(result.final_state, shots, seed);
    const auto conditioned = qamp::condition_on_ancilla(counts, n);
    std::uint64_t hits = 0;
    for (auto t : targets) {
        if (auto it = conditioned.counts.find(t);
            it != conditioned.counts.end()) {
            hits += it->second;
        }
    }

    Json doc;
    Json search;
    search["n_qubits"] = n;
    search["N"] = spec.size();
    search["k"] = targets.size();
    search["targets"] = targets;
    doc["search"] = std::move(search);
    doc["plan"] = qamp::io::plan_json(result.plan);
    Json run;
    run["eta"] = result.eta;
    run["success_probability"] = result.success_probability;
    run["conditioned_state_error"] = result.conditioned_state_error;
    doc["run"] = std::move(run);
    Json sampling;
    sampling["shots"] = shots;
    sampling["seed"] = seed;
    sampling["hits"] = hits;
    sampling["hit_rate"] =
        static_cast<double>(hits) / static_cast<double>(shots);
    doc["sampling"] = std::move(sampling);
    doc["tool"] = qamp::io::tool_json(common.timestamp);
    emit(doc, output);
    return kOk;
}

int cmd_adaptive(const std::string &input, std::uint64_t seed,
                 std::uint64_t max_rounds, const std::string &output,
                 const CommonOptions &common) {
    const LoadedSpec loaded = load(input);
    auto schedule = qamp::RuntimeSchedule::for_size(loaded.spec.size());
    schedule.max_rounds = max_rounds;

    Json adaptive;
    adaptive["seed"] = seed;
    adaptive["max_rounds"] = max_rounds;
    adaptive["growth"] = schedule.growth;
    adaptive["cap"] = schedule.cap;

    Json doc;
    doc["spec"] = qamp::io::spec_echo(loaded.file, loaded.spec);
    try {
        const auto result =
            qamp::adaptive_synthesize(loaded.spec, seed, schedule);
        adaptive["rounds"] = result.rounds;
        adaptive["total_iterations"] = result.total_iterations;
        adaptive["etas"] = result.etas;
        doc["adaptive"] = std::move(adaptive);
        doc["run"] = qamp::io::run_json(result.result);
        doc["tool"] = qamp::io::tool_json(common.timestamp);
        emit(doc, output);
        return kOk;
    } catch (const qamp::AdaptiveFailureError &e) {
        adaptive["rounds"] = e.rounds();
        adaptive["total_iterations"] = e.total_iterations();
        doc["adaptive"] = std::move(adaptive);
        doc["tool"] = qamp::io::tool_json(common.timestamp);
        emit(doc, output);
        std::cerr << "qamp: " << e.what() << "\n";
        return kAdaptiveExhausted;
    }
}

int cmd_oracle_check(unsigned max_qubits, std::uint64_t trials,
                     std::uint64_t seed) {
    if (trials == 0) {
        throw qamp::ArgumentError("--trials must be at least 1");
    }
    const auto suites = qamp::oracle::run_self_check(max_qubits, trials, seed);
    bool ok = true;
    for (const auto &s : suites) {
        std::cout << std::left << std::setw(22) << s.name << " worst "
                  << std::scientific << std::setprecision(3) << s.worst
                  << "  tol " << s.tolerance << "  "
                  << (s.passed() ? "PASS" : "FAIL") << "\n";
        ok = ok && s.passed();
    }
    std::cout << (ok ? "all suites passed" : "oracle check FAILED") << "\n";
    return ok ? kOk : kCheckFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Amplitude amplification and state synthesis on a dense "
                 "state-vector simulator"};
    app.require_subcommand(1);
    CommonOptions common;
    app.add_flag("--timestamp", common.timestamp,
                 "Include the generation time in reports");

    std::string input;
    std::string output;
    std::optional<std::uint64_t> iterations;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    unsigned n_qubits = 0;
    std::string targets;
    std::uint64_t max_rounds = 64;
    unsigned max_qubits = 5;
    std::uint64_t trials = 50;

    auto *analyze = app.add_subcommand("analyze", "Print the amplification plan");
    analyze->add_option("--input", input, "Spec file (JSON)")->required();

    auto *synth = app.add_subcommand("synth", "Synthesize the target state");
    synth->add_option("--input", input, "Spec file (JSON)")->required();
    synth->add_option("--iterations", iterations,
                      "Override the planned iteration count");
    synth->add_option("--output", output, "Report path (default stdout)");

    auto *sample = app.add_subcommand("sample", "Synthesize and sample");
    sample->add_option("--input", input, "Spec file (JSON)")->required();
    sample->add_option("--shots", shots, "Number of measurements")->required();
    sample->add_option("--seed", seed, "Random seed")->required();
    sample->add_option("--workers", workers, "Sampling threads");
    sample->add_option("--output", output, "Report path (default stdout)");

    auto *grover = app.add_subcommand("grover", "Multi-target search");
    grover->add_option("--n-qubits", n_qubits, "Register width")->required();
    grover->add_option("--targets", targets, "Comma-separated target indices")
        ->required();
    grover->add_option("--shots", shots, "Number of measurements")->required();
    grover->add_option("--seed", seed, "Random seed")->required();
    grover->add_option("--output", output, "Report path (default stdout)");

    auto *adaptive =
        app.add_subcommand("adaptive", "Synthesis with unknown total weight");
    adaptive->add_option("--input", input, "Spec file (JSON)")->required();
    adaptive->add_option("--seed", seed, "Random seed")->required();
    adaptive->add_option("--max-rounds", max_rounds, "Round limit");
    adaptive->add_option("--output", output, "Report path (default stdout)");

    auto *check = app.add_subcommand("oracle-check",
                                     "Compare kernels against dense matrices");
    check->add_option("--max-qubits", max_qubits, "Largest register");
    check->add_option("--trials", trials, "Random instances per width");
    check->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*analyze) {
            return cmd_analyze(input, common);
        }
        if (*synth) {
            return cmd_synth(input, iterations, output, common);
        }
        if (*sample) {
            return cmd_sample(input, shots, seed, workers, output, common);
        }
        if (*grover) {
            return cmd_grover(n_qubits, targets, shots, seed, output, common);
        }
        if (*adaptive) {
            return cmd_adaptive(input, seed, max_rounds, output, common);
        }
        if (*check) {
            return cmd_oracle_check(max_qubits, trials, seed);
        }
    } catch (const qamp::DegenerateSpecError &e) {
        std::cerr << "qamp: " << e.what() << "\n";
        return kDegenerate;
    } catch (const qamp::DegenerateOverlapError &e) {
        std::cerr << "qamp: " << e.what() << "\n";
        return kDegenerate;
    } catch (const qamp::ResourceError &e) {
        std::cerr << "qamp: " << e.what() << "\n";
        return kResource;
    } catch (const qamp::EmptySampleError &e) {
        std::cerr << "qamp: " << e.what() << "\n";
        return kEmptySample;
    } catch (const std::exception &e) {
        // Parse errors, spec violations and bad arguments.
        std::cerr << "qamp: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
