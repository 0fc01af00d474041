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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qamp/amplify.hpp"
#include "qamp/error.hpp"
#include "qamp/gates.hpp"
#include "qamp/oracle.hpp"
#include "qamp/sampler.hpp"
#include "qamp/synth.hpp"

namespace py = pybind11;
using qamp::Complex;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

qamp::StateVector to_state(const CArray &a) {
    if (a.ndim() != 1) {
        throw qamp::ArgumentError("state must be one-dimensional");
    }
    std::vector<Complex> v(a.data(), a.data() + a.size());
    return qamp::StateVector::from_amplitudes(std::move(v));
}

CArray to_array(std::span<const Complex> v) {
    return CArray(static_cast<py::ssize_t>(v.size()), v.data());
}

CArray to_array(const qamp::StateVector &s) { return to_array(s.amplitudes()); }

qamp::AmplitudeSpec to_spec(const CArray &f) {
    if (f.ndim() != 1) {
        throw qamp::ArgumentError("f must be one-dimensional");
    }
    return qamp::AmplitudeSpec::from_amplitudes(
        std::vector<Complex>(f.data(), f.data() + f.size()));
}

qamp::SourceSpec to_source(const py::object &source) {
    if (py::isinstance<py::int_>(source)) {
        return qamp::SourceSpec::basis(source.cast<qamp::BasisIndex>());
    }
    return qamp::SourceSpec::arbitrary(to_state(source.cast<CArray>()));
}

qamp::TargetSpec to_targets(const std::vector<qamp::BasisIndex> &targets) {
    return qamp::TargetSpec(qamp::MarkedSet::from_indices(targets));
}

template <class F> CArray transform(const CArray &state, F &&fn) {
    qamp::StateVector s = to_state(state);
    fn(s);
    return to_array(s);
}

py::dict counts_dict(const qamp::Counts &c) {
    py::dict d;
    for (const auto &[k, v] : c) {
        d[py::int_(k)] = v;
    }
    return d;
}

qamp::Counts from_dict(const py::dict &d) {
    qamp::Counts c;
    for (const auto &[k, v] : d) {
        c[k.cast<qamp::BasisIndex>()] = v.cast<std::uint64_t>();
    }
    return c;
}

py::dict result_dict(const qamp::SynthesisResult &r) {
    py::dict d;
    d["u"] = r.plan.u;
    d["theta"] = r.plan.theta;
    d["planned_eta"] = r.plan.eta;
    d["predicted_success"] = r.plan.predicted_success;
    d["eta"] = r.eta;
    d["final_state"] = to_array(r.final_state);
    d["success_probability"] = r.success_probability;
    d["conditioned_amplitudes"] = to_array(r.conditioned_amplitudes);
    d["conditioned_distribution"] = py::array_t<double>(
        static_cast<py::ssize_t>(r.conditioned_distribution.size()),
        r.conditioned_distribution.data());
    d["conditioned_state_error"] = r.conditioned_state_error;
    return d;
}

} // namespace

PYBIND11_MODULE(_qamp, m) {
    m.doc() = "Amplitude amplification and state synthesis on a dense "
              "state-vector simulator.";

    static py::exception<qamp::SpecError> spec_error(m, "SpecError",
                                                     PyExc_ValueError);
    static py::exception<qamp::DegenerateSpecError> degenerate_spec(
        m, "DegenerateSpecError", spec_error.ptr());
    static py::exception<qamp::DegenerateOverlapError> degenerate_overlap(
        m, "DegenerateOverlapError", PyExc_ValueError);
    static py::exception<qamp::ResourceError> resource_error(
        m, "ResourceError", PyExc_MemoryError);
    static py::exception<qamp::EmptySampleError> empty_sample(
        m, "EmptySampleError", PyExc_RuntimeError);
    static py::exception<qamp::AdaptiveFailureError> adaptive_failure(
        m, "AdaptiveFailureError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const qamp::DegenerateSpecError &e) {
            py::set_error(degenerate_spec, e.what());
        } catch (const qamp::SpecError &e) {
            py::set_error(spec_error, e.what());
        } catch (const qamp::DegenerateOverlapError &e) {
            py::set_error(degenerate_overlap, e.what());
        } catch (const qamp::ResourceError &e) {
            py::set_error(resource_error, e.what());
        } catch (const qamp::EmptySampleError &e) {
            py::set_error(empty_sample, e.what());
        } catch (const qamp::AdaptiveFailureError &e) {
            py::set_error(adaptive_failure, e.what());
        } catch (const qamp::ArgumentError &e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.attr("RNG_NAME") = std::string(qamp::kRngName);

    m.def("basis_state", [](unsigned n, qamp::BasisIndex i) {
        return to_array(qamp::basis_state(n, i));
    }, py::arg("m"), py::arg("index"));

    m.def("apply_m", [](const CArray &s, unsigned q) {
        return transform(s, [&](auto &v) { qamp::apply_m(v, q); });
    }, py::arg("state"), py::arg("qubit"));
    m.def("apply_wh", [](const CArray &s, std::vector<unsigned> qs) {
        return transform(s, [&](auto &v) { qamp::apply_wh(v, qs); });
    }, py::arg("state"), py::arg("qubits"));
    m.def("apply_phase_flip",
          [](const CArray &s, std::vector<qamp::BasisIndex> marked) {
        const auto set = qamp::MarkedSet::from_indices(std::move(marked));
        return transform(s, [&](auto &v) { qamp::apply_phase_flip(v, set); });
    }, py::arg("state"), py::arg("marked"));
    m.def("apply_reflection", [](const CArray &s, const CArray &axis) {
        const auto a = to_state(axis);
        return transform(s, [&](auto &v) { qamp::apply_reflection(v, a); });
    }, py::arg("state"), py::arg("axis"));
    m.def("apply_cond_rot", [](const CArray &s, const CArray &f, bool adjoint) {
        const auto spec = to_spec(f);
        return transform(s, [&](auto &v) { qamp::apply_cond_rot(v, spec, adjoint); });
    }, py::arg("state"), py::arg("f"), py::arg("adjoint") = false);

    py::class_<qamp::UnitaryProgram>(m, "Program")
        .def(py::init<unsigned>(), py::arg("m"))
        .def_property_readonly("num_qubits", &qamp::UnitaryProgram::num_qubits)
        .def("__len__", [](const qamp::UnitaryProgram &p) { return p.steps().size(); })
        .def("add_m", [](qamp::UnitaryProgram &p, unsigned q) -> auto & {
            return p.add(qamp::MStep{q});
        }, py::arg("qubit"), py::return_value_policy::reference_internal)
        .def("add_wh", [](qamp::UnitaryProgram &p, std::vector<unsigned> qs) -> auto & {
            return p.add(qamp::WHStep{std::move(qs)});
        }, py::arg("qubits"), py::return_value_policy::reference_internal)
        .def("add_phase_flip",
             [](qamp::UnitaryProgram &p, std::vector<qamp::BasisIndex> marked) -> auto & {
            return p.add(qamp::PhaseFlipStep{
                qamp::MarkedSet::from_indices(std::move(marked))});
        }, py::arg("marked"), py::return_value_policy::reference_internal)
        .def("add_reflection", [](qamp::UnitaryProgram &p, const CArray &axis) -> auto & {
            return p.add(qamp::make_reflect(to_state(axis)));
        }, py::arg("axis"), py::return_value_policy::reference_internal)
        .def("add_cond_rot",
             [](qamp::UnitaryProgram &p, const CArray &f, bool adjoint) -> auto & {
            qamp::GateStep step = qamp::make_cond_rot(to_spec(f));
            return p.add(adjoint ? qamp::inverse(step) : std::move(step));
        }, py::arg("f"), py::arg("adjoint") = false,
           py::return_value_policy::reference_internal)
        .def("inverse", &qamp::UnitaryProgram::inverse)
        .def("describe", [](const qamp::UnitaryProgram &p) {
            std::vector<std::string> out;
            for (const auto &s : p.steps()) {
                out.push_back(qamp::describe(s));
            }
            return out;
        })
        .def("apply", [](const qamp::UnitaryProgram &p, const CArray &s) {
            return transform(s, [&](auto &v) { qamp::apply_program(v, p); });
        }, py::arg("state"))
        .def("apply_inverse", [](const qamp::UnitaryProgram &p, const CArray &s) {
            return transform(s, [&](auto &v) { qamp::apply_program_inverse(v, p); });
        }, py::arg("state"))
        .def("dense", [](const qamp::UnitaryProgram &p) {
            const auto d = qamp::oracle::dense_of_program(p);
            const auto n = static_cast<py::ssize_t>(d.dim());
            py::array_t<Complex> out({n, n});
            auto w = out.mutable_unchecked<2>();
            for (py::ssize_t r = 0; r < n; ++r) {
                for (py::ssize_t c = 0; c < n; ++c) {
                    w(r, c) = d(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                }
            }
            return out;
        });

    py::class_<qamp::AmplificationPlan>(m, "Plan")
        .def_readonly("u", &qamp::AmplificationPlan::u)
        .def_readonly("theta", &qamp::AmplificationPlan::theta)
        .def_readonly("eta", &qamp::AmplificationPlan::eta)
        .def_readonly("predicted_success", &qamp::AmplificationPlan::predicted_success)
        .def("__repr__", [](const qamp::AmplificationPlan &p) {
            return "Plan(u=" + std::to_string(p.u) + ", eta=" +
                   std::to_string(p.eta) + ")";
        });

    m.def("plan", &qamp::plan, py::arg("u"));
    m.def("rotation_success", &qamp::rotation_success, py::arg("theta"),
          py::arg("eta"));

    m.def("overlap_u", [](const qamp::UnitaryProgram &p, const py::object &source,
                          const std::vector<qamp::BasisIndex> &targets) {
        return qamp::overlap_u(p, to_source(source), to_targets(targets));
    }, py::arg("program"), py::arg("source"), py::arg("targets"));
    m.def("apply_q", [](const CArray &s, const qamp::UnitaryProgram &p,
                        const py::object &source,
                        const std::vector<qamp::BasisIndex> &targets) {
        const auto src = to_source(source);
        const auto t = to_targets(targets);
        return transform(s, [&](auto &v) { qamp::apply_q(v, p, src, t); });
    }, py::arg("state"), py::arg("program"), py::arg("source"), py::arg("targets"));
    m.def("run", [](const qamp::UnitaryProgram &p, const py::object &source,
                    const std::vector<qamp::BasisIndex> &targets, std::uint64_t eta) {
        return to_array(qamp::run(p, to_source(source), to_targets(targets), eta));
    }, py::arg("program"), py::arg("source"), py::arg("targets"), py::arg("eta"));
    m.def("subspace_analysis", [](const qamp::UnitaryProgram &p,
                                  const py::object &source,
                                  const std::vector<qamp::BasisIndex> &targets) {
        const auto sa = qamp::subspace_analysis(p, to_source(source), to_targets(targets));
        py::dict d;
        d["u"] = sa.u;
        d["theta"] = sa.theta;
        d["two_by_two"] = std::vector<Complex>(sa.two_by_two.begin(), sa.two_by_two.end());
        d["eigenvalues"] = std::vector<Complex>(sa.eigenvalues.begin(), sa.eigenvalues.end());
        d["residual_s"] = sa.residual_s;
        d["residual_w"] = sa.residual_w;
        return d;
    }, py::arg("program"), py::arg("source"), py::arg("targets"));

    m.def("amplitudes_from_probabilities", [](const std::vector<double> &p) {
        return to_array(qamp::AmplitudeSpec::from_probabilities(p).values());
    }, py::arg("p"));
    m.def("synthesize", [](const CArray &f, std::optional<std::uint64_t> eta) {
        return result_dict(qamp::synthesize(to_spec(f), eta));
    }, py::arg("f"), py::arg("eta") = py::none());
    m.def("adaptive_synthesize", [](const CArray &f, std::uint64_t seed,
                                    std::uint64_t max_rounds) {
        const auto spec = to_spec(f);
        auto sched = qamp::RuntimeSchedule::for_size(spec.size());
        sched.max_rounds = max_rounds;
        const auto r = qamp::adaptive_synthesize(spec, seed, sched);
        py::dict d = result_dict(r.result);
        d["rounds"] = r.rounds;
        d["total_iterations"] = r.total_iterations;
        d["etas"] = r.etas;
        return d;
    }, py::arg("f"), py::arg("seed"), py::arg("max_rounds") = 64);

    m.def("measure_shots", [](const CArray &s, std::uint64_t shots,
                              std::uint64_t seed, unsigned workers) {
        const auto state = to_state(s);
        qamp::Counts c;
        {
            py::gil_scoped_release release;
            c = qamp::measure_shots(state, shots, seed, workers);
        }
        return counts_dict(c);
    }, py::arg("state"), py::arg("shots"), py::arg("seed"), py::arg("workers") = 1);
    m.def("condition_on_ancilla", [](const py::dict &counts, unsigned n) {
        const auto r = qamp::condition_on_ancilla(from_dict(counts), n);
        return py::make_tuple(counts_dict(r.counts), r.accepted);
    }, py::arg("counts"), py::arg("n"));
    m.def("compare", [](const py::dict &counts, const std::vector<double> &target) {
        const auto c = qamp::compare(from_dict(counts), target);
        py::dict d;
        d["tv_distance"] = c.tv_distance;
        d["chi_square"] = c.chi_square;
        d["dof"] = c.dof;
        return d;
    }, py::arg("counts"), py::arg("target"));

    m.def("oracle_check", [](unsigned max_qubits, std::uint64_t trials,
                             std::uint64_t seed) {
        py::list out;
        for (const auto &s : qamp::oracle::run_self_check(max_qubits, trials, seed)) {
            out.append(py::make_tuple(s.name, s.worst, s.tolerance, s.passed()));
        }
        return out;
    }, py::arg("max_qubits") = 5, py::arg("trials") = 50, py::arg("seed") = 0);
}
