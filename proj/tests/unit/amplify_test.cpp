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

#include "qamp/amplify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qamp/error.hpp"
#include "qamp/oracle.hpp"

namespace qamp {
namespace {

UnitaryProgram wh_program(unsigned m) {
    UnitaryProgram p(m);
    p.add(make_wh_range(0, m));
    return p;
}

/// Target mass of U Q^η |s⟩ computed from dense matrices.
double dense_success(const UnitaryProgram &p, const SourceSpec &s,
                     const TargetSpec &t, std::uint64_t eta) {
    const unsigned m = p.num_qubits();
    const oracle::DenseUnitary P = oracle::dense_of_program(p);
    const oracle::DenseUnitary Q = oracle::dense_q(p, s, t);
    const StateVector src = s.state(m);
    std::vector<Complex> v(src.amplitudes().begin(), src.amplitudes().end());
    for (std::uint64_t k = 0; k < eta; ++k) {
        v = Q.apply(v);
    }
    v = P.apply(v);
    double mass = 0.0;
    t.set().for_each([&](BasisIndex i) { mass += std::norm(v[i]); });
    return mass;
}

TEST(TargetSpecTest, RejectsEmptySet) {
    EXPECT_THROW(TargetSpec(MarkedSet::from_indices({})), ArgumentError);
}

TEST(SourceSpecTest, ArbitraryRequiresUnitNorm) {
    EXPECT_THROW((void)SourceSpec::arbitrary(
                     StateVector::from_amplitudes({1.0, 1.0})),
                 ArgumentError);
}

TEST(SourceSpecTest, BasisReflectionNegatesOneAmplitude) {
    StateVector s = StateVector::from_amplitudes({0.6, 0.8});
    SourceSpec::basis(1).reflect(s);
    EXPECT_EQ(s[0], Complex(0.6));
    EXPECT_EQ(s[1], Complex(-0.8));
}

TEST(OverlapUTest, Examples) {
    EXPECT_DOUBLE_EQ(overlap_u(UnitaryProgram(1), SourceSpec::basis(0),
                               TargetSpec(MarkedSet::from_indices({0}))),
                     1.0);
    EXPECT_NEAR(overlap_u(wh_program(3), SourceSpec::basis(0),
                          TargetSpec(MarkedSet::from_indices({5}))),
                1.0 / std::sqrt(8.0), 1e-15);
}

TEST(OverlapUTest, SynthesisConstruction) {
    std::vector<Complex> f{1.0, 0.5, Complex(0.0, 0.3), 0.0};
    const AmplitudeSpec spec = AmplitudeSpec::from_amplitudes(f);
    UnitaryProgram p(3);
    p.add(make_wh_range(0, 2));
    p.add(make_cond_rot(spec));
    const double u = overlap_u(p, SourceSpec::basis(0),
                               TargetSpec(MarkedSet::prefix(4)));
    EXPECT_NEAR(u, std::sqrt((1.0 + 0.25 + 0.09) / 4.0), 1e-15);
}

TEST(OverlapUTest, DegenerateOverlap) {
    EXPECT_THROW((void)overlap_u(UnitaryProgram(1), SourceSpec::basis(0),
                                 TargetSpec(MarkedSet::from_indices({1}))),
                 DegenerateOverlapError);
}

TEST(PlanTest, Examples) {
    const AmplificationPlan full = plan(1.0);
    EXPECT_EQ(full.eta, 0u);
    EXPECT_DOUBLE_EQ(full.predicted_success, 1.0);

    const AmplificationPlan half = plan(0.5);
    EXPECT_EQ(half.eta, 1u);
    EXPECT_NEAR(half.predicted_success, 1.0, 1e-15);

    const AmplificationPlan eighth = plan(1.0 / std::sqrt(8.0));
    EXPECT_EQ(eighth.eta, 2u);
    // Reference: dense U Q^2 s for one marked state among eight.
    const double want = dense_success(wh_program(3), SourceSpec::basis(0),
                                      TargetSpec(MarkedSet::from_indices({5})),
                                      2);
    EXPECT_NEAR(eighth.predicted_success, want, 1e-13);
    EXPECT_NEAR(eighth.predicted_success, 0.9453, 5e-5);
}

TEST(PlanTest, RejectsOutOfRange) {
    EXPECT_THROW((void)plan(0.0), ArgumentError);
    EXPECT_THROW((void)plan(-0.1), ArgumentError);
    EXPECT_THROW((void)plan(1.5), ArgumentError);
    EXPECT_THROW((void)plan(std::nan("")), ArgumentError);
}

TEST(PlanTest, SearchFamilyIsNearQuarterPiOverU) {
    for (unsigned n = 6; n <= 20; ++n) {
        const double N = std::ldexp(1.0, static_cast<int>(n));
        for (std::uint64_t k : {1u, 4u, 16u}) {
            const double u = std::sqrt(static_cast<double>(k) / N);
            const AmplificationPlan pl = plan(u);
            EXPECT_LE(std::abs(static_cast<double>(pl.eta) -
                               std::numbers::pi / (4.0 * u)),
                      1.0)
                << "n=" << n << " k=" << k;
        }
    }
}

TEST(PlanTest, SmallUGridWithinOnePlusU) {
    for (int i = 1; i <= 5000; ++i) {
        const double u = 0.05 * i / 5000.0;
        const AmplificationPlan pl = plan(u);
        EXPECT_LE(std::abs(static_cast<double>(pl.eta) -
                           std::numbers::pi / (4.0 * u)),
                  1.0 + u)
            << u;
    }
}

TEST(PlanTest, FirstLobeOptimality) {
    for (int i = 1; i <= 2000; ++i) {
        const double u = i / 2000.0;
        const AmplificationPlan pl = plan(u);
        const double best = pl.predicted_success;
        const double lobe = std::numbers::pi / (2.0 * pl.theta);
        for (std::uint64_t j = 0; static_cast<double>(2 * j + 1) <= lobe; ++j) {
            EXPECT_LE(rotation_success(pl.theta, j), best + 1e-12) << u;
        }
        EXPECT_GE(best, 1.0 - std::sin(pl.theta) * std::sin(pl.theta) - 1e-12)
            << u;
    }
}

TEST(ApplyQTest, SingleQubitExample) {
    // U = M, s = |0⟩, t = {1}: Q|0⟩ = -|1⟩.
    UnitaryProgram p(1);
    p.add(MStep{0});
    StateVector s(1);
    apply_q(s, p, SourceSpec::basis(0), TargetSpec(MarkedSet::from_indices({1})));
    EXPECT_LE(std::abs(s[0]), 1e-15);
    EXPECT_LE(std::abs(s[1] + 1.0), 1e-15);
}

TEST(ApplyQTest, MatchesDenseQ) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned m = 1 + trial % 5;
        const auto inst = oracle::random_instance(m, rng);
        const oracle::DenseUnitary Q =
            oracle::dense_q(inst.program, inst.source, inst.targets);
        const StateVector v = oracle::random_state(m, rng);
        StateVector got = v;
        apply_q(got, inst.program, inst.source, inst.targets);
        const auto want = Q.apply(v.amplitudes());
        EXPECT_LE(max_deviation(got, StateVector::from_amplitudes(want)), 1e-12);
    }
}

TEST(ApplyQTest, StructuralIdentities) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned m = 1 + trial % 5;
        const auto inst = oracle::random_instance(m, rng);
        const oracle::DenseUnitary P = oracle::dense_of_program(inst.program);
        const StateVector s = inst.source.state(m);
        const double u = overlap_u(inst.program, inst.source, inst.targets);
        const auto w = oracle::dense_w(P, s, inst.targets.set());

        // Q|s⟩ = (1 - 4u²)|s⟩ + 2w.
        StateVector qs = s;
        apply_q(qs, inst.program, inst.source, inst.targets);
        std::vector<Complex> want(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            want[i] = (1.0 - 4.0 * u * u) * s[i] + 2.0 * w[i];
        }
        EXPECT_LE(max_deviation(qs, StateVector::from_amplitudes(want)), 1e-12);

        // Q w = w - 2u²|s⟩.
        StateVector qw = StateVector::from_amplitudes(w);
        apply_q(qw, inst.program, inst.source, inst.targets);
        for (std::size_t i = 0; i < s.size(); ++i) {
            want[i] = w[i] - 2.0 * u * u * s[i];
        }
        EXPECT_LE(max_deviation(qw, StateVector::from_amplitudes(want)), 1e-12);

        // Q U^-1|t⟩ = U^-1|t⟩ - 2 conj(U_ts)|s⟩ for each target t.
        const oracle::DenseUnitary Pinv = P.adjoint();
        const auto Us = P.apply(s.amplitudes());
        inst.targets.set().for_each([&](BasisIndex t) {
            const auto ut = Pinv.apply(basis_state(m, t).amplitudes());
            StateVector q = StateVector::from_amplitudes(ut);
            apply_q(q, inst.program, inst.source, inst.targets);
            std::vector<Complex> expect(ut);
            for (std::size_t i = 0; i < s.size(); ++i) {
                expect[i] -= 2.0 * std::conj(Us[t]) * s[i];
            }
            EXPECT_LE(max_deviation(q, StateVector::from_amplitudes(expect)),
                      1e-12);
        });
    }
}

TEST(RunTest, EtaZeroGivesOverlapSquared) {
    const auto p = wh_program(3);
    const TargetSpec t(MarkedSet::from_indices({5}));
    const StateVector out = run(p, SourceSpec::basis(0), t, 0);
    EXPECT_NEAR(probability_mass(out, t.set()), 0.125, 1e-15);
}

TEST(RunTest, Examples) {
    {
        const auto p = wh_program(3);
        const TargetSpec t(MarkedSet::from_indices({5}));
        const StateVector out = run(p, SourceSpec::basis(0), t, 2);
        EXPECT_NEAR(probability_mass(out, t.set()),
                    dense_success(p, SourceSpec::basis(0), t, 2), 1e-13);
    }
    {
        const auto p = wh_program(4);
        const TargetSpec t(MarkedSet::from_indices({1, 6, 9, 14}));
        const StateVector out = run(p, SourceSpec::basis(0), t, 1);
        EXPECT_NEAR(probability_mass(out, t.set()), 1.0, 1e-14);
    }
}

TEST(RunTest, RotationLawOnRandomInstances) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned m = 1 + trial % 6;
        const auto inst = oracle::random_instance(m, rng);
        const double u = overlap_u(inst.program, inst.source, inst.targets);
        const double theta = std::asin(u);
        for (std::uint64_t eta = 0; eta <= 8; ++eta) {
            const StateVector out =
                run(inst.program, inst.source, inst.targets, eta);
            EXPECT_NEAR(probability_mass(out, inst.targets.set()),
                        rotation_success(theta, eta), 1e-10);
            EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
        }
    }
}

TEST(RunTest, ComplexPhaseCondRot) {
    std::vector<Complex> f{Complex(0.0, 0.5), Complex(-0.3, 0.4), 0.2,
                           Complex(0.0, -1.0)};
    const AmplitudeSpec spec = AmplitudeSpec::from_amplitudes(f);
    UnitaryProgram p(3);
    p.add(make_wh_range(0, 2));
    p.add(make_cond_rot(spec));
    const TargetSpec t(MarkedSet::prefix(4));
    const double u = overlap_u(p, SourceSpec::basis(0), t);
    const SubspaceAnalysis sa = subspace_analysis(p, SourceSpec::basis(0), t);
    EXPECT_LE(sa.residual_s, 1e-12);
    EXPECT_LE(sa.residual_w, 1e-12);
    for (std::uint64_t eta = 0; eta <= 6; ++eta) {
        const StateVector out = run(p, SourceSpec::basis(0), t, eta);
        EXPECT_NEAR(probability_mass(out, t.set()),
                    rotation_success(std::asin(u), eta), 1e-12);
    }
}

TEST(SubspaceAnalysisTest, EighthExample) {
    const auto sa = subspace_analysis(wh_program(3), SourceSpec::basis(0),
                                      TargetSpec(MarkedSet::from_indices({5})));
    EXPECT_LE(sa.residual_s, 1e-12);
    EXPECT_LE(sa.residual_w, 1e-12);
    // 1 - 2u² ± 2iu√(1 - u²) with u² = 1/8.
    EXPECT_NEAR(sa.eigenvalues[0].real(), 0.75, 1e-12);
    EXPECT_NEAR(sa.eigenvalues[0].imag(), 0.6614378277661477, 1e-12);
    EXPECT_NEAR(sa.eigenvalues[1].real(), 0.75, 1e-12);
    EXPECT_NEAR(sa.eigenvalues[1].imag(), -0.6614378277661477, 1e-12);
}

TEST(SubspaceAnalysisTest, TwoByTwoFollowsIdentities) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned m = 1 + trial % 5;
        const auto inst = oracle::random_instance(m, rng, 1e-3);
        const auto sa = subspace_analysis(inst.program, inst.source, inst.targets);
        const double u = sa.u;
        if (u > 1.0 - 1e-9) {
            continue;
        }
        EXPECT_LE(std::abs(sa.two_by_two[0] - (1.0 - 4.0 * u * u)), 1e-10);
        EXPECT_LE(std::abs(sa.two_by_two[1] - (-2.0 * u)), 1e-10);
        EXPECT_LE(std::abs(sa.two_by_two[2] - 2.0 * u), 1e-10);
        EXPECT_LE(std::abs(sa.two_by_two[3] - 1.0), 1e-10);
    }
}

TEST(SubspaceAnalysisTest, SmallUEigenvaluesNearOnePlusMinusTwoIU) {
    const auto sa = subspace_analysis(wh_program(12), SourceSpec::basis(0),
                                      TargetSpec(MarkedSet::from_indices({77})));
    const double u = 1.0 / 64.0;
    EXPECT_LE(std::abs(sa.eigenvalues[0] - Complex(1.0, 2.0 * u)), 4.0 * u * u);
    EXPECT_LE(std::abs(sa.eigenvalues[1] - Complex(1.0, -2.0 * u)), 4.0 * u * u);
}

TEST(SubspaceAnalysisTest, EigenvaluesOnUnitCircleAtTwiceTheta) {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned m = 1 + trial % 6;
        const auto inst = oracle::random_instance(m, rng);
        const auto sa = subspace_analysis(inst.program, inst.source, inst.targets);
        EXPECT_LE(std::abs(sa.eigenvalues[0] - std::polar(1.0, 2.0 * sa.theta)),
                  1e-10);
        EXPECT_LE(std::abs(sa.eigenvalues[1] - std::polar(1.0, -2.0 * sa.theta)),
                  1e-10);
        EXPECT_LE(sa.residual_s, 1e-10);
        EXPECT_LE(sa.residual_w, 1e-10);
    }
}

TEST(Eigenvalues2x2Test, KnownMatrices) {
    const auto rot = eigenvalues_2x2({0.0, -1.0, 1.0, 0.0});
    EXPECT_LE(std::abs(rot[0] - Complex(0.0, 1.0)), 1e-15);
    EXPECT_LE(std::abs(rot[1] - Complex(0.0, -1.0)), 1e-15);
    const auto diag = eigenvalues_2x2({2.0, 0.0, 0.0, 3.0});
    EXPECT_TRUE((std::abs(diag[0] - 2.0) < 1e-15 && std::abs(diag[1] - 3.0) < 1e-15) ||
                (std::abs(diag[0] - 3.0) < 1e-15 && std::abs(diag[1] - 2.0) < 1e-15));
}

} // namespace
} // namespace qamp
