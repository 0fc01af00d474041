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

#include "qamp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

#include "qamp/error.hpp"

namespace qamp::oracle {

DenseUnitary::DenseUnitary(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{}) {}

DenseUnitary DenseUnitary::identity(std::size_t dim) {
    DenseUnitary out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

DenseUnitary DenseUnitary::adjoint() const {
    DenseUnitary out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

std::vector<Complex> DenseUnitary::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) {
        throw ArgumentError("vector length does not match matrix dimension");
    }
    std::vector<Complex> out(dim_, Complex{});
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex sum{};
        for (std::size_t c = 0; c < dim_; ++c) {
            sum += (*this)(r, c) * v[c];
        }
        out[r] = sum;
    }
    return out;
}

DenseUnitary operator*(const DenseUnitary &a, const DenseUnitary &b) {
    if (a.dim_ != b.dim_) {
        throw ArgumentError("matrix dimensions differ");
    }
    const std::size_t n = a.dim_;
    DenseUnitary out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double max_entry_deviation(const DenseUnitary &a, const DenseUnitary &b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("matrix dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double unitarity_deviation(const DenseUnitary &m) {
    return max_entry_deviation(m.adjoint() * m,
                               DenseUnitary::identity(m.dim()));
}

namespace {

void require_cap(unsigned m, unsigned cap) {
    if (m > cap) {
        throw ResourceError("dense oracle limited to " + std::to_string(cap) +
                            " qubits, got " + std::to_string(m));
    }
}

// Tensor product of single-qubit factors: M on every qubit in `mask`,
// identity elsewhere. Entry (r, c) vanishes unless r and c agree off the mask.
DenseUnitary dense_hadamard_mask(std::size_t dim, std::uint64_t mask) {
    DenseUnitary out(dim);
    const double scale =
        std::pow(1.0 / std::numbers::sqrt2, std::popcount(mask));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (((r ^ c) & ~mask) != 0) {
                continue;
            }
            const bool odd = (std::popcount(r & c & mask) & 1) != 0;
            out(r, c) = odd ? -scale : scale;
        }
    }
    return out;
}

DenseUnitary dense_outer_reflection(std::span<const Complex> axis) {
    double n2 = 0.0;
    for (const Complex &a : axis) {
        n2 += std::norm(a);
    }
    DenseUnitary out = DenseUnitary::identity(axis.size());
    for (std::size_t r = 0; r < axis.size(); ++r) {
        for (std::size_t c = 0; c < axis.size(); ++c) {
            out(r, c) -= 2.0 * axis[r] * std::conj(axis[c]) / n2;
        }
    }
    return out;
}

} // namespace

DenseUnitary dense_of_step(const GateStep &step, unsigned m) {
    const std::size_t dim = std::size_t{1} << m;
    struct Visitor {
        std::size_t dim;
        DenseUnitary operator()(const MStep &s) const {
            return dense_hadamard_mask(dim, std::uint64_t{1} << s.qubit);
        }
        DenseUnitary operator()(const WHStep &s) const {
            std::uint64_t mask = 0;
            for (unsigned q : s.qubits) {
                mask |= std::uint64_t{1} << q;
            }
            return dense_hadamard_mask(dim, mask);
        }
        DenseUnitary operator()(const PhaseFlipStep &s) const {
            DenseUnitary out = DenseUnitary::identity(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                if (s.marked.contains(i)) {
                    out(i, i) = -1.0;
                }
            }
            return out;
        }
        DenseUnitary operator()(const ReflectStep &s) const {
            return dense_outer_reflection(s.axis->amplitudes());
        }
        DenseUnitary operator()(const CondRotStep &s) const {
            const std::size_t half = dim / 2;
            DenseUnitary out(dim);
            for (std::size_t x = 0; x < half; ++x) {
                const Complex f = (*s.f)[x];
                const double g = std::sqrt(std::max(0.0, 1.0 - std::norm(f)));
                out(x, x) = f;
                out(x, half + x) = g;
                out(half + x, x) = g;
                out(half + x, half + x) = -std::conj(f);
            }
            return s.adjoint ? out.adjoint() : out;
        }
    };
    return std::visit(Visitor{dim}, step);
}

DenseUnitary dense_of_program(const UnitaryProgram &program, unsigned cap) {
    const unsigned m = program.num_qubits();
    require_cap(m, cap);
    DenseUnitary out = DenseUnitary::identity(std::size_t{1} << m);
    for (const GateStep &step : program.steps()) {
        out = dense_of_step(step, m) * out;
    }
    return out;
}

DenseUnitary dense_q(const UnitaryProgram &program, const SourceSpec &source,
                     const TargetSpec &targets, unsigned cap) {
    const unsigned m = program.num_qubits();
    require_cap(m, cap);
    const std::size_t dim = std::size_t{1} << m;
    const DenseUnitary p = dense_of_program(program, cap);
    DenseUnitary flip = DenseUnitary::identity(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (targets.set().contains(i)) {
            flip(i, i) = -1.0;
        }
    }
    const StateVector s = source.state(m);
    DenseUnitary q = dense_outer_reflection(s.amplitudes()) * p.adjoint() *
                     flip * p;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            q(r, c) = -q(r, c);
        }
    }
    return q;
}

StateVector random_state(unsigned m, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(std::size_t{1} << m);
    for (auto &a : amps) {
        a = {normal(rng), normal(rng)};
    }
    StateVector out = StateVector::from_amplitudes(std::move(amps));
    out.normalize();
    return out;
}

double equivalence_check(const UnitaryProgram &program, std::uint64_t trials,
                         std::uint64_t seed, unsigned cap) {
    const DenseUnitary p = dense_of_program(program, cap);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        StateVector state = random_state(program.num_qubits(), rng);
        const std::vector<Complex> expected = p.apply(state.amplitudes());
        apply_program(state, program);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            worst = std::max(worst, std::abs(state[i] - expected[i]));
        }
    }
    return worst;
}

double norm_preservation_deviation(const DenseUnitary &m, std::uint64_t trials,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto qubits = static_cast<unsigned>(std::countr_zero(m.dim()));
    double worst = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const StateVector v = random_state(qubits, rng);
        double n2 = 0.0;
        for (const Complex &a : m.apply(v.amplitudes())) {
            n2 += std::norm(a);
        }
        worst = std::max(worst, std::abs(std::sqrt(n2) - 1.0));
    }
    return worst;
}

namespace {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
    Complex sum{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

} // namespace

std::array<Complex, 2> projected_eigenvalues(const DenseUnitary &m,
                                             std::span<const Complex> a,
                                             std::span<const Complex> b) {
    std::vector<Complex> e1(a.begin(), a.end());
    const double n1 = std::sqrt(dot(e1, e1).real());
    for (auto &x : e1) {
        x /= n1;
    }
    std::vector<Complex> e2(b.begin(), b.end());
    const double b_norm = std::sqrt(dot(e2, e2).real());
    // Two projection passes: one leaves an e1 component of order
    // eps·‖b‖/‖e2‖ when b is nearly parallel to a.
    for (int pass = 0; pass < 2; ++pass) {
        const Complex proj = dot(e1, e2);
        for (std::size_t i = 0; i < e2.size(); ++i) {
            e2[i] -= proj * e1[i];
        }
    }
    const double n2 = std::sqrt(dot(e2, e2).real());
    if (n2 <= 1e-14 * b_norm) {
        const Complex lambda = dot(e1, m.apply(e1));
        return {lambda, lambda};
    }
    for (auto &x : e2) {
        x /= n2;
    }
    const auto me1 = m.apply(e1);
    const auto me2 = m.apply(e2);
    const Complex a00 = dot(e1, me1);
    const Complex a01 = dot(e1, me2);
    const Complex a10 = dot(e2, me1);
    const Complex a11 = dot(e2, me2);
    // λ = (a00 + a11)/2 ± sqrt(((a00 - a11)/2)² + a01 a10). Written this way
    // rather than through tr² - 4 det, which cancels catastrophically when
    // the two roots are close (u near 1).
    const Complex mid = 0.5 * (a00 + a11);
    const Complex half_gap = 0.5 * (a00 - a11);
    const Complex root = std::sqrt(half_gap * half_gap + a01 * a10);
    std::array<Complex, 2> out{mid + root, mid - root};
    if (out[0].imag() < out[1].imag()) {
        std::swap(out[0], out[1]);
    }
    return out;
}

std::vector<Complex> dense_w(const DenseUnitary &program_matrix,
                             const StateVector &source,
                             const MarkedSet &targets) {
    const std::size_t dim = program_matrix.dim();
    const auto us = program_matrix.apply(source.amplitudes());
    const DenseUnitary inv = program_matrix.adjoint();
    std::vector<Complex> w(dim, Complex{});
    targets.for_each([&](BasisIndex t) {
        for (std::size_t r = 0; r < dim; ++r) {
            w[r] += us[t] * inv(r, t);
        }
    });
    return w;
}

AmplitudeSpec random_amplitude_spec(unsigned n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> f(std::size_t{1} << n);
    for (;;) {
        for (auto &v : f) {
            const double pick = unit(rng);
            const double r = pick < 0.1 ? 0.0 : (pick < 0.2 ? 1.0 : unit(rng));
            v = std::polar(r, 2.0 * std::numbers::pi * unit(rng));
        }
        if (std::any_of(f.begin(), f.end(),
                        [](const Complex &v) { return std::abs(v) > 0.0; })) {
            return AmplitudeSpec::from_amplitudes(f);
        }
    }
}

MarkedSet random_nonempty_subset(std::uint64_t dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double density = unit(rng);
    std::vector<BasisIndex> picked;
    for (BasisIndex i = 0; i < dim; ++i) {
        if (unit(rng) < density) {
            picked.push_back(i);
        }
    }
    if (picked.empty()) {
        picked.push_back(rng() % dim);
    }
    return MarkedSet::from_indices(std::move(picked));
}

UnitaryProgram random_program(unsigned m, std::mt19937_64 &rng) {
    UnitaryProgram program(m);
    if (m == 0) {
        return program;
    }
    const std::uint64_t dim = std::uint64_t{1} << m;
    const int steps = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < steps; ++k) {
        switch (rng() % 5) {
        case 0:
            program.add(MStep{static_cast<unsigned>(rng() % m)});
            break;
        case 1: {
            WHStep wh;
            for (unsigned q = 0; q < m; ++q) {
                if (rng() % 2 == 0) {
                    wh.qubits.push_back(q);
                }
            }
            std::shuffle(wh.qubits.begin(), wh.qubits.end(), rng);
            program.add(std::move(wh));
            break;
        }
        case 2:
            program.add(PhaseFlipStep{random_nonempty_subset(dim, rng)});
            break;
        case 3:
            program.add(make_reflect(random_state(m, rng)));
            break;
        default: {
            GateStep rot = make_cond_rot(random_amplitude_spec(m - 1, rng));
            program.add(rng() % 2 == 0 ? rot : inverse(rot));
            break;
        }
        }
    }
    return program;
}

RandomInstance random_instance(unsigned m, std::mt19937_64 &rng, double min_u) {
    const std::uint64_t dim = std::uint64_t{1} << m;
    for (;;) {
        UnitaryProgram program = random_program(m, rng);
        SourceSpec source = rng() % 2 == 0
                                ? SourceSpec::basis(rng() % dim)
                                : SourceSpec::arbitrary(random_state(m, rng));
        TargetSpec targets(random_nonempty_subset(dim, rng));
        try {
            if (overlap_u(program, source, targets) >= min_u) {
                return {std::move(program), std::move(source),
                        std::move(targets)};
            }
        } catch (const DegenerateOverlapError &) {
        }
    }
}

std::vector<SuiteResult> run_self_check(unsigned max_qubits,
                                        std::uint64_t trials,
                                        std::uint64_t seed, unsigned cap) {
    if (trials == 0) {
        throw ArgumentError("trials must be at least 1");
    }
    require_cap(max_qubits, cap);
    SuiteResult equivalence{"equivalence", 0.0, 1e-12};
    SuiteResult unitarity{"unitarity", 0.0, 1e-12};
    SuiteResult invariance{"subspace-invariance", 0.0, 1e-10};
    SuiteResult rotation{"rotation-law", 0.0, 1e-10};

    std::mt19937_64 rng(seed);
    for (unsigned m = 1; m <= max_qubits; ++m) {
        for (std::uint64_t t = 0; t < trials; ++t) {
            const RandomInstance inst = random_instance(m, rng);
            equivalence.worst = std::max(
                equivalence.worst, equivalence_check(inst.program, 4, rng(), cap));

            const DenseUnitary p = dense_of_program(inst.program, cap);
            const DenseUnitary q =
                dense_q(inst.program, inst.source, inst.targets, cap);
            unitarity.worst = std::max(
                {unitarity.worst, unitarity_deviation(p), unitarity_deviation(q),
                 max_entry_deviation(
                     dense_of_program(inst.program.inverse(), cap) * p,
                     DenseUnitary::identity(p.dim()))});

            // Column-by-column agreement of apply_q with the dense Q.
            for (std::size_t c = 0; c < q.dim(); ++c) {
                StateVector col = basis_state(m, c);
                apply_q(col, inst.program, inst.source, inst.targets);
                for (std::size_t r = 0; r < q.dim(); ++r) {
                    equivalence.worst =
                        std::max(equivalence.worst, std::abs(col[r] - q(r, c)));
                }
            }

            const SubspaceAnalysis sa =
                subspace_analysis(inst.program, inst.source, inst.targets);
            const Complex up = std::polar(1.0, 2.0 * sa.theta);
            const auto dense_eigs = projected_eigenvalues(
                q, inst.source.state(m).amplitudes(),
                dense_w(p, inst.source.state(m), inst.targets.set()));
            invariance.worst = std::max(
                {invariance.worst, sa.residual_s, sa.residual_w,
                 std::abs(sa.eigenvalues[0] - up),
                 std::abs(sa.eigenvalues[1] - std::conj(up)),
                 std::abs(dense_eigs[0] - up),
                 std::abs(dense_eigs[1] - std::conj(up))});

            const double theta = sa.theta;
            for (std::uint64_t eta = 0; eta <= 10; ++eta) {
                const StateVector out =
                    run(inst.program, inst.source, inst.targets, eta);
                rotation.worst = std::max(
                    rotation.worst,
                    std::abs(probability_mass(out, inst.targets.set()) -
                             rotation_success(theta, eta)));
            }
        }
    }
    return {equivalence, unitarity, invariance, rotation};
}

} // namespace qamp::oracle
