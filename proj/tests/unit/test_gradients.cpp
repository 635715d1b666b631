// Copyright 2026 The comqel Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "comqel/error.hpp"
#include "comqel/gradients.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace comqel;

namespace {

constexpr double kPi = std::numbers::pi;

double single_ry(double theta) {
    StateVector s(1);
    s.apply(Gate::ry(0, theta));
    return expectation_sum_z(s);
}

} // namespace

TEST(ShiftRule, SingleRotationDerivative) {
    Circuit c;
    c.n_qubits = 1;
    c.gates = {Gate::ry(0, kPi / 2)};
    c.sources = {GateSource{}};
    const std::vector<std::size_t> idx{0};
    const auto d = shift_derivatives(c, idx);
    EXPECT_NEAR(d.value, 0.0, 1e-15);
    ASSERT_EQ(d.d_angle.size(), 1U);
    EXPECT_NEAR(d.d_angle[0], -1.0, 1e-14);
}

TEST(ShiftRule, VanishesAtNumericalMaximum) {
    // the one-angle landscape cos(theta) peaks at 0; locate it numerically
    double best = -kPi;
    for (int k = 0; k <= 1000; ++k) {
        const double t = -kPi + 2 * kPi * k / 1000.0;
        if (single_ry(t) > single_ry(best)) {
            best = t;
        }
    }
    double lo = best - 0.01;
    double hi = best + 0.01;
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3;
        const double m2 = hi - (hi - lo) / 3;
        if (single_ry(m1) < single_ry(m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    Circuit c;
    c.n_qubits = 1;
    c.gates = {Gate::ry(0, 0.5 * (lo + hi))};
    c.sources = {GateSource{}};
    const std::vector<std::size_t> idx{0};
    EXPECT_LE(std::abs(shift_derivatives(c, idx).d_angle[0]), 1e-6);
}

TEST(ShiftRule, RejectsNonRotationIndex) {
    Circuit c;
    c.n_qubits = 2;
    c.gates = {Gate::cnot(0, 1)};
    c.sources = {GateSource{}};
    const std::vector<std::size_t> idx{0};
    EXPECT_THROW(shift_derivatives(c, idx), UsageError);
}

TEST(GradTheta, MatchesFiniteDifferences) {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const auto spec = support::random_ansatz(rng, 4, 2);
        const auto theta = support::random_vector(rng, param_count(spec), -kPi, kPi);
        const auto x = support::random_vector(rng, static_cast<std::size_t>(spec.input_dim()), -0.9, 0.9);
        const auto exact = grad_theta(spec, theta, x);
        const auto fd = finite_diff(
            [&](std::span<const double> t) { return evaluate_surrogate(spec, t, x); }, theta, 1e-5);
        ASSERT_EQ(exact.size(), fd.size());
        for (std::size_t k = 0; k < fd.size(); ++k) {
            EXPECT_NEAR(exact[k], fd[k], 1e-6) << "trial " << trial << " k " << k;
        }
    }
}

TEST(GradX, ToyChebyshevSlope) {
    const auto spec = support::one_qubit_toy();
    const std::vector<double> theta(param_count(spec), 0.0);
    const std::vector<double> x{0.5};
    EXPECT_NEAR(grad_x(spec, theta, x)[0], 2.0, 1e-10);
}

TEST(GradX, OddSymmetryOfEvenSurrogate) {
    const auto spec = support::one_qubit_toy();
    const std::vector<double> theta(param_count(spec), 0.0);
    for (double v : {0.1, 0.4, 0.77, 0.93}) {
        const std::vector<double> p{v};
        const std::vector<double> m{-v};
        EXPECT_NEAR(grad_x(spec, theta, p)[0], -grad_x(spec, theta, m)[0], 1e-12);
    }
}

TEST(GradX, MatchesFiniteDifferencesInInterior) {
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const auto spec = support::random_ansatz(rng, 4, 3);
        const auto theta = support::random_vector(rng, param_count(spec), -kPi, kPi);
        const auto x = support::random_vector(rng, static_cast<std::size_t>(spec.input_dim()), -0.95, 0.95);
        const auto exact = grad_x(spec, theta, x);
        const auto fd = finite_diff(
            [&](std::span<const double> p) { return evaluate_surrogate(spec, theta, p); }, x, 1e-6);
        for (std::size_t k = 0; k < fd.size(); ++k) {
            EXPECT_NEAR(exact[k], fd[k], 1e-5) << "trial " << trial << " k " << k;
        }
    }
}

TEST(GradX, IntegratesBackToSurrogate) {
    Rng rng(8);
    const auto spec = support::one_qubit_toy(2);
    const auto theta = support::random_vector(rng, param_count(spec), -kPi, kPi);
    const double a = -0.8;
    const double b = 0.8;
    const int n = 2000;
    double integral = 0.0;
    for (int k = 0; k < n; ++k) {
        const std::vector<double> l{a + (b - a) * k / n};
        const std::vector<double> r{a + (b - a) * (k + 1) / n};
        integral += 0.5 * (grad_x(spec, theta, l)[0] + grad_x(spec, theta, r)[0]) * (b - a) / n;
    }
    const std::vector<double> pa{a};
    const std::vector<double> pb{b};
    EXPECT_NEAR(integral, evaluate_surrogate(spec, theta, pb) - evaluate_surrogate(spec, theta, pa), 1e-3);
}

TEST(GradX, BoundaryInputsAreClampedAndFinite) {
    const auto spec = support::one_qubit_toy();
    const std::vector<double> theta(param_count(spec), 0.3);
    const std::vector<double> edge{1.0};
    const auto rep = gradients(spec, theta, edge);
    EXPECT_TRUE(rep.clamped);
    EXPECT_TRUE(std::isfinite(rep.d_x[0]));
    const std::vector<double> inner{0.5};
    EXPECT_FALSE(gradients(spec, theta, inner).clamped);
}

TEST(Gradients, RequestSelectsOutputs) {
    const auto spec = support::one_qubit_toy();
    const std::vector<double> theta(param_count(spec), 0.1);
    const std::vector<double> x{0.2};
    const auto only_theta = gradients(spec, theta, x, GradRequest{true, false});
    EXPECT_EQ(only_theta.d_theta.size(), param_count(spec));
    EXPECT_TRUE(only_theta.d_x.empty());
    const auto only_x = gradients(spec, theta, x, GradRequest{false, true});
    EXPECT_TRUE(only_x.d_theta.empty());
    EXPECT_EQ(only_x.d_x.size(), 1U);
    EXPECT_NEAR(only_x.value, evaluate_surrogate(spec, theta, x), 1e-14);
}

TEST(FiniteDiff, Examples) {
    const std::vector<double> p{3.0};
    EXPECT_NEAR(finite_diff([](std::span<const double> v) { return v[0] * v[0]; }, p, 1e-4)[0], 6.0, 1e-8);
    const std::vector<double> q{0.0, 0.0};
    const auto g = finite_diff([](std::span<const double> v) { return 2 * v[0] - v[1]; }, q, 1e-3);
    EXPECT_NEAR(g[0], 2.0, 1e-10);
    EXPECT_NEAR(g[1], -1.0, 1e-10);
    EXPECT_THROW(finite_diff([](std::span<const double>) { return 0.0; }, p, 0.0), UsageError);
}

TEST(ShiftRule, BackwardSweepMatchesExplicitShifts) {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        Circuit c;
        c.n_qubits = n;
        c.gates = support::random_circuit(rng, n, 40);
        c.sources.assign(c.gates.size(), GateSource{});
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < c.gates.size(); ++k) {
            if (c.gates[k].is_rotation() && rng.below(3) != 0) {
                idx.push_back(k);
            }
        }
        const auto fast = shift_derivatives(c, idx);
        const auto ref = shift_derivatives_reference(c, idx);
        EXPECT_NEAR(fast.value, ref.value, 1e-12);
        ASSERT_EQ(fast.d_angle.size(), ref.d_angle.size());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            EXPECT_NEAR(fast.d_angle[k], ref.d_angle[k], 1e-12) << "trial " << trial;
        }
    }
}

TEST(ShiftRule, EmptyTargetListGivesValueOnly) {
    Circuit c;
    c.n_qubits = 2;
    c.gates = {Gate::ry(0, 0.4), Gate::cnot(0, 1)};
    c.sources.assign(2, GateSource{});
    const auto d = shift_derivatives(c, {});
    EXPECT_TRUE(d.d_angle.empty());
    EXPECT_NEAR(d.value, 2 * std::cos(0.4), 1e-14);
}
