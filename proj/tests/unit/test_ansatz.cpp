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

#include "comqel/ansatz.hpp"
#include "comqel/error.hpp"
#include "comqel/gradients.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <utility>

using namespace comqel;

namespace {

std::vector<std::pair<int, int>> cnot_pairs(const std::vector<Gate>& gates) {
    std::vector<std::pair<int, int>> out;
    for (const Gate& g : gates) {
        if (g.kind == GateKind::CNOT) {
            out.emplace_back(g.control, g.target);
        }
    }
    return out;
}

AnsatzSpec structured(Topology topo, int layers = 6) {
    return AnsatzSpec(layers, {2, 2, 2}, topo, FunctionalGraph{{{0, 1}, {2}}});
}

// <sum Z> of U|0> with U from the dense oracle, summed bit by bit.
double oracle_expectation(const AnsatzSpec& spec, std::span<const double> theta,
                          std::span<const double> x) {
    const Circuit c = build_circuit(spec, theta, x);
    const DenseMatrix u = dense_unitary_oracle(c.gates, spec.n_qubits());
    double acc = 0.0;
    for (std::size_t k = 0; k < u.dim; ++k) {
        const double p = std::norm(u(k, 0));
        for (int q = 0; q < spec.n_qubits(); ++q) {
            acc += ((k >> q) & 1U) != 0 ? -p : p;
        }
    }
    return acc;
}

} // namespace

TEST(ParamCount, Examples) {
    const auto single = FunctionalGraph::single_clique(1);
    EXPECT_EQ(param_count(AnsatzSpec::even(4, 3, 2, Topology::Chain, FunctionalGraph{{{0}, {1}}})), 48U);
    EXPECT_EQ(param_count(AnsatzSpec::even(3, 3, 1, Topology::Chain, single)), 36U);
    EXPECT_EQ(param_count(structured(Topology::Chain)), 126U);
}

TEST(AnsatzSpec, RejectsBadLayouts) {
    const auto g = FunctionalGraph::single_clique(2);
    EXPECT_THROW(AnsatzSpec(0, {1, 1}, Topology::Chain, g), ConfigError);
    EXPECT_THROW(AnsatzSpec(1, {1, 0}, Topology::Chain, g), ConfigError);
    EXPECT_THROW(AnsatzSpec(1, {5, 4}, Topology::Chain, g), ConfigError);
    EXPECT_THROW(AnsatzSpec(1, {1, 1}, Topology::Chain, FunctionalGraph{{{0}}}), ConfigError);
    EXPECT_THROW(AnsatzSpec::even(5, 1, 2, Topology::Chain, g), ConfigError);
}

TEST(TrainableBlock, ZeroAnglesActAsIdentityOnZeroState) {
    const auto spec = AnsatzSpec::even(2, 1, 1, Topology::Chain, FunctionalGraph::single_clique(1));
    const std::vector<double> zeros(6, 0.0);
    StateVector s(2);
    for (const Gate& g : build_trainable_block(spec, zeros)) {
        s.apply(g);
    }
    EXPECT_NEAR(std::abs(s[0] - Complex(1.0, 0.0)), 0.0, 1e-15);
}

TEST(TrainableBlock, RotationOrderAndChain) {
    const auto spec = AnsatzSpec::even(4, 1, 2, Topology::Chain, FunctionalGraph{{{0}, {1}}});
    std::vector<double> angles(12);
    for (std::size_t k = 0; k < angles.size(); ++k) {
        angles[k] = 0.1 * static_cast<double>(k + 1);
    }
    const auto gates = build_trainable_block(spec, angles);
    ASSERT_EQ(gates.size(), 15U);
    for (int q = 0; q < 4; ++q) {
        const auto b = static_cast<std::size_t>(3 * q);
        EXPECT_EQ(gates[b].kind, GateKind::RX);
        EXPECT_EQ(gates[b + 1].kind, GateKind::RZ);
        EXPECT_EQ(gates[b + 2].kind, GateKind::RX);
        EXPECT_EQ(gates[b].target, q);
        EXPECT_DOUBLE_EQ(gates[b + 1].angle, angles[b + 1]);
    }
    const std::vector<std::pair<int, int>> chain{{0, 1}, {1, 2}, {2, 3}};
    EXPECT_EQ(cnot_pairs(gates), chain);
}

TEST(TrainableBlock, CliqueTopologyDropsCrossCliqueEdges) {
    const auto qgnn = structured(Topology::Clique);
    const auto gates = build_trainable_block(qgnn, std::vector<double>(18, 0.0));
    const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 2}, {2, 3}, {4, 5}};
    EXPECT_EQ(cnot_pairs(gates), expected);
    // every CNOT connects variables in a common clique
    for (const auto& [c, t] : cnot_pairs(gates)) {
        EXPECT_TRUE(qgnn.graph().share_clique(qgnn.variable_of(c), qgnn.variable_of(t)));
    }
}

TEST(EncodingBlock, BoundaryInputIsIdentity) {
    const auto spec = structured(Topology::Chain, 2);
    const std::vector<double> ones{1.0, 1.0, 1.0};
    for (const Gate& g : build_encoding_block(spec, ones, 2)) {
        EXPECT_EQ(g.kind, GateKind::RY);
        EXPECT_EQ(g.angle, 0.0);
    }
}

TEST(EncodingBlock, TowerIndicesPerBlock) {
    const auto spec = AnsatzSpec(2, {2}, Topology::Chain, FunctionalGraph::single_clique(1));
    const double x = 0.3;
    const double a = std::acos(x);
    const std::vector<double> in{x};
    const auto l1 = build_encoding_block(spec, in, 1);
    ASSERT_EQ(l1.size(), 2U);
    EXPECT_DOUBLE_EQ(l1[0].angle, 2 * a);
    EXPECT_DOUBLE_EQ(l1[1].angle, 4 * a);
    EXPECT_EQ(l1[0].target, 0);
    EXPECT_EQ(l1[1].target, 1);
    const auto l2 = build_encoding_block(spec, in, 2);
    EXPECT_DOUBLE_EQ(l2[0].angle, 6 * a);
    EXPECT_DOUBLE_EQ(l2[1].angle, 8 * a);
}

TEST(EncodingBlock, TowerRestartsInEachVariableBlock) {
    const auto spec = structured(Topology::Chain, 2);
    const std::vector<double> x{0.1, -0.4, 0.7};
    const auto gates = build_encoding_block(spec, x, 2);
    ASSERT_EQ(gates.size(), 6U);
    for (int v = 0; v < 3; ++v) {
        const double a = std::acos(x[static_cast<std::size_t>(v)]);
        EXPECT_DOUBLE_EQ(gates[static_cast<std::size_t>(2 * v)].angle, 6 * a);
        EXPECT_DOUBLE_EQ(gates[static_cast<std::size_t>(2 * v + 1)].angle, 8 * a);
    }
}

TEST(EncodingBlock, OutOfDomainInput) {
    const auto spec = support::one_qubit_toy();
    const std::vector<double> bad{1.0000001};
    EXPECT_THROW(build_encoding_block(spec, bad, 1), DomainError);
    const std::vector<double> nan{std::nan("")};
    EXPECT_THROW(build_encoding_block(spec, nan, 1), DomainError);
}

TEST(Surrogate, ZeroAnglesAtBoundaryGiveQubitCount) {
    for (Topology topo : {Topology::Chain, Topology::Clique}) {
        const auto spec = structured(topo, 2);
        const std::vector<double> theta(param_count(spec), 0.0);
        const std::vector<double> x{1.0, 1.0, 1.0};
        EXPECT_NEAR(evaluate_surrogate(spec, theta, x), 6.0, 1e-14);
    }
}

TEST(Surrogate, OneQubitToyIsChebyshevT2) {
    const auto spec = support::one_qubit_toy();
    const std::vector<double> theta(param_count(spec), 0.0);
    for (int k = 0; k <= 100; ++k) {
        const double x = -1.0 + 0.02 * k;
        const std::vector<double> in{x};
        EXPECT_NEAR(evaluate_surrogate(spec, theta, in), 2 * x * x - 1, 1e-12) << "x=" << x;
    }
}

TEST(Surrogate, MatchesDenseOracle) {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto spec = support::random_ansatz(rng, 4, 3);
        const auto theta = support::random_vector(rng, param_count(spec), -3.2, 3.2);
        const auto x = support::random_vector(rng, static_cast<std::size_t>(spec.input_dim()), -1, 1);
        EXPECT_NEAR(evaluate_surrogate(spec, theta, x), oracle_expectation(spec, theta, x), 1e-10);
    }
}

TEST(Surrogate, LengthMismatchRejected) {
    const auto spec = support::one_qubit_toy();
    const std::vector<double> short_theta(5, 0.0);
    const std::vector<double> x{0.0};
    EXPECT_THROW(evaluate_surrogate(spec, short_theta, x), UsageError);
    const std::vector<double> theta(6, 0.0);
    const std::vector<double> x2{0.0, 0.0};
    EXPECT_THROW(evaluate_surrogate(spec, theta, x2), UsageError);
}

TEST(SurrogateProperty, BoundedByQubitCountAndDeterministic) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto spec = support::random_ansatz(rng, 6, 3);
        const auto theta = support::random_vector(rng, param_count(spec), -10, 10);
        const auto x = support::random_vector(rng, static_cast<std::size_t>(spec.input_dim()), -1, 1);
        const double f = evaluate_surrogate(spec, theta, x);
        EXPECT_LE(std::abs(f), spec.n_qubits() + 1e-12);
        EXPECT_EQ(f, evaluate_surrogate(spec, theta, x));
    }
}

TEST(SurrogateProperty, CliqueAnsatzDecouplesAtZeroAngles) {
    const auto qgnn = structured(Topology::Clique);
    const auto hea = structured(Topology::Chain);
    const std::vector<double> theta(param_count(qgnn), 0.0);
    const double x3 = 0.37;

    const std::vector<double> base{0.2, -0.5, x3};
    const double qgnn_ref = grad_x(qgnn, theta, base)[2];
    const double hea_ref = grad_x(hea, theta, base)[2];
    bool hea_differs = false;
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> x{rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9), x3};
        EXPECT_NEAR(grad_x(qgnn, theta, x)[2], qgnn_ref, 1e-12);
        hea_differs = hea_differs || std::abs(grad_x(hea, theta, x)[2] - hea_ref) > 1e-6;
    }
    // the chain's (3, 4) entangler couples x2 into the x3 register
    EXPECT_TRUE(hea_differs);
}
