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
#include "comqel/statevector.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace comqel;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_amplitudes(const StateVector& s, const std::vector<Complex>& ref, double tol = 1e-15) {
    ASSERT_EQ(s.dim(), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
        EXPECT_NEAR(s[k].real(), ref[k].real(), tol) << "k=" << k;
        EXPECT_NEAR(s[k].imag(), ref[k].imag(), tol) << "k=" << k;
    }
}

} // namespace

TEST(StateVector, ZeroStateThreeQubits) {
    const StateVector s = new_zero_state(3);
    EXPECT_EQ(s.dim(), 8U);
    expect_amplitudes(s, {1, 0, 0, 0, 0, 0, 0, 0}, 0.0);
}

TEST(StateVector, ZeroStateOneQubit) { expect_amplitudes(new_zero_state(1), {1, 0}, 0.0); }

TEST(StateVector, QubitCountOutOfRange) {
    EXPECT_THROW(new_zero_state(9), ConfigError);
    EXPECT_THROW(new_zero_state(0), ConfigError);
    EXPECT_NO_THROW(new_zero_state(8));
}

TEST(StateVector, RyPiFlipsQubit) {
    StateVector s(1);
    apply_gate(s, Gate::ry(0, kPi));
    expect_amplitudes(s, {0, 1});
}

TEST(StateVector, CnotTruthTable) {
    // qubit 0 is the least significant bit: index 1 has qubit 0 set
    StateVector s = StateVector::basis(2, 0b01);
    apply_gate(s, Gate::cnot(0, 1));
    expect_amplitudes(s, {0, 0, 0, 1}, 0.0);

    StateVector untouched = StateVector::basis(2, 0b10);
    apply_gate(untouched, Gate::cnot(0, 1));
    expect_amplitudes(untouched, {0, 0, 1, 0}, 0.0);
}

TEST(StateVector, RzOnZeroIsPhase) {
    const double phi = 0.7;
    StateVector s(1);
    apply_gate(s, Gate::rz(0, phi));
    expect_amplitudes(s, {std::polar(1.0, -phi / 2), 0.0});
    EXPECT_NEAR(std::norm(s[0]), 1.0, 1e-15);
}

TEST(StateVector, InvalidIndicesRejected) {
    StateVector s(2);
    EXPECT_THROW(apply_gate(s, Gate::rx(2, 0.1)), UsageError);
    EXPECT_THROW(apply_gate(s, Gate::rx(-1, 0.1)), UsageError);
    EXPECT_THROW(apply_gate(s, Gate::cnot(1, 1)), UsageError);
    EXPECT_THROW(apply_gate(s, Gate::cnot(2, 0)), UsageError);
}

TEST(Expectation, AllZeros) { EXPECT_EQ(expectation_sum_z(new_zero_state(3)), 3.0); }

TEST(Expectation, RotatedQubitIsCosine) {
    for (double theta : {0.0, 0.3, 1.2, kPi / 2, 2.5, -1.7}) {
        StateVector s(1);
        apply_gate(s, Gate::ry(0, theta));
        EXPECT_NEAR(expectation_sum_z(s), std::cos(theta), 1e-15);
    }
}

TEST(Expectation, UniformSuperpositionIsZero) {
    StateVector s(2);
    apply_gate(s, Gate::ry(0, kPi / 2));
    apply_gate(s, Gate::ry(1, kPi / 2));
    EXPECT_NEAR(expectation_sum_z(s), 0.0, 1e-15);
}

TEST(Expectation, ZeroStateEqualsQubitCount) {
    for (int n = 1; n <= kMaxQubits; ++n) {
        EXPECT_NEAR(expectation_sum_z(new_zero_state(n)), n, 1e-15);
    }
}

TEST(DenseOracle, EmptyCircuitIsIdentity) {
    const DenseMatrix u = dense_unitary_oracle({}, 2);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            EXPECT_EQ(u(r, c), Complex(r == c ? 1.0 : 0.0, 0.0));
        }
    }
}

TEST(DenseOracle, CnotIsPermutation) {
    // control 1, target 0 swaps |10> and |11> (indices 2 and 3)
    const std::vector<Gate> g1{Gate::cnot(1, 0)};
    const DenseMatrix u = dense_unitary_oracle(g1, 2);
    const std::size_t perm1[4] = {0, 1, 3, 2};
    // control 0, target 1 swaps indices 1 and 3
    const std::vector<Gate> g2{Gate::cnot(0, 1)};
    const DenseMatrix v = dense_unitary_oracle(g2, 2);
    const std::size_t perm2[4] = {0, 3, 2, 1};
    for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t r = 0; r < 4; ++r) {
            EXPECT_EQ(u(r, c), Complex(r == perm1[c] ? 1.0 : 0.0, 0.0));
            EXPECT_EQ(v(r, c), Complex(r == perm2[c] ? 1.0 : 0.0, 0.0));
        }
    }
}

TEST(DenseOracle, RefusesLargeRegisters) { EXPECT_THROW(dense_unitary_oracle({}, 5), ConfigError); }

TEST(DenseOracle, MatchesStrideKernelsOnRandomCircuits) {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(3));
        const auto gates = support::random_circuit(rng, n, 10);
        StateVector s(n);
        for (const Gate& g : gates) {
            apply_gate(s, g);
        }
        const DenseMatrix u = dense_unitary_oracle(gates, n);
        const auto ref = u.apply(new_zero_state(n).amplitudes());
        for (std::size_t k = 0; k < ref.size(); ++k) {
            EXPECT_NEAR(std::abs(s[k] - ref[k]), 0.0, 1e-10) << "trial " << trial;
        }
    }
}

TEST(StateVectorProperty, NormPreservedOverLongCircuits) {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        StateVector s(n);
        for (const Gate& g : support::random_circuit(rng, n, 1000)) {
            s.apply(g);
            ASSERT_NEAR(s.squared_norm(), 1.0, 1e-12);
        }
    }
}

TEST(StateVectorProperty, RotationPeriodicity) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const double theta = rng.uniform(-kPi, kPi);
        for (GateKind kind : {GateKind::RX, GateKind::RY}) {
            StateVector a(2);
            StateVector b(2);
            a.apply(Gate::ry(1, 0.4));
            b.apply(Gate::ry(1, 0.4));
            a.apply({kind, 0, -1, theta});
            b.apply({kind, 0, -1, theta + 2 * kPi});
            EXPECT_NEAR(expectation_sum_z(a), expectation_sum_z(b), 1e-12);
        }
    }
}

TEST(StateVector, InverseGateUndoes) {
    Rng rng(13);
    const auto gates = support::random_circuit(rng, 3, 30);
    StateVector s(3);
    for (const Gate& g : gates) {
        s.apply(g);
    }
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        s.apply(it->inverse());
    }
    EXPECT_NEAR(std::abs(s[0] - Complex(1.0, 0.0)), 0.0, 1e-12);
}

TEST(StateVector, FromAmplitudesChecksLength) {
    EXPECT_THROW(StateVector::from_amplitudes(std::vector<Complex>(3)), UsageError);
    EXPECT_EQ(StateVector::from_amplitudes(std::vector<Complex>(8)).n_qubits(), 3);
}

TEST(SumZ, AppliedOperatorMatchesExpectation) {
    Rng rng(14);
    StateVector s(3);
    for (const Gate& g : support::random_circuit(rng, 3, 20)) {
        s.apply(g);
    }
    const auto zs = apply_sum_z(s);
    Complex overlap{0.0, 0.0};
    for (std::size_t k = 0; k < s.dim(); ++k) {
        overlap += std::conj(s[k]) * zs[k];
    }
    EXPECT_NEAR(overlap.real(), expectation_sum_z(s), 1e-13);
    EXPECT_NEAR(overlap.imag(), 0.0, 1e-13);
}

TEST(PauliOverlap, MatchesDenseOracle) {
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        StateVector a(3);
        StateVector b(3);
        for (const Gate& g : support::random_circuit(rng, 3, 15)) {
            a.apply(g);
        }
        for (const Gate& g : support::random_circuit(rng, 3, 15)) {
            b.apply(g);
        }
        const int q = static_cast<int>(rng.below(3));
        for (GateKind axis : {GateKind::RX, GateKind::RY, GateKind::RZ}) {
            // P = i R(pi) for every Pauli rotation
            const Gate pi{axis, q, -1, std::numbers::pi};
            const auto u = dense_unitary_oracle(std::span<const Gate>(&pi, 1), 3);
            const auto pb = u.apply(b.amplitudes());
            Complex expected{0.0, 0.0};
            for (std::size_t k = 0; k < pb.size(); ++k) {
                expected += std::conj(a[k]) * Complex(0.0, 1.0) * pb[k];
            }
            EXPECT_NEAR(std::abs(pauli_overlap(a, b, axis, q) - expected), 0.0, 1e-12);
        }
    }
    const StateVector z(2);
    EXPECT_THROW(pauli_overlap(z, z, GateKind::CNOT, 0), UsageError);
}
