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
/**
 * @file
 * Dense state-vector simulation for small qubit registers.
 *
 * Qubit q is bit q of the basis index (qubit 0 is the least significant bit).
 * Rotations follow R_P(theta) = exp(-i theta P / 2).
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace comqel {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 8;

enum class GateKind { RX, RY, RZ, CNOT };

struct Gate {
    GateKind kind{GateKind::RX};
    int target{0};
    int control{-1}; ///< CNOT only
    double angle{0.0}; ///< rotations only, radians

    static Gate rx(int q, double a) { return {GateKind::RX, q, -1, a}; }
    static Gate ry(int q, double a) { return {GateKind::RY, q, -1, a}; }
    static Gate rz(int q, double a) { return {GateKind::RZ, q, -1, a}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, t, c, 0.0}; }

    [[nodiscard]] bool is_rotation() const { return kind != GateKind::CNOT; }
    [[nodiscard]] Gate inverse() const { return {kind, target, control, -angle}; }
};

class StateVector {
  public:
    /// |0...0> on n qubits. Throws ConfigError unless 1 <= n <= kMaxQubits.
    explicit StateVector(int n_qubits);

    /// Computational basis state |index>.
    static StateVector basis(int n_qubits, std::size_t index);

    /// Arbitrary (not necessarily normalized) vector of length 2^n.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t k) const { return amps_[k]; }

    /// In-place application; throws UsageError on bad qubit indices.
    void apply(const Gate& g);

    /// Same as apply() without index validation; for prevalidated circuits.
    void apply_unchecked(const Gate& g);

    [[nodiscard]] double squared_norm() const;

  private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

StateVector new_zero_state(int n_qubits);

/// Throws UsageError if the gate does not fit an n-qubit register.
void validate_gate(const Gate& g, int n_qubits);

void apply_gate(StateVector& state, const Gate& g);

/// <psi| sum_i Z_i |psi>, in [-n, n].
double expectation_sum_z(const StateVector& state);

/// (sum_i Z_i)|psi>, unnormalized.
StateVector apply_sum_z(const StateVector& state);

/// <bra| P_q |ket> for the Pauli generator P of a rotation kind.
Complex pauli_overlap(const StateVector& bra, const StateVector& ket, GateKind axis, int q);

/// Row-major square complex matrix.
struct DenseMatrix {
    std::size_t dim{0};
    std::vector<Complex> data;

    Complex& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

    static DenseMatrix identity(std::size_t dim);
    [[nodiscard]] std::vector<Complex> apply(std::span<const Complex> v) const;
};

inline constexpr int kMaxOracleQubits = 4;

/// Explicit 2^n x 2^n product of the full gate matrices, last gate leftmost.
/// Test oracle only; refuses n > kMaxOracleQubits.
DenseMatrix dense_unitary_oracle(std::span<const Gate> gates, int n_qubits);

} // namespace comqel
