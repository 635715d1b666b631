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

#include "comqel/statevector.hpp"

#include "comqel/error.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

namespace comqel {

namespace {

// Visit every pair (i0, i1 = i0 | stride) with bit `q` of i0 clear.
template <typename PairOp>
void for_each_pair(std::vector<Complex>& amps, int q, PairOp&& op) {
    const std::size_t stride = std::size_t{1} << static_cast<unsigned>(q);
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i0 = block; i0 < block + stride; ++i0) {
            op(amps[i0], amps[i0 + stride]);
        }
    }
}

void apply_rx(std::vector<Complex>& amps, int q, double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    // [[c, -is], [-is, c]]
    for_each_pair(amps, q, [c, s](Complex& a, Complex& b) {
        const Complex a0 = a;
        const Complex b0 = b;
        a = {c * a0.real() + s * b0.imag(), c * a0.imag() - s * b0.real()};
        b = {c * b0.real() + s * a0.imag(), c * b0.imag() - s * a0.real()};
    });
}

void apply_ry(std::vector<Complex>& amps, int q, double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    // [[c, -s], [s, c]]
    for_each_pair(amps, q, [c, s](Complex& a, Complex& b) {
        const Complex a0 = a;
        a = c * a0 - s * b;
        b = s * a0 + c * b;
    });
}

void apply_rz(std::vector<Complex>& amps, int q, double angle) {
    const Complex lo = std::polar(1.0, -angle / 2);
    const Complex hi = std::polar(1.0, angle / 2);
    for_each_pair(amps, q, [lo, hi](Complex& a, Complex& b) {
        a *= lo;
        b *= hi;
    });
}

void apply_cnot(std::vector<Complex>& amps, int control, int target) {
    const std::size_t cmask = std::size_t{1} << static_cast<unsigned>(control);
    const std::size_t tmask = std::size_t{1} << static_cast<unsigned>(target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

} // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("qubit count " + std::to_string(n_qubits) +
                          " outside supported range 1.." + std::to_string(kMaxQubits));
    }
    amps_.assign(std::size_t{1} << static_cast<unsigned>(n_qubits), Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw UsageError("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    const auto dim = amps.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw UsageError("amplitude vector length must be a power of two");
    }
    StateVector s(std::countr_zero(dim));
    s.amps_ = std::move(amps);
    return s;
}

void StateVector::apply(const Gate& g) {
    validate_gate(g, n_qubits_);
    apply_unchecked(g);
}

void StateVector::apply_unchecked(const Gate& g) {
    switch (g.kind) {
    case GateKind::RX:
        apply_rx(amps_, g.target, g.angle);
        break;
    case GateKind::RY:
        apply_ry(amps_, g.target, g.angle);
        break;
    case GateKind::RZ:
        apply_rz(amps_, g.target, g.angle);
        break;
    case GateKind::CNOT:
        apply_cnot(amps_, g.control, g.target);
        break;
    }
}

double StateVector::squared_norm() const {
    double acc = 0.0;
    for (const Complex& a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

StateVector new_zero_state(int n_qubits) { return StateVector(n_qubits); }

void validate_gate(const Gate& g, int n_qubits) {
    if (g.target < 0 || g.target >= n_qubits) {
        throw UsageError("gate target " + std::to_string(g.target) + " invalid for " +
                         std::to_string(n_qubits) + " qubits");
    }
    if (g.kind == GateKind::CNOT) {
        if (g.control < 0 || g.control >= n_qubits) {
            throw UsageError("CNOT control " + std::to_string(g.control) + " invalid for " +
                             std::to_string(n_qubits) + " qubits");
        }
        if (g.control == g.target) {
            throw UsageError("CNOT control equals target");
        }
    }
}

void apply_gate(StateVector& state, const Gate& g) { state.apply(g); }

double expectation_sum_z(const StateVector& state) {
    const int n = state.n_qubits();
    const auto amps = state.amplitudes();
    double acc = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const int ones = std::popcount(k);
        acc += std::norm(amps[k]) * static_cast<double>(n - 2 * ones);
    }
    return acc;
}

StateVector apply_sum_z(const StateVector& state) {
    const int n = state.n_qubits();
    const auto amps = state.amplitudes();
    std::vector<Complex> out(amps.begin(), amps.end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] *= static_cast<double>(n - 2 * std::popcount(k));
    }
    return StateVector::from_amplitudes(std::move(out));
}

Complex pauli_overlap(const StateVector& bra, const StateVector& ket, GateKind axis, int q) {
    if (bra.n_qubits() != ket.n_qubits()) {
        throw UsageError("overlap of states with different qubit counts");
    }
    validate_gate(Gate{axis, q, -1, 0.0}, ket.n_qubits());
    if (axis == GateKind::CNOT) {
        throw UsageError("CNOT has no Pauli generator");
    }
    const auto b = bra.amplitudes();
    const auto k = ket.amplitudes();
    const std::size_t stride = std::size_t{1} << static_cast<unsigned>(q);
    Complex acc{0.0, 0.0};
    for (std::size_t block = 0; block < k.size(); block += 2 * stride) {
        for (std::size_t i0 = block; i0 < block + stride; ++i0) {
            const std::size_t i1 = i0 + stride;
            switch (axis) {
            case GateKind::RX: // X: (k1, k0)
                acc += std::conj(b[i0]) * k[i1] + std::conj(b[i1]) * k[i0];
                break;
            case GateKind::RY: // Y: (-i k1, i k0)
                acc += std::conj(b[i0]) * Complex(k[i1].imag(), -k[i1].real()) +
                       std::conj(b[i1]) * Complex(-k[i0].imag(), k[i0].real());
                break;
            default: // Z: (k0, -k1)
                acc += std::conj(b[i0]) * k[i0] - std::conj(b[i1]) * k[i1];
                break;
            }
        }
    }
    return acc;
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m{dim, std::vector<Complex>(dim * dim, Complex{0.0, 0.0})};
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != dim) {
        throw UsageError("matrix/vector dimension mismatch");
    }
    std::vector<Complex> out(dim, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < dim; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < dim; ++c) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

namespace {

// Full 2^n matrix of one gate, built entry by entry from its 2x2 (or
// permutation) action on basis states. Independent of the stride kernels.
DenseMatrix full_gate_matrix(const Gate& g, int n) {
    const std::size_t dim = std::size_t{1} << static_cast<unsigned>(n);
    DenseMatrix m{dim, std::vector<Complex>(dim * dim, Complex{0.0, 0.0})};
    const std::size_t tbit = std::size_t{1} << static_cast<unsigned>(g.target);

    if (g.kind == GateKind::CNOT) {
        const std::size_t cbit = std::size_t{1} << static_cast<unsigned>(g.control);
        for (std::size_t col = 0; col < dim; ++col) {
            const std::size_t row = (col & cbit) != 0 ? (col ^ tbit) : col;
            m(row, col) = 1.0;
        }
        return m;
    }

    const double c = std::cos(g.angle / 2);
    const double s = std::sin(g.angle / 2);
    const Complex i{0.0, 1.0};
    // u[out_bit][in_bit]
    Complex u[2][2];
    switch (g.kind) {
    case GateKind::RX:
        u[0][0] = c;
        u[0][1] = -i * s;
        u[1][0] = -i * s;
        u[1][1] = c;
        break;
    case GateKind::RY:
        u[0][0] = c;
        u[0][1] = -s;
        u[1][0] = s;
        u[1][1] = c;
        break;
    case GateKind::RZ:
        u[0][0] = std::exp(-i * (g.angle / 2));
        u[0][1] = 0.0;
        u[1][0] = 0.0;
        u[1][1] = std::exp(i * (g.angle / 2));
        break;
    case GateKind::CNOT:
        break;
    }
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t in_bit = (col & tbit) != 0 ? 1 : 0;
        for (std::size_t out_bit = 0; out_bit < 2; ++out_bit) {
            const std::size_t row = out_bit != 0 ? (col | tbit) : (col & ~tbit);
            m(row, col) = u[out_bit][in_bit];
        }
    }
    return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out{a.dim, std::vector<Complex>(a.dim * a.dim, Complex{0.0, 0.0})};
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            const Complex ark = a(r, k);
            for (std::size_t c = 0; c < a.dim; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

} // namespace

DenseMatrix dense_unitary_oracle(std::span<const Gate> gates, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxOracleQubits) {
        throw ConfigError("dense oracle limited to 1.." + std::to_string(kMaxOracleQubits) +
                          " qubits");
    }
    const std::size_t dim = std::size_t{1} << static_cast<unsigned>(n_qubits);
    DenseMatrix u = DenseMatrix::identity(dim);
    for (const Gate& g : gates) {
        validate_gate(g, n_qubits);
        u = multiply(full_gate_matrix(g, n_qubits), u);
    }
    return u;
}

} // namespace comqel
