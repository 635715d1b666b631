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

#include <cmath>
#include <string>

namespace comqel {

AnsatzSpec::AnsatzSpec(int n_layers, std::vector<int> block_sizes, Topology topology,
                       FunctionalGraph graph)
    : n_layers_(n_layers), topology_(topology), graph_(std::move(graph)) {
    if (n_layers < 1) {
        throw ConfigError("ansatz needs at least one layer");
    }
    if (block_sizes.empty()) {
        throw ConfigError("ansatz needs at least one input variable");
    }
    int next = 0;
    for (std::size_t v = 0; v < block_sizes.size(); ++v) {
        if (block_sizes[v] < 1) {
            throw ConfigError("variable " + std::to_string(v) + " has an empty qubit block");
        }
        blocks_.push_back({static_cast<int>(v), next, block_sizes[v]});
        for (int k = 0; k < block_sizes[v]; ++k) {
            qubit_var_.push_back(static_cast<int>(v));
        }
        next += block_sizes[v];
    }
    n_qubits_ = next;
    if (n_qubits_ > kMaxQubits) {
        throw ConfigError("ansatz uses " + std::to_string(n_qubits_) + " qubits; at most " +
                          std::to_string(kMaxQubits) + " supported");
    }
    if (!graph_.covers(input_dim())) {
        throw ConfigError("functional graph does not cover exactly the input variables");
    }
}

AnsatzSpec AnsatzSpec::even(int n_qubits, int n_layers, int n_vars, Topology topology,
                            FunctionalGraph graph) {
    if (n_vars < 1 || n_qubits < n_vars || n_qubits % n_vars != 0) {
        throw ConfigError(std::to_string(n_qubits) + " qubits cannot be split evenly over " +
                          std::to_string(n_vars) + " variables");
    }
    return AnsatzSpec(n_layers, std::vector<int>(static_cast<std::size_t>(n_vars), n_qubits / n_vars),
                      topology, std::move(graph));
}

bool AnsatzSpec::has_entangler(int q) const {
    if (q < 0 || q + 1 >= n_qubits_) {
        return false;
    }
    if (topology_ == Topology::Chain) {
        return true;
    }
    return graph_.share_clique(variable_of(q), variable_of(q + 1));
}

std::size_t param_count(const AnsatzSpec& spec) {
    return 3 * static_cast<std::size_t>(spec.n_qubits()) *
           static_cast<std::size_t>(spec.n_layers() + 1);
}

namespace {

void append_trainable(const AnsatzSpec& spec, std::span<const double> angles,
                      std::size_t first_param, Circuit* circuit, std::vector<Gate>* out) {
    const int n = spec.n_qubits();
    auto emit = [&](Gate g, GateSource src) {
        out->push_back(g);
        if (circuit != nullptr) {
            circuit->sources.push_back(src);
        }
    };
    for (int q = 0; q < n; ++q) {
        const auto base = static_cast<std::size_t>(3 * q);
        const auto idx = [&](std::size_t slot) {
            return GateSource{GateSource::Kind::Trainable, static_cast<int>(first_param + base + slot), 0};
        };
        emit(Gate::rx(q, angles[base]), idx(0));
        emit(Gate::rz(q, angles[base + 1]), idx(1));
        emit(Gate::rx(q, angles[base + 2]), idx(2));
    }
    for (int q = 0; q + 1 < n; ++q) {
        if (spec.has_entangler(q)) {
            emit(Gate::cnot(q, q + 1), GateSource{});
        }
    }
}

void check_domain(std::span<const double> x) {
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (!(std::abs(x[v]) <= 1.0)) {
            throw DomainError("input component " + std::to_string(v) + " = " +
                              std::to_string(x[v]) + " outside [-1, 1]");
        }
    }
}

void append_encoding(const AnsatzSpec& spec, std::span<const double> x, int layer,
                     Circuit* circuit, std::vector<Gate>* out) {
    for (const VarBlock& b : spec.blocks()) {
        const double theta = std::acos(x[static_cast<std::size_t>(b.variable)]);
        for (int i = 1; i <= b.size; ++i) {
            const int j = (layer - 1) * b.size + i;
            out->push_back(Gate::ry(b.first_qubit + i - 1, 2.0 * j * theta));
            if (circuit != nullptr) {
                circuit->sources.push_back({GateSource::Kind::Encoding, b.variable, j});
            }
        }
    }
}

} // namespace

std::vector<Gate> build_trainable_block(const AnsatzSpec& spec, std::span<const double> angles) {
    if (angles.size() != 3 * static_cast<std::size_t>(spec.n_qubits())) {
        throw UsageError("trainable block needs 3 angles per qubit");
    }
    std::vector<Gate> gates;
    append_trainable(spec, angles, 0, nullptr, &gates);
    return gates;
}

std::vector<Gate> build_encoding_block(const AnsatzSpec& spec, std::span<const double> x,
                                       int layer) {
    if (x.size() != static_cast<std::size_t>(spec.input_dim())) {
        throw UsageError("input has " + std::to_string(x.size()) + " components, ansatz expects " +
                         std::to_string(spec.input_dim()));
    }
    if (layer < 1 || layer > spec.n_layers()) {
        throw UsageError("encoding layer index out of range");
    }
    check_domain(x);
    std::vector<Gate> gates;
    append_encoding(spec, x, layer, nullptr, &gates);
    return gates;
}

Circuit build_circuit(const AnsatzSpec& spec, std::span<const double> theta,
                      std::span<const double> x) {
    const std::size_t p = param_count(spec);
    if (theta.size() != p) {
        throw UsageError("parameter vector has length " + std::to_string(theta.size()) +
                         ", expected " + std::to_string(p));
    }
    if (x.size() != static_cast<std::size_t>(spec.input_dim())) {
        throw UsageError("input has " + std::to_string(x.size()) + " components, ansatz expects " +
                         std::to_string(spec.input_dim()));
    }
    check_domain(x);

    const std::size_t per_block = 3 * static_cast<std::size_t>(spec.n_qubits());
    Circuit c;
    c.n_qubits = spec.n_qubits();
    for (int layer = 1; layer <= spec.n_layers() + 1; ++layer) {
        const std::size_t first = static_cast<std::size_t>(layer - 1) * per_block;
        append_trainable(spec, theta.subspan(first, per_block), first, &c, &c.gates);
        if (layer <= spec.n_layers()) {
            append_encoding(spec, x, layer, &c, &c.gates);
        }
    }
    return c;
}

double run_circuit(const Circuit& circuit) {
    StateVector psi(circuit.n_qubits);
    for (const Gate& g : circuit.gates) {
        psi.apply_unchecked(g);
    }
    return expectation_sum_z(psi);
}

double evaluate_surrogate(const AnsatzSpec& spec, std::span<const double> theta,
                          std::span<const double> x) {
    return run_circuit(build_circuit(spec, theta, x));
}

} // namespace comqel
