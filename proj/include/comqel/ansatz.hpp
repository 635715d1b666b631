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
 * Data re-uploading circuit: trainable hardware-efficient blocks interleaved
 * with Chebyshev tower encodings, and evaluation of the surrogate
 * f(theta, x) = <0| U^dagger M U |0> with M = sum_i Z_i.
 */
#pragma once

#include "comqel/functional_graph.hpp"
#include "comqel/statevector.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace comqel {

enum class Topology {
    Chain,  ///< CNOT (q, q+1) for every adjacent pair
    Clique, ///< chain edges kept only inside a functional-graph clique
};

/// Contiguous register [first_qubit, first_qubit + size) encoding one input variable.
struct VarBlock {
    int variable{0};
    int first_qubit{0};
    int size{0};
};

class AnsatzSpec {
  public:
    /// Blocks are laid out in variable order: variable v gets the next
    /// `block_sizes[v]` qubits. Throws ConfigError on inconsistent input.
    AnsatzSpec(int n_layers, std::vector<int> block_sizes, Topology topology,
               FunctionalGraph graph);

    /// `n_qubits` split evenly across `n_vars` variables.
    static AnsatzSpec even(int n_qubits, int n_layers, int n_vars, Topology topology,
                           FunctionalGraph graph);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] int n_layers() const { return n_layers_; }
    [[nodiscard]] int input_dim() const { return static_cast<int>(blocks_.size()); }
    [[nodiscard]] Topology topology() const { return topology_; }
    [[nodiscard]] const FunctionalGraph& graph() const { return graph_; }
    [[nodiscard]] const std::vector<VarBlock>& blocks() const { return blocks_; }
    [[nodiscard]] int variable_of(int qubit) const { return qubit_var_[static_cast<std::size_t>(qubit)]; }

    /// Whether the trainable blocks place CNOT (q, q+1).
    [[nodiscard]] bool has_entangler(int q) const;

  private:
    int n_qubits_{0};
    int n_layers_{0};
    Topology topology_{Topology::Chain};
    FunctionalGraph graph_;
    std::vector<VarBlock> blocks_;
    std::vector<int> qubit_var_;
};

/// 3 * n_qubits * (n_layers + 1).
std::size_t param_count(const AnsatzSpec& spec);

/// RX, RZ, RX on every qubit from `angles` (3 per qubit), then the CNOT entanglers.
std::vector<Gate> build_trainable_block(const AnsatzSpec& spec, std::span<const double> angles);

/// RY(2 j arccos x_v) with tower index j = (layer - 1) * m + i counted within
/// each variable's block of m qubits (i is 1-based). `layer` is 1-based.
/// Throws DomainError if any |x_v| > 1.
std::vector<Gate> build_encoding_block(const AnsatzSpec& spec, std::span<const double> x,
                                       int layer);

/// Where a gate's angle comes from.
struct GateSource {
    enum class Kind { Fixed, Trainable, Encoding };
    Kind kind{Kind::Fixed};
    int index{-1}; ///< parameter index (Trainable) or variable (Encoding)
    int tower{0};  ///< tower multiplier j (Encoding)
};

/// Full gate list W1 S1 ... WL SL W(L+1) with per-gate provenance.
struct Circuit {
    int n_qubits{0};
    std::vector<Gate> gates;
    std::vector<GateSource> sources;
};

/// Throws UsageError on a theta/x length mismatch and DomainError on |x_v| > 1.
Circuit build_circuit(const AnsatzSpec& spec, std::span<const double> theta,
                      std::span<const double> x);

/// Runs the circuit on |0...0> and returns <sum Z>.
double run_circuit(const Circuit& circuit);

double evaluate_surrogate(const AnsatzSpec& spec, std::span<const double> theta,
                          std::span<const double> x);

} // namespace comqel
