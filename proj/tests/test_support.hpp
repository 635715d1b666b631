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
#pragma once

#include "comqel/ansatz.hpp"
#include "comqel/rng.hpp"
#include "comqel/statevector.hpp"

#include <numbers>
#include <vector>

namespace comqel::support {

inline std::vector<Gate> random_circuit(Rng& rng, int n_qubits, int n_gates) {
    std::vector<Gate> gates;
    for (int k = 0; k < n_gates; ++k) {
        const auto q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_qubits)));
        const double a = rng.uniform(-2 * std::numbers::pi, 2 * std::numbers::pi);
        switch (n_qubits > 1 ? rng.below(4) : rng.below(3)) {
        case 0:
            gates.push_back(Gate::rx(q, a));
            break;
        case 1:
            gates.push_back(Gate::ry(q, a));
            break;
        case 2:
            gates.push_back(Gate::rz(q, a));
            break;
        default: {
            int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_qubits - 1)));
            if (t >= q) {
                ++t;
            }
            gates.push_back(Gate::cnot(q, t));
        }
        }
    }
    return gates;
}

inline std::vector<double> random_vector(Rng& rng, std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& x : v) {
        x = rng.uniform(lo, hi);
    }
    return v;
}

/// Random ansatz with 1..max_vars variables and block sizes 1..2.
inline AnsatzSpec random_ansatz(Rng& rng, int max_qubits, int max_layers) {
    for (;;) {
        const int n_vars = 1 + static_cast<int>(rng.below(3));
        std::vector<int> sizes;
        int total = 0;
        for (int v = 0; v < n_vars; ++v) {
            sizes.push_back(1 + static_cast<int>(rng.below(2)));
            total += sizes.back();
        }
        if (total > max_qubits) {
            continue;
        }
        const int layers = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_layers)));
        FunctionalGraph g = FunctionalGraph::single_clique(n_vars);
        Topology topo = Topology::Chain;
        if (n_vars > 1 && rng.below(2) == 1) {
            // first variable alone, the rest together
            std::vector<int> rest;
            for (int v = 1; v < n_vars; ++v) {
                rest.push_back(v);
            }
            g = FunctionalGraph{{{0}, rest}};
            topo = Topology::Clique;
        }
        return AnsatzSpec(layers, sizes, topo, g);
    }
}

inline AnsatzSpec one_qubit_toy(int layers = 1) {
    return AnsatzSpec(layers, {1}, Topology::Chain, FunctionalGraph::single_clique(1));
}

} // namespace comqel::support
