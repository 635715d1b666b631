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

#include "comqel/gradients.hpp"

#include "comqel/error.hpp"

#include <cmath>
#include <numbers>

namespace comqel {

namespace {

void check_targets(const Circuit& circuit, std::span<const std::size_t> gate_indices) {
    std::size_t next = 0;
    for (std::size_t t : gate_indices) {
        if (t >= circuit.gates.size() || t < next || !circuit.gates[t].is_rotation()) {
            throw UsageError("shift targets must be ascending rotation gate indices");
        }
        next = t + 1;
    }
}

} // namespace

ShiftDerivatives shift_derivatives(const Circuit& circuit, std::span<const std::size_t> gate_indices) {
    check_targets(circuit, gate_indices);
    StateVector psi(circuit.n_qubits);
    for (const Gate& g : circuit.gates) {
        psi.apply_unchecked(g);
    }
    ShiftDerivatives out;
    out.value = expectation_sum_z(psi);
    out.d_angle.assign(gate_indices.size(), 0.0);

    StateVector lambda = apply_sum_z(psi);
    std::size_t pending = gate_indices.size();
    for (std::size_t k = circuit.gates.size(); k-- > 0 && pending > 0;) {
        const Gate& g = circuit.gates[k];
        if (gate_indices[pending - 1] == k) {
            out.d_angle[--pending] = pauli_overlap(lambda, psi, g.kind, g.target).imag();
        }
        const Gate inv = g.inverse();
        psi.apply_unchecked(inv);
        lambda.apply_unchecked(inv);
    }
    return out;
}

ShiftDerivatives shift_derivatives_reference(const Circuit& circuit,
                                             std::span<const std::size_t> gate_indices) {
    check_targets(circuit, gate_indices);
    constexpr double kShift = std::numbers::pi / 2;
    const std::size_t n_gates = circuit.gates.size();

    ShiftDerivatives out;
    out.d_angle.reserve(gate_indices.size());

    // Prefix state advances monotonically; each shifted evaluation only
    // replays the suffix after its gate.
    StateVector prefix(circuit.n_qubits);
    std::size_t applied = 0;
    for (std::size_t t : gate_indices) {
        while (applied < t) {
            prefix.apply_unchecked(circuit.gates[applied++]);
        }
        double e[2] = {0.0, 0.0};
        for (int s = 0; s < 2; ++s) {
            StateVector psi = prefix;
            Gate g = circuit.gates[t];
            g.angle += s == 0 ? kShift : -kShift;
            psi.apply_unchecked(g);
            for (std::size_t k = t + 1; k < n_gates; ++k) {
                psi.apply_unchecked(circuit.gates[k]);
            }
            e[s] = expectation_sum_z(psi);
        }
        out.d_angle.push_back((e[0] - e[1]) / 2);
    }
    while (applied < n_gates) {
        prefix.apply_unchecked(circuit.gates[applied++]);
    }
    out.value = expectation_sum_z(prefix);
    return out;
}

GradReport gradients(const AnsatzSpec& spec, std::span<const double> theta,
                     std::span<const double> x, GradRequest request) {
    GradReport report;

    std::vector<double> xc(x.begin(), x.end());
    if (request.x) {
        for (double& v : xc) {
            if (std::abs(v) > 1.0 - kInputClampEps) {
                v = std::copysign(1.0 - kInputClampEps, v);
                report.clamped = true;
            }
        }
    }

    const Circuit circuit = build_circuit(spec, theta, xc);

    std::vector<std::size_t> targets;
    for (std::size_t k = 0; k < circuit.gates.size(); ++k) {
        const auto kind = circuit.sources[k].kind;
        if ((request.theta && kind == GateSource::Kind::Trainable) ||
            (request.x && kind == GateSource::Kind::Encoding)) {
            targets.push_back(k);
        }
    }

    const ShiftDerivatives sd = shift_derivatives(circuit, targets);
    report.value = sd.value;

    if (request.theta) {
        report.d_theta.assign(param_count(spec), 0.0);
    }
    if (request.x) {
        report.d_x.assign(xc.size(), 0.0);
    }
    for (std::size_t k = 0; k < targets.size(); ++k) {
        const GateSource& src = circuit.sources[targets[k]];
        const auto i = static_cast<std::size_t>(src.index);
        if (src.kind == GateSource::Kind::Trainable) {
            report.d_theta[i] = sd.d_angle[k];
        } else {
            // angle = 2 j arccos(x)  =>  d angle / dx = -2 j / sqrt(1 - x^2)
            const double dphi_dx = -2.0 * src.tower / std::sqrt(1.0 - xc[i] * xc[i]);
            report.d_x[i] += sd.d_angle[k] * dphi_dx;
        }
    }
    return report;
}

std::vector<double> grad_theta(const AnsatzSpec& spec, std::span<const double> theta,
                               std::span<const double> x) {
    return gradients(spec, theta, x, {.theta = true, .x = false}).d_theta;
}

std::vector<double> grad_x(const AnsatzSpec& spec, std::span<const double> theta,
                           std::span<const double> x) {
    return gradients(spec, theta, x, {.theta = false, .x = true}).d_x;
}

std::vector<double> finite_diff(const std::function<double(std::span<const double>)>& fn,
                                std::span<const double> point, double h) {
    if (!(h > 0.0)) {
        throw UsageError("finite difference step must be positive");
    }
    std::vector<double> p(point.begin(), point.end());
    std::vector<double> grad(p.size(), 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double orig = p[k];
        p[k] = orig + h;
        const double up = fn(p);
        p[k] = orig - h;
        const double down = fn(p);
        p[k] = orig;
        grad[k] = (up - down) / (2 * h);
    }
    return grad;
}

} // namespace comqel
