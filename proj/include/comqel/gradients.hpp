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
 * Parameter-shift derivatives of the surrogate with respect to the trainable
 * angles and, through the arccos encoding, the inputs.
 */
#pragma once

#include "comqel/ansatz.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace comqel {

/// Inputs with |x_v| above 1 - kInputClampEps are clamped before taking
/// input derivatives; d arccos(x)/dx is unbounded at the boundary.
inline constexpr double kInputClampEps = 1e-7;

struct GradReport {
    std::vector<double> d_theta; ///< empty unless requested
    std::vector<double> d_x;     ///< empty unless requested
    double value{0.0};           ///< surrogate at the (possibly clamped) point
    bool clamped{false};         ///< some input was moved to +-(1 - kInputClampEps)
};

struct GradRequest {
    bool theta{true};
    bool x{true};
};

/// Value and d<sum Z>/d(angle) of each listed gate under the +-pi/2 shift
/// rule. `gate_indices` must be ascending and refer to rotation gates.
struct ShiftDerivatives {
    double value{0.0};
    std::vector<double> d_angle;
};

/// Shift-rule derivatives in one backward sweep. Since
/// R(a +- pi/2) = R(a) (1 -+ i P) / sqrt(2), the difference
/// (f(a + pi/2) - f(a - pi/2)) / 2 equals Im <lambda_k| P |psi_k> with
/// psi_k the state after gate k and lambda_k = U_{>k}^dag (sum Z) |psi_final>.
/// Cost is linear in the gate count.
ShiftDerivatives shift_derivatives(const Circuit& circuit, std::span<const std::size_t> gate_indices);

/// The same quantity from two explicitly shifted circuit evaluations per gate.
/// Quadratic in the gate count; kept as a cross-check.
ShiftDerivatives shift_derivatives_reference(const Circuit& circuit,
                                             std::span<const std::size_t> gate_indices);

/// One sweep computing whichever derivatives are requested.
GradReport gradients(const AnsatzSpec& spec, std::span<const double> theta,
                     std::span<const double> x, GradRequest request = {});

std::vector<double> grad_theta(const AnsatzSpec& spec, std::span<const double> theta,
                               std::span<const double> x);

std::vector<double> grad_x(const AnsatzSpec& spec, std::span<const double> theta,
                           std::span<const double> x);

/// Central differences (f(p + h e_k) - f(p - h e_k)) / 2h for every coordinate.
std::vector<double> finite_diff(const std::function<double(std::span<const double>)>& fn,
                                std::span<const double> point, double h);

} // namespace comqel
