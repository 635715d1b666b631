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
 * Classical conservative baseline: a one-hidden-layer tanh network whose
 * weight count is matched to the quantum circuit's parameter count, trained
 * by the same loop as the quantum surrogate.
 */
#pragma once

#include "comqel/training.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace comqel {

/// f(x) = w2 . tanh(W1 x + b1) + b2
struct MlpSpec {
    int d_in{1};
    int hidden{1};
    std::vector<double> w1; ///< hidden x d_in, row-major
    std::vector<double> b1; ///< hidden
    std::vector<double> w2; ///< hidden
    double b2{0.0};

    static MlpSpec zeros(int d_in, int hidden);

    /// Layout: w1, b1, w2, b2.
    static MlpSpec from_flat(int d_in, int hidden, std::span<const double> flat);
    [[nodiscard]] std::vector<double> flatten() const;

    [[nodiscard]] std::size_t weight_count() const { return weight_count(d_in, hidden); }
    static std::size_t weight_count(int d_in, int hidden) {
        return static_cast<std::size_t>(d_in * hidden + 2 * hidden + 1);
    }
};

/// Largest h with d_in h + 2 h + 1 <= pqc_param_count. Throws UsageError if
/// even h = 1 does not fit.
int matched_hidden_size(int d_in, std::size_t pqc_param_count);

double mlp_forward(const MlpSpec& spec, std::span<const double> x);

struct MlpGrads {
    double output{0.0};
    std::vector<double> weights; ///< d (f - target)^2 / d weights, flattened layout
    std::vector<double> input;   ///< d f / d x
};

MlpGrads mlp_grads(const MlpSpec& spec, std::span<const double> x, double target);

/// Output value; writes df/dweights (flattened) and df/dx when the spans are non-empty.
double mlp_output_grads(const MlpSpec& spec, std::span<const double> x,
                        std::span<double> d_weights, std::span<double> d_input);

class MlpSurrogate final : public SurrogateModel {
  public:
    MlpSurrogate(int d_in, int hidden);

    [[nodiscard]] int hidden() const { return hidden_; }

    [[nodiscard]] std::size_t param_count() const override;
    [[nodiscard]] int input_dim() const override { return d_in_; }
    double value(std::span<const double> params, std::span<const double> x) const override;
    double value_and_param_grad(std::span<const double> params, std::span<const double> x,
                                std::span<double> grad) const override;
    double value_and_input_grad(std::span<const double> params, std::span<const double> x,
                                std::span<double> grad, bool& clamped) const override;
    /// Each layer uniform on [-1/sqrt(fan_in), 1/sqrt(fan_in)].
    [[nodiscard]] std::vector<double> initial_params(std::uint64_t seed) const override;

  private:
    int d_in_;
    int hidden_;
};

struct ClassicalTrainResult {
    MlpSpec mlp;
    TrainResult train;
};

/// Same loop as train_com_qel with the network substituted. Any variant is
/// accepted, so plain regression is available for comparison.
ClassicalTrainResult train_com_classical(const MlpSpec& shape, const Dataset& data,
                                         const TrainConfig& config);

} // namespace comqel
