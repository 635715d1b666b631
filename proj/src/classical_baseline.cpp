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

#include "comqel/classical_baseline.hpp"

#include "comqel/error.hpp"
#include "comqel/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace comqel {

MlpSpec MlpSpec::zeros(int d_in, int hidden) {
    if (d_in < 1 || hidden < 1) {
        throw UsageError("network needs positive input and hidden sizes");
    }
    const auto h = static_cast<std::size_t>(hidden);
    return {d_in, hidden, std::vector<double>(h * static_cast<std::size_t>(d_in), 0.0),
            std::vector<double>(h, 0.0), std::vector<double>(h, 0.0), 0.0};
}

MlpSpec MlpSpec::from_flat(int d_in, int hidden, std::span<const double> flat) {
    MlpSpec s = zeros(d_in, hidden);
    if (flat.size() != s.weight_count()) {
        throw UsageError("flat weight vector has length " + std::to_string(flat.size()) +
                         ", expected " + std::to_string(s.weight_count()));
    }
    auto it = flat.begin();
    for (double& w : s.w1) {
        w = *it++;
    }
    for (double& w : s.b1) {
        w = *it++;
    }
    for (double& w : s.w2) {
        w = *it++;
    }
    s.b2 = *it;
    return s;
}

std::vector<double> MlpSpec::flatten() const {
    std::vector<double> flat;
    flat.reserve(weight_count());
    flat.insert(flat.end(), w1.begin(), w1.end());
    flat.insert(flat.end(), b1.begin(), b1.end());
    flat.insert(flat.end(), w2.begin(), w2.end());
    flat.push_back(b2);
    return flat;
}

int matched_hidden_size(int d_in, std::size_t pqc_param_count) {
    if (d_in < 1 || pqc_param_count < static_cast<std::size_t>(d_in) + 3) {
        throw UsageError("no hidden width fits " + std::to_string(pqc_param_count) +
                         " weights for input dimension " + std::to_string(d_in));
    }
    return static_cast<int>((pqc_param_count - 1) / static_cast<std::size_t>(d_in + 2));
}

namespace {

// Walks the flat layout directly so the surrogate can avoid unpacking.
double forward_flat(int d_in, int hidden, std::span<const double> p, std::span<const double> x,
                    std::span<double> d_weights, std::span<double> d_input) {
    const auto d = static_cast<std::size_t>(d_in);
    const auto h = static_cast<std::size_t>(hidden);
    const std::size_t off_b1 = h * d;
    const std::size_t off_w2 = off_b1 + h;
    const std::size_t off_b2 = off_w2 + h;

    if (p.size() != MlpSpec::weight_count(d_in, hidden)) {
        throw UsageError("network weight vector has the wrong length");
    }
    if (x.size() != d) {
        throw UsageError("network input has " + std::to_string(x.size()) + " components, expected " +
                         std::to_string(d));
    }
    if (!d_input.empty()) {
        std::fill(d_input.begin(), d_input.end(), 0.0);
    }

    double out = p[off_b2];
    for (std::size_t j = 0; j < h; ++j) {
        double pre = p[off_b1 + j];
        for (std::size_t k = 0; k < d; ++k) {
            pre += p[j * d + k] * x[k];
        }
        const double a = std::tanh(pre);
        const double w2 = p[off_w2 + j];
        out += w2 * a;

        const double dpre = w2 * (1.0 - a * a);
        if (!d_weights.empty()) {
            for (std::size_t k = 0; k < d; ++k) {
                d_weights[j * d + k] = dpre * x[k];
            }
            d_weights[off_b1 + j] = dpre;
            d_weights[off_w2 + j] = a;
        }
        if (!d_input.empty()) {
            for (std::size_t k = 0; k < d; ++k) {
                d_input[k] += dpre * p[j * d + k];
            }
        }
    }
    if (!d_weights.empty()) {
        d_weights[off_b2] = 1.0;
    }
    return out;
}

} // namespace

double mlp_output_grads(const MlpSpec& spec, std::span<const double> x,
                        std::span<double> d_weights, std::span<double> d_input) {
    const std::vector<double> flat = spec.flatten();
    return forward_flat(spec.d_in, spec.hidden, flat, x, d_weights, d_input);
}

double mlp_forward(const MlpSpec& spec, std::span<const double> x) {
    return mlp_output_grads(spec, x, {}, {});
}

MlpGrads mlp_grads(const MlpSpec& spec, std::span<const double> x, double target) {
    MlpGrads g;
    g.weights.assign(spec.weight_count(), 0.0);
    g.input.assign(static_cast<std::size_t>(spec.d_in), 0.0);
    g.output = mlp_output_grads(spec, x, g.weights, g.input);
    const double scale = 2.0 * (g.output - target);
    for (double& w : g.weights) {
        w *= scale;
    }
    return g;
}

MlpSurrogate::MlpSurrogate(int d_in, int hidden) : d_in_(d_in), hidden_(hidden) {
    if (d_in < 1 || hidden < 1) {
        throw UsageError("network needs positive input and hidden sizes");
    }
}

std::size_t MlpSurrogate::param_count() const { return MlpSpec::weight_count(d_in_, hidden_); }

double MlpSurrogate::value(std::span<const double> params, std::span<const double> x) const {
    return forward_flat(d_in_, hidden_, params, x, {}, {});
}

double MlpSurrogate::value_and_param_grad(std::span<const double> params, std::span<const double> x,
                                          std::span<double> grad) const {
    return forward_flat(d_in_, hidden_, params, x, grad, {});
}

double MlpSurrogate::value_and_input_grad(std::span<const double> params, std::span<const double> x,
                                          std::span<double> grad, bool& clamped) const {
    clamped = false;
    return forward_flat(d_in_, hidden_, params, x, {}, grad);
}

std::vector<double> MlpSurrogate::initial_params(std::uint64_t seed) const {
    Rng rng(seed);
    MlpSpec s = MlpSpec::zeros(d_in_, hidden_);
    const double r1 = 1.0 / std::sqrt(static_cast<double>(d_in_));
    const double r2 = 1.0 / std::sqrt(static_cast<double>(hidden_));
    for (double& w : s.w1) {
        w = rng.uniform(-r1, r1);
    }
    for (double& w : s.b1) {
        w = rng.uniform(-r1, r1);
    }
    for (double& w : s.w2) {
        w = rng.uniform(-r2, r2);
    }
    s.b2 = rng.uniform(-r2, r2);
    return s.flatten();
}

ClassicalTrainResult train_com_classical(const MlpSpec& shape, const Dataset& data,
                                         const TrainConfig& config) {
    MlpSurrogate model(shape.d_in, shape.hidden);
    TrainResult tr = train_surrogate(model, data, config);
    MlpSpec trained = MlpSpec::from_flat(shape.d_in, shape.hidden, tr.params);
    return {std::move(trained), std::move(tr)};
}

} // namespace comqel
