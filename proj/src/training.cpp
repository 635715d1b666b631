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

#include "comqel/training.hpp"

#include "comqel/extremize.hpp"
#include "comqel/gradients.hpp"
#include "comqel/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace comqel {

std::size_t QuantumSurrogate::param_count() const { return comqel::param_count(spec_); }

double QuantumSurrogate::value(std::span<const double> params, std::span<const double> x) const {
    return evaluate_surrogate(spec_, params, x);
}

double QuantumSurrogate::value_and_param_grad(std::span<const double> params,
                                              std::span<const double> x,
                                              std::span<double> grad) const {
    GradReport r = gradients(spec_, params, x, {.theta = true, .x = false});
    std::ranges::copy(r.d_theta, grad.begin());
    return r.value;
}

double QuantumSurrogate::value_and_input_grad(std::span<const double> params,
                                              std::span<const double> x, std::span<double> grad,
                                              bool& clamped) const {
    GradReport r = gradients(spec_, params, x, {.theta = false, .x = true});
    std::ranges::copy(r.d_x, grad.begin());
    clamped = r.clamped;
    return r.value;
}

std::vector<double> QuantumSurrogate::initial_params(std::uint64_t seed) const {
    Rng rng(seed);
    std::vector<double> theta(param_count());
    for (double& t : theta) {
        t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    return theta;
}

std::string_view to_string(PenaltyVariant v) {
    switch (v) {
    case PenaltyVariant::Full:
        return "FULL";
    case PenaltyVariant::OnlyAdv:
        return "ONLY_ADV";
    case PenaltyVariant::NoAdv:
        return "NO_ADV";
    case PenaltyVariant::QelPlain:
        return "QEL_PLAIN";
    }
    return "?";
}

double TrainConfig::resolved_adv_step(int dim) const {
    return adv_step.value_or(0.05 * std::sqrt(static_cast<double>(dim)));
}

double TrainConfig::resolved_extremize_lr(int dim) const {
    return extremize_lr.value_or(0.05 * std::sqrt(static_cast<double>(dim)));
}

void TrainConfig::validate() const {
    if (!(tau >= 0.0)) {
        throw ConfigError("tau must be >= 0");
    }
    if (t_p < 1) {
        throw ConfigError("t_p must be >= 1");
    }
    if (adv_step && !(*adv_step > 0.0)) {
        throw ConfigError("adversarial step must be > 0");
    }
    if (epochs < 1) {
        throw ConfigError("epochs must be >= 1");
    }
    if (!(primal_lr > 0.0)) {
        throw ConfigError("primal learning rate must be > 0");
    }
    if (!(dual_lr >= 0.0)) {
        throw ConfigError("dual learning rate must be >= 0");
    }
    if (!(alpha_init >= 0.0)) {
        throw ConfigError("alpha_init must be >= 0");
    }
    if (extremize_steps < 0) {
        throw ConfigError("extremize_steps must be >= 0");
    }
    if (extremize_lr && !(*extremize_lr > 0.0)) {
        throw ConfigError("extremization step must be > 0");
    }
}

void DualState::ascend(double violation, double lr) { alpha = std::max(0.0, alpha + lr * violation); }

void adam_step(AdamState& state, std::span<double> params, std::span<const double> grads, double lr) {
    if (state.m.size() != params.size() || grads.size() != params.size()) {
        throw UsageError("Adam moment/parameter/gradient lengths differ");
    }
    ++state.step;
    const double t = static_cast<double>(state.step);
    const double c1 = 1.0 - std::pow(state.beta1, t);
    const double c2 = 1.0 - std::pow(state.beta2, t);
    for (std::size_t k = 0; k < params.size(); ++k) {
        state.m[k] = state.beta1 * state.m[k] + (1.0 - state.beta1) * grads[k];
        state.v[k] = state.beta2 * state.v[k] + (1.0 - state.beta2) * grads[k] * grads[k];
        const double m_hat = state.m[k] / c1;
        const double v_hat = state.v[k] / c2;
        params[k] -= lr * m_hat / (std::sqrt(v_hat) + state.eps);
    }
}

double mse_loss(const SurrogateModel& model, std::span<const double> params, const Dataset& data) {
    if (data.empty()) {
        throw UsageError("mse_loss on an empty dataset");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double r = model.value(params, data.x[i]) - data.y_scaled[i];
        acc += r * r;
    }
    return acc / static_cast<double>(data.size());
}

double mse_loss(const AnsatzSpec& spec, std::span<const double> theta, const Dataset& data) {
    return mse_loss(QuantumSurrogate(spec), theta, data);
}

namespace {

std::vector<std::vector<double>> adversarial_points(const SurrogateModel& model,
                                                    std::span<const double> params,
                                                    const Dataset& data, int t_p, double step,
                                                    std::size_t& clamped_count) {
    std::vector<std::vector<double>> adv;
    adv.reserve(data.size());
    std::vector<double> grad(static_cast<std::size_t>(data.dim));
    for (const auto& x0 : data.x) {
        std::vector<double> x = x0;
        for (int t = 0; t < t_p; ++t) {
            bool clamped = false;
            model.value_and_input_grad(params, x, grad, clamped);
            if (clamped) {
                ++clamped_count;
            }
            if (!std::ranges::all_of(grad, [](double g) { return std::isfinite(g); })) {
                throw NumericalError("non-finite input gradient while generating adversarial points");
            }
            x = reflective_step(x, grad, step);
        }
        adv.push_back(std::move(x));
    }
    return adv;
}

double mean(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) {
        acc += x;
    }
    return acc / static_cast<double>(v.size());
}

bool uses_adv_term(PenaltyVariant v) { return v == PenaltyVariant::Full || v == PenaltyVariant::OnlyAdv; }
bool uses_data_term(PenaltyVariant v) { return v == PenaltyVariant::Full || v == PenaltyVariant::NoAdv; }

} // namespace

std::vector<std::vector<double>> generate_adversarial(const SurrogateModel& model,
                                                      std::span<const double> params,
                                                      const Dataset& data, const TrainConfig& config) {
    std::size_t clamped = 0;
    return adversarial_points(model, params, data, config.t_p, config.resolved_adv_step(data.dim),
                              clamped);
}

std::vector<std::vector<double>> generate_adversarial(const AnsatzSpec& spec,
                                                      std::span<const double> theta,
                                                      const Dataset& data, const TrainConfig& config) {
    return generate_adversarial(QuantumSurrogate(spec), theta, data, config);
}

double penalty_from_values(std::span<const double> f_adv, std::span<const double> f_data,
                           double tau, PenaltyVariant variant) {
    switch (variant) {
    case PenaltyVariant::Full:
        return mean(f_adv) - mean(f_data) - tau;
    case PenaltyVariant::OnlyAdv:
        return mean(f_adv) - tau;
    case PenaltyVariant::NoAdv:
        return -mean(f_data) - tau;
    case PenaltyVariant::QelPlain:
        break;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double com_penalty(const SurrogateModel& model, std::span<const double> params, const Dataset& data,
                   const std::vector<std::vector<double>>& adv, double tau) {
    if (adv.size() != data.size()) {
        throw UsageError("adversarial set size differs from dataset size");
    }
    std::vector<double> f_adv;
    std::vector<double> f_data;
    for (std::size_t i = 0; i < data.size(); ++i) {
        f_adv.push_back(model.value(params, adv[i]));
        f_data.push_back(model.value(params, data.x[i]));
    }
    return penalty_from_values(f_adv, f_data, tau, PenaltyVariant::Full);
}

double com_penalty(const AnsatzSpec& spec, std::span<const double> theta, const Dataset& data,
                   const std::vector<std::vector<double>>& adv, double tau) {
    return com_penalty(QuantumSurrogate(spec), theta, data, adv, tau);
}

LagrangianEval lagrangian(const SurrogateModel& model, std::span<const double> params,
                          const Dataset& data, const std::vector<std::vector<double>>& adv,
                          double alpha, double tau, PenaltyVariant variant, bool include_mse) {
    if (data.empty()) {
        throw UsageError("training on an empty dataset");
    }
    const bool constrained = variant != PenaltyVariant::QelPlain;
    if (constrained && adv.size() != data.size()) {
        throw UsageError("adversarial set size differs from dataset size");
    }
    const std::size_t n = data.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    const bool penalize = constrained && alpha != 0.0;

    LagrangianEval out;
    out.grad.assign(model.param_count(), 0.0);
    std::vector<double> g(model.param_count());
    std::vector<double> f_data(n);
    std::vector<double> f_adv;

    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = model.value_and_param_grad(params, data.x[i], g);
        f_data[i] = f;
        const double r = f - data.y_scaled[i];
        sq += r * r;
        double coeff = include_mse ? 2.0 * inv_n * r : 0.0;
        if (penalize && uses_data_term(variant)) {
            coeff -= alpha * inv_n;
        }
        for (std::size_t k = 0; k < g.size(); ++k) {
            out.grad[k] += coeff * g[k];
        }
    }
    out.mse = sq * inv_n;

    if (constrained) {
        f_adv.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (penalize && uses_adv_term(variant)) {
                f_adv[i] = model.value_and_param_grad(params, adv[i], g);
                const double coeff = alpha * inv_n;
                for (std::size_t k = 0; k < g.size(); ++k) {
                    out.grad[k] += coeff * g[k];
                }
            } else {
                f_adv[i] = model.value(params, adv[i]);
            }
        }
    }
    out.penalty = penalty_from_values(f_adv, f_data, tau, variant);
    return out;
}

TrainResult train_surrogate(const SurrogateModel& model, const Dataset& data,
                            const TrainConfig& config, std::optional<std::vector<double>> init) {
    config.validate();
    if (data.empty()) {
        throw UsageError("training on an empty dataset");
    }
    if (data.dim != model.input_dim()) {
        throw UsageError("dataset dimension " + std::to_string(data.dim) +
                         " does not match model input dimension " +
                         std::to_string(model.input_dim()));
    }

    TrainResult result;
    result.params = init ? std::move(*init) : model.initial_params(config.seed);
    if (result.params.size() != model.param_count()) {
        throw UsageError("initial parameter vector has the wrong length");
    }
    result.dual.alpha = config.alpha_init;

    const bool constrained = config.variant != PenaltyVariant::QelPlain;
    const double adv_step = config.resolved_adv_step(data.dim);
    AdamState adam(model.param_count());
    std::vector<std::vector<double>> adv;

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        const auto start = std::chrono::steady_clock::now();
        try {
            if (constrained) {
                adv = adversarial_points(model, result.params, data, config.t_p, adv_step,
                                         result.clamped_input_grads);
            }
        } catch (const NumericalError& e) {
            throw TrainingAborted(e.what(), std::move(result.trace));
        }
        LagrangianEval eval = lagrangian(model, result.params, data, adv, result.dual.alpha,
                                         config.tau, config.variant);

        const bool finite =
            std::isfinite(eval.mse) && (!constrained || std::isfinite(eval.penalty)) &&
            std::ranges::all_of(eval.grad, [](double g) { return std::isfinite(g); });
        if (!finite) {
            throw TrainingAborted("non-finite loss or gradient at epoch " + std::to_string(epoch),
                                  std::move(result.trace));
        }

        adam_step(adam, result.params, eval.grad, config.primal_lr);
        if (constrained) {
            result.dual.ascend(eval.penalty, config.dual_lr);
            if (!std::isfinite(result.dual.alpha)) {
                throw TrainingAborted("non-finite multiplier at epoch " + std::to_string(epoch),
                                      std::move(result.trace));
            }
        }

        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        result.trace.push_back({epoch, eval.mse, eval.penalty, result.dual.alpha, elapsed.count()});
    }
    return result;
}

TrainResult train_qel(const AnsatzSpec& spec, const Dataset& data, const TrainConfig& config,
                      std::optional<std::vector<double>> init) {
    if (config.variant != PenaltyVariant::QelPlain) {
        throw UsageError("train_qel requires the QEL_PLAIN variant");
    }
    return train_surrogate(QuantumSurrogate(spec), data, config, std::move(init));
}

TrainResult train_com_qel(const AnsatzSpec& spec, const Dataset& data, const TrainConfig& config,
                          std::optional<std::vector<double>> init) {
    if (config.variant == PenaltyVariant::QelPlain) {
        throw UsageError("train_com_qel requires a conservative variant");
    }
    return train_surrogate(QuantumSurrogate(spec), data, config, std::move(init));
}

} // namespace comqel
