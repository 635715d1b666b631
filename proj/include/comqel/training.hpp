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
 * Surrogate training: plain mean-squared-error regression and conservative
 * training by dual gradient descent-ascent on
 *
 *     L(theta, alpha) = MSE(theta) + alpha * C(theta),
 *     C = mean f(adversarial) - mean f(data) - tau,
 *
 * where the adversarial points are dataset inputs pushed uphill by a few
 * reflective ascent steps on the current surrogate.
 */
#pragma once

#include "comqel/ansatz.hpp"
#include "comqel/dataset.hpp"
#include "comqel/error.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace comqel {

/// Any differentiable model f(params, x) that the training loop can fit.
class SurrogateModel {
  public:
    virtual ~SurrogateModel() = default;

    [[nodiscard]] virtual std::size_t param_count() const = 0;
    [[nodiscard]] virtual int input_dim() const = 0;

    virtual double value(std::span<const double> params, std::span<const double> x) const = 0;

    /// Returns f and writes df/dparams into `grad`.
    virtual double value_and_param_grad(std::span<const double> params, std::span<const double> x,
                                        std::span<double> grad) const = 0;

    /// Returns f and writes df/dx into `grad`. Sets `clamped` if the model had
    /// to move x to differentiate it.
    virtual double value_and_input_grad(std::span<const double> params, std::span<const double> x,
                                        std::span<double> grad, bool& clamped) const = 0;

    [[nodiscard]] virtual std::vector<double> initial_params(std::uint64_t seed) const = 0;
};

/// The data re-uploading circuit as a trainable model.
class QuantumSurrogate final : public SurrogateModel {
  public:
    explicit QuantumSurrogate(AnsatzSpec spec) : spec_(std::move(spec)) {}

    [[nodiscard]] const AnsatzSpec& spec() const { return spec_; }

    [[nodiscard]] std::size_t param_count() const override;
    [[nodiscard]] int input_dim() const override { return spec_.input_dim(); }
    double value(std::span<const double> params, std::span<const double> x) const override;
    double value_and_param_grad(std::span<const double> params, std::span<const double> x,
                                std::span<double> grad) const override;
    double value_and_input_grad(std::span<const double> params, std::span<const double> x,
                                std::span<double> grad, bool& clamped) const override;
    /// Angles uniform on [-pi, pi].
    [[nodiscard]] std::vector<double> initial_params(std::uint64_t seed) const override;

  private:
    AnsatzSpec spec_;
};

enum class PenaltyVariant {
    Full,     ///< mean f(adv) - mean f(data) - tau
    OnlyAdv,  ///< mean f(adv) - tau
    NoAdv,    ///< -mean f(data) - tau
    QelPlain, ///< no constraint
};

std::string_view to_string(PenaltyVariant v);

struct TrainConfig {
    double tau{0.1};                    ///< constraint slack, scaled-target units
    int t_p{1};                         ///< adversarial ascent steps
    std::optional<double> adv_step;     ///< default 0.05 sqrt(d)
    int epochs{100};
    double primal_lr{0.05};             ///< Adam
    double dual_lr{0.01};
    double alpha_init{0.0};
    PenaltyVariant variant{PenaltyVariant::Full};
    int extremize_steps{100};
    std::optional<double> extremize_lr; ///< default 0.05 sqrt(d)
    std::uint64_t seed{0};              ///< parameter initialization stream

    [[nodiscard]] double resolved_adv_step(int dim) const;
    [[nodiscard]] double resolved_extremize_lr(int dim) const;

    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

struct DualState {
    double alpha{0.0};

    /// alpha <- max(0, alpha + lr * violation)
    void ascend(double violation, double lr);
};

struct EpochRecord {
    int epoch{0};
    double mse{0.0};
    double penalty{0.0}; ///< C under the configured variant; NaN for plain training
    double alpha{0.0};   ///< after this epoch's dual step
    double wall_ms{0.0};
};

struct TrainResult {
    std::vector<double> params;
    DualState dual;
    std::vector<EpochRecord> trace;
    std::size_t clamped_input_grads{0};
};

/// Raised when the loss, gradient or multiplier becomes non-finite.
class TrainingAborted : public NumericalError {
  public:
    TrainingAborted(const std::string& what, std::vector<EpochRecord> trace)
        : NumericalError(what), trace_(std::move(trace)) {}
    [[nodiscard]] const std::vector<EpochRecord>& trace() const { return trace_; }

  private:
    std::vector<EpochRecord> trace_;
};

struct AdamState {
    explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}

    std::vector<double> m;
    std::vector<double> v;
    long long step{0};
    double beta1{0.9};
    double beta2{0.999};
    double eps{1e-8};
};

/// One bias-corrected Adam update of `params` (minimization).
void adam_step(AdamState& state, std::span<double> params, std::span<const double> grads, double lr);

double mse_loss(const SurrogateModel& model, std::span<const double> params, const Dataset& data);
double mse_loss(const AnsatzSpec& spec, std::span<const double> theta, const Dataset& data);

/// t_p reflective ascent steps of size adv_step from every dataset input.
std::vector<std::vector<double>> generate_adversarial(const SurrogateModel& model,
                                                      std::span<const double> params,
                                                      const Dataset& data, const TrainConfig& config);
std::vector<std::vector<double>> generate_adversarial(const AnsatzSpec& spec,
                                                      std::span<const double> theta,
                                                      const Dataset& data, const TrainConfig& config);

/// Constraint value from precomputed surrogate outputs.
double penalty_from_values(std::span<const double> f_adv, std::span<const double> f_data,
                           double tau, PenaltyVariant variant = PenaltyVariant::Full);

/// mean f(adv) - mean f(data) - tau.
double com_penalty(const SurrogateModel& model, std::span<const double> params, const Dataset& data,
                   const std::vector<std::vector<double>>& adv, double tau);
double com_penalty(const AnsatzSpec& spec, std::span<const double> theta, const Dataset& data,
                   const std::vector<std::vector<double>>& adv, double tau);

struct LagrangianEval {
    double mse{0.0};
    double penalty{0.0};
    std::vector<double> grad; ///< d/dparams of [mse] + alpha * C
};

/// Value and gradient of the Lagrangian with the adversarial set held fixed.
/// The alpha * C gradient is skipped entirely when alpha == 0.
LagrangianEval lagrangian(const SurrogateModel& model, std::span<const double> params,
                          const Dataset& data, const std::vector<std::vector<double>>& adv,
                          double alpha, double tau, PenaltyVariant variant, bool include_mse = true);

/// The shared training loop. Plain regression when config.variant is
/// QelPlain, otherwise dual descent-ascent. Starts from `init` when given,
/// else from model.initial_params(config.seed).
TrainResult train_surrogate(const SurrogateModel& model, const Dataset& data,
                            const TrainConfig& config,
                            std::optional<std::vector<double>> init = std::nullopt);

/// Requires variant == QelPlain.
TrainResult train_qel(const AnsatzSpec& spec, const Dataset& data, const TrainConfig& config,
                      std::optional<std::vector<double>> init = std::nullopt);

/// Requires variant in {Full, OnlyAdv, NoAdv}.
TrainResult train_com_qel(const AnsatzSpec& spec, const Dataset& data, const TrainConfig& config,
                          std::optional<std::vector<double>> init = std::nullopt);

} // namespace comqel
