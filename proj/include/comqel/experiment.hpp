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
 * Multi-seed experiment sweeps over methods, constraint slacks and circuit
 * topologies.
 */
#pragma once

#include "comqel/ansatz.hpp"
#include "comqel/benchmarks.hpp"
#include "comqel/training.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace comqel {

enum class Method { Qel, ComQel, ComQelOnlyAdv, ComQelNoAdv, ComClassical };
enum class AnsatzKind { Hea, Qgnn };

std::string_view to_string(Method m);
std::string_view to_string(AnsatzKind a);
std::optional<Method> parse_method(std::string_view s);
std::optional<AnsatzKind> parse_ansatz(std::string_view s);

[[nodiscard]] bool is_quantum(Method m);
[[nodiscard]] bool uses_tau(Method m);
[[nodiscard]] PenaltyVariant variant_of(Method m);

/// Sub-stream indices of an experiment seed.
inline constexpr std::uint64_t kDatasetStream = 0;
inline constexpr std::uint64_t kInitStream = 1;

struct ExperimentConfig {
    std::string name{"experiment"};
    TaskId task{TaskId::Cosine2D};
    std::vector<Method> methods{Method::Qel, Method::ComQel};
    std::vector<AnsatzKind> ansatze{AnsatzKind::Hea};
    int n_qubits{4};
    int n_layers{3};
    std::vector<int> block_sizes; ///< qubits per variable; empty = even split
    std::vector<double> taus{0.1};
    int n_points{20};
    int n_seeds{1};
    std::uint64_t first_seed{0};
    TrainConfig train;
    bool squared_rosenbrock{false};
    std::string output_dir{"results"};
    int jobs{0}; ///< 0 = hardware concurrency

    /// Throws ConfigError.
    void validate() const;

    [[nodiscard]] BenchmarkFn benchmark() const;
    [[nodiscard]] AnsatzSpec ansatz_spec(AnsatzKind kind) const;
    /// Hidden width of the classical baseline, matched to the circuit.
    [[nodiscard]] int classical_hidden() const;
};

nlohmann::json to_json(const ExperimentConfig& c);
/// Missing keys keep their defaults. Throws ConfigError on bad values.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});

/// Built-in sweeps mirroring the three benchmark studies: "cosine2d",
/// "ackley1d", "structured3d".
std::optional<ExperimentConfig> preset(std::string_view name);

struct RunSpec {
    std::uint64_t seed{0};
    Method method{Method::Qel};
    std::optional<double> tau;
    AnsatzKind ansatz{AnsatzKind::Hea};

    /// "HEA", "QGNN" or "MLP" for the classical baseline.
    [[nodiscard]] std::string ansatz_label() const;
};

struct RunResult {
    std::uint64_t seed{0};
    Method method{Method::Qel};
    std::optional<double> tau;
    std::string ansatz;
    std::vector<double> x_hat;
    double f_true{0.0};
    double usefulness{0.0};
    double novelty{0.0};
    double final_mse{0.0};
    double final_c{0.0};
    double final_alpha{0.0};
    double wall_ms{0.0};
    std::vector<EpochRecord> trace;
    std::string error; ///< non-empty when the run aborted

    [[nodiscard]] bool ok() const { return error.empty(); }
};

/// Every (seed, method, tau, ansatz) combination in output order.
std::vector<RunSpec> plan_runs(const ExperimentConfig& config);

/// Sample the seed's dataset, train, extremize from the best point and score
/// with the true objective. Errors are captured in RunResult::error.
RunResult execute_run(const ExperimentConfig& config, const RunSpec& run);

/// Progress callback: (finished, total, latest result).
using ProgressFn = std::function<void(std::size_t, std::size_t, const RunResult&)>;

/// All planned runs, possibly in parallel; output sorted by (seed, method, tau, ansatz).
std::vector<RunResult> run_experiment(const ExperimentConfig& config, const ProgressFn& progress = {});

/// Strict weak order used for result rows.
bool result_order(const RunResult& a, const RunResult& b);

struct Quantiles {
    double min{0.0};
    double q25{0.0};
    double median{0.0};
    double q75{0.0};
    double max{0.0};
};

/// Linear-interpolation quantiles. Throws UsageError on empty input.
Quantiles quantiles(std::vector<double> values);

struct SummaryRow {
    Method method{Method::Qel};
    std::optional<double> tau;
    std::string ansatz;
    std::size_t count{0};
    Quantiles usefulness;
    Quantiles novelty;
};

/// One row per (method, tau, ansatz) over successful runs.
std::vector<SummaryRow> summarize(const std::vector<RunResult>& results);

} // namespace comqel
