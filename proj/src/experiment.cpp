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

#include "comqel/experiment.hpp"

#include "comqel/classical_baseline.hpp"
#include "comqel/error.hpp"
#include "comqel/extremize.hpp"
#include "comqel/rng.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>
#include <tuple>

namespace comqel {

namespace {

constexpr Method kAllMethods[] = {Method::Qel, Method::ComQel, Method::ComQelOnlyAdv,
                                  Method::ComQelNoAdv, Method::ComClassical};

} // namespace

std::string_view to_string(Method m) {
    switch (m) {
    case Method::Qel:
        return "QEL";
    case Method::ComQel:
        return "COM_QEL";
    case Method::ComQelOnlyAdv:
        return "COM_QEL_ONLY_ADV";
    case Method::ComQelNoAdv:
        return "COM_QEL_NO_ADV";
    case Method::ComClassical:
        return "COM_CLASSICAL";
    }
    return "?";
}

std::string_view to_string(AnsatzKind a) { return a == AnsatzKind::Hea ? "HEA" : "QGNN"; }

std::optional<Method> parse_method(std::string_view s) {
    for (Method m : kAllMethods) {
        if (s == to_string(m)) {
            return m;
        }
    }
    return std::nullopt;
}

std::optional<AnsatzKind> parse_ansatz(std::string_view s) {
    if (s == "HEA") {
        return AnsatzKind::Hea;
    }
    if (s == "QGNN") {
        return AnsatzKind::Qgnn;
    }
    return std::nullopt;
}

bool is_quantum(Method m) { return m != Method::ComClassical; }
bool uses_tau(Method m) { return m != Method::Qel; }

PenaltyVariant variant_of(Method m) {
    switch (m) {
    case Method::Qel:
        return PenaltyVariant::QelPlain;
    case Method::ComQel:
    case Method::ComClassical:
        return PenaltyVariant::Full;
    case Method::ComQelOnlyAdv:
        return PenaltyVariant::OnlyAdv;
    case Method::ComQelNoAdv:
        return PenaltyVariant::NoAdv;
    }
    return PenaltyVariant::Full;
}

void ExperimentConfig::validate() const {
    train.validate();
    if (methods.empty()) {
        throw ConfigError("no methods selected");
    }
    if (ansatze.empty()) {
        throw ConfigError("no ansatz selected");
    }
    if (n_seeds < 1) {
        throw ConfigError("n_seeds must be >= 1");
    }
    if (n_points < 2) {
        throw ConfigError("n_points must be >= 2");
    }
    if (std::ranges::any_of(methods, uses_tau) && taus.empty()) {
        throw ConfigError("conservative methods need at least one tau");
    }
    for (double t : taus) {
        if (!(t >= 0.0)) {
            throw ConfigError("tau values must be >= 0");
        }
    }
    const BenchmarkFn fn = benchmark();
    if (std::ranges::find(ansatze, AnsatzKind::Qgnn) != ansatze.end() && !fn.fgm.nontrivial()) {
        throw ConfigError(std::string("QGNN ansatz needs a decomposable objective; ") +
                          std::string(to_string(task)) + " has a single clique");
    }
    for (AnsatzKind a : ansatze) {
        (void)ansatz_spec(a);
    }
    if (std::ranges::find(methods, Method::ComClassical) != methods.end()) {
        (void)classical_hidden();
    }
}

BenchmarkFn ExperimentConfig::benchmark() const { return make_benchmark(task, squared_rosenbrock); }

AnsatzSpec ExperimentConfig::ansatz_spec(AnsatzKind kind) const {
    const BenchmarkFn fn = benchmark();
    const Topology topo = kind == AnsatzKind::Hea ? Topology::Chain : Topology::Clique;
    if (block_sizes.empty()) {
        return AnsatzSpec::even(n_qubits, n_layers, fn.dim, topo, fn.fgm);
    }
    if (block_sizes.size() != static_cast<std::size_t>(fn.dim)) {
        throw ConfigError("block_sizes must list one entry per input variable");
    }
    AnsatzSpec spec(n_layers, block_sizes, topo, fn.fgm);
    if (spec.n_qubits() != n_qubits) {
        throw ConfigError("block_sizes do not sum to n_qubits");
    }
    return spec;
}

int ExperimentConfig::classical_hidden() const {
    return matched_hidden_size(benchmark().dim, param_count(ansatz_spec(AnsatzKind::Hea)));
}

nlohmann::json to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["task"] = std::string(to_string(c.task));
    for (Method m : c.methods) {
        j["methods"].push_back(std::string(to_string(m)));
    }
    for (AnsatzKind a : c.ansatze) {
        j["ansatz"].push_back(std::string(to_string(a)));
    }
    j["n_qubits"] = c.n_qubits;
    j["n_layers"] = c.n_layers;
    j["block_sizes"] = c.block_sizes;
    j["taus"] = c.taus;
    j["n_points"] = c.n_points;
    j["n_seeds"] = c.n_seeds;
    j["first_seed"] = c.first_seed;
    j["squared_rosenbrock"] = c.squared_rosenbrock;
    j["output"] = c.output_dir;
    const TrainConfig& t = c.train;
    const int d = c.benchmark().dim;
    j["train"] = {
        {"t_p", t.t_p},
        {"adv_step", t.resolved_adv_step(d)},
        {"epochs", t.epochs},
        {"primal_lr", t.primal_lr},
        {"dual_lr", t.dual_lr},
        {"alpha_init", t.alpha_init},
        {"extremize_steps", t.extremize_steps},
        {"extremize_lr", t.resolved_extremize_lr(d)},
    };
    return j;
}

namespace {

template <typename T>
void read_if(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key) && !j.at(key).is_null()) {
        out = j.at(key).get<T>();
    }
}

std::vector<std::string> string_list(const nlohmann::json& v) {
    if (v.is_string()) {
        return {v.get<std::string>()};
    }
    return v.get<std::vector<std::string>>();
}

} // namespace

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig c) {
    try {
        read_if(j, "name", c.name);
        if (j.contains("task")) {
            const auto name = j.at("task").get<std::string>();
            const auto id = parse_task(name);
            if (!id) {
                throw ConfigError("unknown task '" + name + "'");
            }
            c.task = *id;
        }
        for (const char* key : {"methods", "method"}) {
            if (j.contains(key)) {
                c.methods.clear();
                for (const auto& s : string_list(j.at(key))) {
                    const auto m = parse_method(s);
                    if (!m) {
                        throw ConfigError("unknown method '" + s + "'");
                    }
                    c.methods.push_back(*m);
                }
            }
        }
        if (j.contains("ansatz")) {
            c.ansatze.clear();
            for (const auto& s : string_list(j.at("ansatz"))) {
                const auto a = parse_ansatz(s);
                if (!a) {
                    throw ConfigError("unknown ansatz '" + s + "'");
                }
                c.ansatze.push_back(*a);
            }
        }
        read_if(j, "n_qubits", c.n_qubits);
        read_if(j, "n_layers", c.n_layers);
        read_if(j, "block_sizes", c.block_sizes);
        if (j.contains("taus") || j.contains("tau")) {
            const auto& v = j.contains("taus") ? j.at("taus") : j.at("tau");
            c.taus = v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
        }
        read_if(j, "n_points", c.n_points);
        read_if(j, "n_seeds", c.n_seeds);
        read_if(j, "first_seed", c.first_seed);
        read_if(j, "squared_rosenbrock", c.squared_rosenbrock);
        read_if(j, "output", c.output_dir);
        read_if(j, "jobs", c.jobs);
        if (j.contains("train")) {
            const auto& t = j.at("train");
            read_if(t, "t_p", c.train.t_p);
            if (t.contains("adv_step") && !t.at("adv_step").is_null()) {
                c.train.adv_step = t.at("adv_step").get<double>();
            }
            read_if(t, "epochs", c.train.epochs);
            read_if(t, "primal_lr", c.train.primal_lr);
            read_if(t, "dual_lr", c.train.dual_lr);
            read_if(t, "alpha_init", c.train.alpha_init);
            read_if(t, "extremize_steps", c.train.extremize_steps);
            if (t.contains("extremize_lr") && !t.at("extremize_lr").is_null()) {
                c.train.extremize_lr = t.at("extremize_lr").get<double>();
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return c;
}

std::optional<ExperimentConfig> preset(std::string_view name) {
    ExperimentConfig c;
    c.name = std::string(name);
    if (name == "cosine2d") {
        c.task = TaskId::Cosine2D;
        c.methods = {Method::ComClassical, Method::Qel, Method::ComQel};
        c.n_qubits = 4;
        c.n_layers = 3;
        c.taus = {0.05, 0.1, 1.0};
        c.n_points = 20;
        c.n_seeds = 100;
    } else if (name == "ackley1d") {
        c.task = TaskId::Ackley1D;
        c.methods = {Method::ComClassical, Method::Qel, Method::ComQel, Method::ComQelOnlyAdv,
                     Method::ComQelNoAdv};
        c.n_qubits = 3;
        c.n_layers = 3;
        c.taus = {0.1};
        c.n_points = 10;
        c.n_seeds = 100;
    } else if (name == "structured3d") {
        c.task = TaskId::Structured3D;
        c.methods = {Method::ComClassical, Method::ComQel};
        c.ansatze = {AnsatzKind::Hea, AnsatzKind::Qgnn};
        c.n_qubits = 6;
        c.n_layers = 6;
        c.taus = {0.1};
        c.n_points = 30;
        c.n_seeds = 50;
    } else {
        return std::nullopt;
    }
    c.output_dir = "results/" + c.name;
    return c;
}

std::string RunSpec::ansatz_label() const {
    return is_quantum(method) ? std::string(to_string(ansatz)) : std::string("MLP");
}

std::vector<RunSpec> plan_runs(const ExperimentConfig& config) {
    std::vector<RunSpec> runs;
    for (int s = 0; s < config.n_seeds; ++s) {
        const std::uint64_t seed = config.first_seed + static_cast<std::uint64_t>(s);
        for (Method m : kAllMethods) {
            if (std::ranges::find(config.methods, m) == config.methods.end()) {
                continue;
            }
            std::vector<std::optional<double>> taus;
            if (uses_tau(m)) {
                std::vector<double> sorted = config.taus;
                std::ranges::sort(sorted);
                const auto [first, last] = std::ranges::unique(sorted);
                sorted.erase(first, last);
                taus.assign(sorted.begin(), sorted.end());
            } else {
                taus.emplace_back(std::nullopt);
            }
            for (const auto& tau : taus) {
                if (is_quantum(m)) {
                    for (AnsatzKind a : config.ansatze) {
                        runs.push_back({seed, m, tau, a});
                    }
                } else {
                    runs.push_back({seed, m, tau, AnsatzKind::Hea});
                }
            }
        }
    }
    return runs;
}

RunResult execute_run(const ExperimentConfig& config, const RunSpec& run) {
    const auto start = std::chrono::steady_clock::now();
    RunResult r;
    r.seed = run.seed;
    r.method = run.method;
    r.tau = run.tau;
    r.ansatz = run.ansatz_label();

    try {
        const BenchmarkFn fn = config.benchmark();
        const Dataset data = sample_dataset(fn, config.n_points, derive_seed(run.seed, kDatasetStream));

        TrainConfig tc = config.train;
        tc.variant = variant_of(run.method);
        tc.tau = run.tau.value_or(0.0);
        tc.seed = derive_seed(run.seed, kInitStream);

        std::unique_ptr<SurrogateModel> model;
        if (is_quantum(run.method)) {
            model = std::make_unique<QuantumSurrogate>(config.ansatz_spec(run.ansatz));
        } else {
            model = std::make_unique<MlpSurrogate>(fn.dim, config.classical_hidden());
        }

        TrainResult tr = train_surrogate(*model, data, tc);
        r.trace = tr.trace;
        r.final_mse = tr.trace.back().mse;
        r.final_c = tr.trace.back().penalty;
        r.final_alpha = tr.dual.alpha;

        const auto [x_max, y_max] = best_in_dataset(data);
        (void)y_max;
        const auto params = tr.params;
        const AscentTrace ascent = ascend(
            [&model, &params](std::span<const double> x, std::span<double> g) {
                bool clamped = false;
                return model->value_and_input_grad(params, x, g, clamped);
            },
            x_max, tc.extremize_steps, tc.resolved_extremize_lr(fn.dim));
        r.x_hat = ascent.final_point();
        r.f_true = fn(r.x_hat);
        const Metrics m = evaluate_metrics(fn, r.x_hat, data);
        r.usefulness = m.usefulness;
        r.novelty = m.novelty;
    } catch (const TrainingAborted& e) {
        r.trace = e.trace();
        r.error = e.what();
    } catch (const std::exception& e) {
        r.error = e.what();
    }

    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    r.wall_ms = elapsed.count();
    return r;
}

bool result_order(const RunResult& a, const RunResult& b) {
    // tau: "none" sorts before any value
    const auto key = [](const RunResult& r) {
        return std::make_tuple(r.seed, static_cast<int>(r.method), r.tau.has_value(),
                               r.tau.value_or(0.0), r.ansatz);
    };
    return key(a) < key(b);
}

std::vector<RunResult> run_experiment(const ExperimentConfig& config, const ProgressFn& progress) {
    config.validate();
    const std::vector<RunSpec> runs = plan_runs(config);
    std::vector<RunResult> results(runs.size());

    unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                    : std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(runs.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::size_t finished = 0;
    std::mutex progress_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < runs.size(); i = next++) {
            results[i] = execute_run(config, runs[i]);
            if (progress) {
                const std::scoped_lock lock(progress_mutex);
                progress(++finished, runs.size(), results[i]);
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
    }

    std::ranges::stable_sort(results, result_order);
    return results;
}

Quantiles quantiles(std::vector<double> values) {
    if (values.empty()) {
        throw UsageError("quantiles of an empty sample");
    }
    std::ranges::sort(values);
    const auto at = [&values](double p) {
        const double pos = p * static_cast<double>(values.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return values[lo] + frac * (values[hi] - values[lo]);
    };
    return {values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

std::vector<SummaryRow> summarize(const std::vector<RunResult>& results) {
    std::vector<const RunResult*> ok;
    for (const RunResult& r : results) {
        if (r.ok()) {
            ok.push_back(&r);
        }
    }
    if (ok.empty()) {
        throw UsageError("no successful runs to summarize");
    }
    const auto group = [](const RunResult& r) {
        return std::make_tuple(static_cast<int>(r.method), r.tau.has_value(), r.tau.value_or(0.0),
                               r.ansatz);
    };
    std::ranges::stable_sort(ok, [&](const RunResult* a, const RunResult* b) { return group(*a) < group(*b); });

    std::vector<SummaryRow> rows;
    std::size_t i = 0;
    while (i < ok.size()) {
        std::size_t j = i;
        std::vector<double> use;
        std::vector<double> nov;
        while (j < ok.size() && group(*ok[j]) == group(*ok[i])) {
            use.push_back(ok[j]->usefulness);
            nov.push_back(ok[j]->novelty);
            ++j;
        }
        rows.push_back({ok[i]->method, ok[i]->tau, ok[i]->ansatz, use.size(), quantiles(use),
                        quantiles(nov)});
        i = j;
    }
    return rows;
}

} // namespace comqel
