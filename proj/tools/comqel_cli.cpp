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

// comqel command-line driver.
//
//   comqel run       --preset cosine2d --seeds 30 --out results/cosine
//   comqel summarize --in results/cosine/results.csv
//   comqel replay    --run-dir results/cosine --seed 3
//   comqel verify    --run-dir results/cosine
//   comqel dataset   --task ACKLEY1D --n-points 10 --seed 0

#include "comqel/benchmarks.hpp"
#include "comqel/error.hpp"
#include "comqel/experiment.hpp"
#include "comqel/results_io.hpp"
#include "comqel/rng.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

namespace fs = std::filesystem;
using namespace comqel;

namespace {

struct RunOptions {
    std::string config_file;
    std::string preset_name;
    std::string task;
    std::vector<std::string> methods;
    std::vector<std::string> ansatze;
    std::vector<double> taus;
    int n_points{0};
    int seeds{0};
    long long first_seed{-1};
    int epochs{0};
    std::string out;
    int jobs{-1};
};

ExperimentConfig resolve_config(const RunOptions& o) {
    ExperimentConfig c;
    if (!o.preset_name.empty()) {
        auto p = preset(o.preset_name);
        if (!p) {
            throw ConfigError("unknown preset '" + o.preset_name + "'");
        }
        c = *p;
    }
    if (!o.config_file.empty()) {
        std::ifstream f(o.config_file);
        if (!f) {
            throw ConfigError("cannot open config " + o.config_file);
        }
        nlohmann::json j;
        try {
            f >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(o.config_file + ": " + e.what());
        }
        c = config_from_json(j, c);
    }
    // flags override file values
    nlohmann::json overrides = nlohmann::json::object();
    if (!o.task.empty()) {
        overrides["task"] = o.task;
    }
    if (!o.methods.empty()) {
        overrides["methods"] = o.methods;
    }
    if (!o.ansatze.empty()) {
        overrides["ansatz"] = o.ansatze;
    }
    if (!o.taus.empty()) {
        overrides["taus"] = o.taus;
    }
    if (o.n_points > 0) {
        overrides["n_points"] = o.n_points;
    }
    if (o.seeds > 0) {
        overrides["n_seeds"] = o.seeds;
    }
    if (o.first_seed >= 0) {
        overrides["first_seed"] = static_cast<std::uint64_t>(o.first_seed);
    }
    if (o.epochs > 0) {
        overrides["train"]["epochs"] = o.epochs;
    }
    if (!o.out.empty()) {
        overrides["output"] = o.out;
    }
    if (o.jobs >= 0) {
        overrides["jobs"] = o.jobs;
    }
    c = config_from_json(overrides, c);
    c.validate();
    return c;
}

// Console form; files keep the full 17-digit value.
std::string display_tau(const std::optional<double>& tau) {
    return tau ? fmt::format("{:g}", *tau) : "none";
}

void print_summary(const std::vector<SummaryRow>& rows) {
    fmt::print("{:<18} {:>6} {:>5} {:>4} | {:>9} {:>9} {:>9} | {:>9} {:>9} {:>9}\n", "method", "tau",
               "arch", "n", "U min", "U median", "U max", "N min", "N median", "N max");
    for (const auto& r : rows) {
        fmt::print("{:<18} {:>6} {:>5} {:>4} | {:>9.4f} {:>9.4f} {:>9.4f} | {:>9.4f} {:>9.4f} {:>9.4f}\n",
                   to_string(r.method), display_tau(r.tau), r.ansatz, r.count, r.usefulness.min,
                   r.usefulness.median, r.usefulness.max, r.novelty.min, r.novelty.median,
                   r.novelty.max);
    }
}

int cmd_run(const RunOptions& o) {
    const ExperimentConfig config = resolve_config(o);
    spdlog::info("{}: {}, {} qubits, {} seeds -> {}", config.name, to_string(config.task),
                 config.n_qubits, config.n_seeds, config.output_dir);
    const auto results = run_experiment(config, [](std::size_t done, std::size_t total,
                                                   const RunResult& r) {
        if (r.ok()) {
            spdlog::info("[{}/{}] seed {} {} tau={} {}: U={:.4f} N={:.4f} ({:.0f} ms)", done, total,
                         r.seed, to_string(r.method), display_tau(r.tau), r.ansatz, r.usefulness,
                         r.novelty, r.wall_ms);
        } else {
            spdlog::error("[{}/{}] seed {} {} tau={} {} aborted: {}", done, total, r.seed,
                          to_string(r.method), display_tau(r.tau), r.ansatz, r.error);
        }
    });
    write_experiment(config.output_dir, config, results);
    const bool any_ok = std::ranges::any_of(results, [](const RunResult& r) { return r.ok(); });
    if (any_ok) {
        print_summary(summarize(results));
    }
    const auto failed = std::ranges::count_if(results, [](const RunResult& r) { return !r.ok(); });
    if (failed > 0) {
        spdlog::error("{} of {} runs aborted; see {}/errors.csv", failed, results.size(),
                      config.output_dir);
        return 1;
    }
    return 0;
}

std::vector<RunResult> load_results(const fs::path& file) {
    std::ifstream f(file);
    if (!f) {
        throw ConfigError("cannot open " + file.string());
    }
    return read_results_csv(f);
}

ExperimentConfig load_run_config(const fs::path& dir) {
    std::ifstream f(dir / "metadata.json");
    if (!f) {
        throw ConfigError("cannot open " + (dir / "metadata.json").string());
    }
    nlohmann::json meta;
    f >> meta;
    ExperimentConfig c = config_from_json(meta.at("config"));
    c.validate();
    return c;
}

int cmd_summarize(const std::string& in, const std::string& out) {
    const auto rows = summarize(load_results(in));
    print_summary(rows);
    if (!out.empty()) {
        std::ofstream f(out);
        write_summary_csv(f, rows);
    }
    return 0;
}

int cmd_replay(const std::string& dir, long long seed) {
    const ExperimentConfig config = load_run_config(dir);
    const auto stored = load_results(fs::path(dir) / "results.csv");
    int mismatches = 0;
    int compared = 0;
    for (const RunSpec& spec : plan_runs(config)) {
        if (seed >= 0 && spec.seed != static_cast<std::uint64_t>(seed)) {
            continue;
        }
        const RunResult fresh = execute_run(config, spec);
        const std::string row = format_result_row(fresh, false);
        const auto it = std::ranges::find_if(stored, [&](const RunResult& r) {
            return r.seed == fresh.seed && r.method == fresh.method && r.tau == fresh.tau &&
                   r.ansatz == fresh.ansatz;
        });
        ++compared;
        if (it == stored.end()) {
            fmt::print("MISSING  {}\n", row);
            ++mismatches;
        } else if (format_result_row(*it, false) != row) {
            fmt::print("MISMATCH stored {}\n         replay {}\n", format_result_row(*it, false), row);
            ++mismatches;
        } else {
            fmt::print("OK       {}\n", row);
        }
    }
    fmt::print("{} of {} rows reproduced\n", compared - mismatches, compared);
    return mismatches == 0 && compared > 0 ? 0 : 1;
}

int cmd_verify(const std::string& dir) {
    const ExperimentConfig config = load_run_config(dir);
    const BenchmarkFn fn = config.benchmark();
    int bad = 0;
    const auto stored = load_results(fs::path(dir) / "results.csv");
    for (const RunResult& r : stored) {
        const Dataset data = sample_dataset(fn, config.n_points, derive_seed(r.seed, kDatasetStream));
        const Metrics m = evaluate_metrics(fn, r.x_hat, data);
        if (format_double(m.usefulness) != format_double(r.usefulness) ||
            format_double(m.novelty) != format_double(r.novelty) ||
            format_double(fn(r.x_hat)) != format_double(r.f_true)) {
            fmt::print("seed {} {} tau={} {}: stored U={} N={}, recomputed U={} N={}\n", r.seed,
                       to_string(r.method), display_tau(r.tau), r.ansatz, r.usefulness, r.novelty,
                       m.usefulness, m.novelty);
            ++bad;
        }
    }
    fmt::print("{} of {} rows verified\n", stored.size() - static_cast<std::size_t>(bad), stored.size());
    return bad == 0 ? 0 : 1;
}

int cmd_dataset(const std::string& task, int n_points, std::uint64_t seed, const std::string& out) {
    const auto id = parse_task(task);
    if (!id) {
        throw ConfigError("unknown task '" + task + "'");
    }
    const Dataset d = sample_dataset(make_benchmark(*id), n_points, derive_seed(seed, kDatasetStream));
    if (out.empty()) {
        write_dataset_table(std::cout, d);
    } else {
        std::ofstream f(out);
        write_dataset_table(f, d);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    spdlog::set_default_logger(spdlog::stderr_color_mt("comqel"));

    CLI::App app{"Conservative quantum extremal learning: offline model-based optimization "
                 "with variational-circuit surrogates"};
    app.require_subcommand(1);

    RunOptions ro;
    auto* run = app.add_subcommand("run", "run a multi-seed experiment sweep");
    run->add_option("--config", ro.config_file, "JSON experiment config")->check(CLI::ExistingFile);
    run->add_option("--preset", ro.preset_name, "cosine2d | ackley1d | structured3d");
    run->add_option("--task", ro.task, "COSINE2D | ACKLEY1D | STRUCTURED3D");
    run->add_option("--method", ro.methods,
                    "QEL | COM_QEL | COM_QEL_ONLY_ADV | COM_QEL_NO_ADV | COM_CLASSICAL (repeatable)")
        ->delimiter(',');
    run->add_option("--ansatz", ro.ansatze, "HEA | QGNN (repeatable)")->delimiter(',');
    run->add_option("--tau", ro.taus, "constraint slack(s)")->delimiter(',');
    run->add_option("--n-points", ro.n_points, "dataset size N");
    run->add_option("--seeds", ro.seeds, "number of seeds");
    run->add_option("--first-seed", ro.first_seed, "first seed");
    run->add_option("--epochs", ro.epochs, "training epochs");
    run->add_option("--out", ro.out, "output directory");
    run->add_option("--jobs", ro.jobs, "worker threads (0 = all cores)");

    std::string sum_in;
    std::string sum_out;
    auto* sum = app.add_subcommand("summarize", "quantile table of a results.csv");
    sum->add_option("--in", sum_in, "results.csv")->required()->check(CLI::ExistingFile);
    sum->add_option("--out", sum_out, "write summary CSV here");

    std::string run_dir;
    long long replay_seed = -1;
    auto* rep = app.add_subcommand("replay", "re-run stored runs and compare rows bit-exactly");
    rep->add_option("--run-dir", run_dir, "experiment output directory")->required();
    rep->add_option("--seed", replay_seed, "only this seed (default: all)");

    auto* ver = app.add_subcommand("verify", "recompute metrics from stored solutions");
    ver->add_option("--run-dir", run_dir, "experiment output directory")->required();

    std::string ds_task;
    int ds_points = 20;
    std::uint64_t ds_seed = 0;
    std::string ds_out;
    auto* ds = app.add_subcommand("dataset", "export the dataset a seed generates");
    ds->add_option("--task", ds_task, "benchmark id")->required();
    ds->add_option("--n-points", ds_points, "dataset size N");
    ds->add_option("--seed", ds_seed, "experiment seed");
    ds->add_option("--out", ds_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            return cmd_run(ro);
        }
        if (*sum) {
            return cmd_summarize(sum_in, sum_out);
        }
        if (*rep) {
            return cmd_replay(run_dir, replay_seed);
        }
        if (*ver) {
            return cmd_verify(run_dir);
        }
        if (*ds) {
            return cmd_dataset(ds_task, ds_points, ds_seed, ds_out);
        }
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return 2;
    }
    return 0;
}
