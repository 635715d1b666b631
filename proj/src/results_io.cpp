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

#include "comqel/results_io.hpp"

#include "comqel/error.hpp"
#include "comqel/rng.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#ifndef COMQEL_VERSION
#define COMQEL_VERSION "unknown"
#endif

namespace comqel {

namespace {

constexpr std::size_t kLeadingColumns = 4;  // seed,method,tau,ansatz
constexpr std::size_t kTrailingColumns = 7; // f_true .. wall_ms

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw ConfigError("not a number in results file: '" + s + "'");
    }
    return v;
}

} // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::string format_tau(const std::optional<double>& tau) {
    return tau ? format_double(*tau) : std::string("none");
}

std::vector<std::string> results_header(int dim) {
    std::vector<std::string> h{"seed", "method", "tau", "ansatz"};
    for (int k = 0; k < dim; ++k) {
        h.push_back("x_hat_" + std::to_string(k));
    }
    for (const char* c : {"f_true", "usefulness", "novelty", "final_mse", "final_C", "final_alpha",
                          "wall_ms"}) {
        h.emplace_back(c);
    }
    return h;
}

std::string format_result_row(const RunResult& r, bool with_wall_time) {
    std::string row = fmt::format("{},{},{},{}", r.seed, to_string(r.method), format_tau(r.tau), r.ansatz);
    for (double v : r.x_hat) {
        row += ',' + format_double(v);
    }
    for (double v : {r.f_true, r.usefulness, r.novelty, r.final_mse, r.final_c, r.final_alpha}) {
        row += ',' + format_double(v);
    }
    if (with_wall_time) {
        row += ',' + format_double(r.wall_ms);
    }
    return row;
}

void write_results_csv(std::ostream& os, const std::vector<RunResult>& results, int dim) {
    const auto header = results_header(dim);
    os << fmt::format("{}\n", fmt::join(header, ","));
    for (const RunResult& r : results) {
        if (r.ok()) {
            os << format_result_row(r) << '\n';
        }
    }
}

std::vector<RunResult> read_results_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw ConfigError("results file is empty");
    }
    const auto header = split_csv(line);
    if (header.size() < kLeadingColumns + kTrailingColumns + 1) {
        throw ConfigError("results header too short");
    }
    const int dim = static_cast<int>(header.size() - kLeadingColumns - kTrailingColumns);
    if (header != results_header(dim)) {
        throw ConfigError("unexpected results header: " + line);
    }

    std::vector<RunResult> out;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv(line);
        if (f.size() != header.size()) {
            throw ConfigError("results row has " + std::to_string(f.size()) + " fields, expected " +
                              std::to_string(header.size()));
        }
        RunResult r;
        r.seed = std::stoull(f[0]);
        const auto m = parse_method(f[1]);
        if (!m) {
            throw ConfigError("unknown method in results: " + f[1]);
        }
        r.method = *m;
        if (f[2] != "none") {
            r.tau = parse_double(f[2]);
        }
        r.ansatz = f[3];
        std::size_t c = kLeadingColumns;
        for (int k = 0; k < dim; ++k) {
            r.x_hat.push_back(parse_double(f[c++]));
        }
        r.f_true = parse_double(f[c++]);
        r.usefulness = parse_double(f[c++]);
        r.novelty = parse_double(f[c++]);
        r.final_mse = parse_double(f[c++]);
        r.final_c = parse_double(f[c++]);
        r.final_alpha = parse_double(f[c++]);
        r.wall_ms = parse_double(f[c]);
        out.push_back(std::move(r));
    }
    return out;
}

void write_traces_csv(std::ostream& os, const std::vector<RunResult>& results) {
    os << "seed,method,tau,ansatz,epoch,mse,C,alpha,wall_ms\n";
    for (const RunResult& r : results) {
        for (const EpochRecord& e : r.trace) {
            os << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.seed, to_string(r.method),
                              format_tau(r.tau), r.ansatz, e.epoch, format_double(e.mse),
                              format_double(e.penalty), format_double(e.alpha),
                              format_double(e.wall_ms));
        }
    }
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
    os << "method,tau,ansatz,count";
    for (const char* metric : {"usefulness", "novelty"}) {
        for (const char* q : {"min", "q25", "median", "q75", "max"}) {
            os << ',' << metric << '_' << q;
        }
    }
    os << '\n';
    for (const SummaryRow& s : rows) {
        os << fmt::format("{},{},{},{}", to_string(s.method), format_tau(s.tau), s.ansatz, s.count);
        for (const Quantiles& q : {s.usefulness, s.novelty}) {
            for (double v : {q.min, q.q25, q.median, q.q75, q.max}) {
                os << ',' << format_double(v);
            }
        }
        os << '\n';
    }
}

void write_errors_csv(std::ostream& os, const std::vector<RunResult>& results) {
    os << "seed,method,tau,ansatz,error\n";
    for (const RunResult& r : results) {
        if (!r.ok()) {
            std::string msg = r.error;
            for (char& ch : msg) {
                if (ch == ',' || ch == '\n') {
                    ch = ';';
                }
            }
            os << fmt::format("{},{},{},{},{}\n", r.seed, to_string(r.method), format_tau(r.tau),
                              r.ansatz, msg);
        }
    }
}

nlohmann::json run_metadata(const ExperimentConfig& config) {
    nlohmann::json meta;
    meta["config"] = to_json(config);
    meta["code_version"] = COMQEL_VERSION;
    meta["rng"] = std::string(kRngAlgorithm);
    meta["dataset_stream"] = kDatasetStream;
    meta["init_stream"] = kInitStream;
    meta["decisions"] = {
        {"target_scaling", "min-max to [-1, 1]; tau in scaled units"},
        {"quantum_init", "angles uniform on [-pi, pi]"},
        {"classical_net", "one tanh hidden layer, uniform +-1/sqrt(fan_in) init, hidden width " +
                              std::to_string(config.classical_hidden())},
        {"adversarial_refresh", "every epoch, held fixed in the primal gradient"},
        {"input_grad_clamp", "|x| clamped to 1 - 1e-7"},
        {"solution", "final ascent iterate"},
    };
    return meta;
}

void write_experiment(const std::filesystem::path& dir, const ExperimentConfig& config,
                      const std::vector<RunResult>& results) {
    std::filesystem::create_directories(dir);
    const auto open = [&dir](const char* name) {
        std::ofstream f(dir / name);
        if (!f) {
            throw ConfigError("cannot write " + (dir / name).string());
        }
        return f;
    };
    {
        auto f = open("results.csv");
        write_results_csv(f, results, config.benchmark().dim);
    }
    {
        auto f = open("traces.csv");
        write_traces_csv(f, results);
    }
    {
        auto f = open("metadata.json");
        f << run_metadata(config).dump(2) << '\n';
    }
    const bool any_ok = std::ranges::any_of(results, [](const RunResult& r) { return r.ok(); });
    if (any_ok) {
        auto f = open("summary.csv");
        write_summary_csv(f, summarize(results));
    }
    const bool any_failed = std::ranges::any_of(results, [](const RunResult& r) { return !r.ok(); });
    std::filesystem::remove(dir / "errors.csv");
    if (any_failed) {
        auto f = open("errors.csv");
        write_errors_csv(f, results);
    }
}

} // namespace comqel
