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

#include "comqel/benchmarks.hpp"

#include "comqel/error.hpp"
#include "comqel/rng.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace comqel {

std::string_view to_string(TaskId id) {
    switch (id) {
    case TaskId::Cosine2D:
        return "COSINE2D";
    case TaskId::Ackley1D:
        return "ACKLEY1D";
    case TaskId::Structured3D:
        return "STRUCTURED3D";
    }
    return "?";
}

std::optional<TaskId> parse_task(std::string_view name) {
    for (TaskId id : {TaskId::Cosine2D, TaskId::Ackley1D, TaskId::Structured3D}) {
        if (name == to_string(id)) {
            return id;
        }
    }
    return std::nullopt;
}

double cosine2d(std::span<const double> x) {
    if (x.size() != 2) {
        throw UsageError("cosine2d takes a 2-vector");
    }
    double acc = 0.0;
    for (double v : x) {
        acc += std::cos(2 * std::numbers::pi * v) * (1.0 - 0.1 * std::abs(v));
    }
    return acc;
}

double ackley(std::span<const double> x) {
    if (x.empty()) {
        throw UsageError("ackley takes a non-empty vector");
    }
    const double d = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2 * std::numbers::pi * v);
    }
    const double standard =
        -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + std::numbers::e;
    return -standard;
}

double structured3d(std::span<const double> x, bool squared_rosenbrock) {
    if (x.size() != 3) {
        throw UsageError("structured3d takes a 3-vector");
    }
    const double ridge = x[1] - x[0] * x[0];
    const double fa = 100.0 * (squared_rosenbrock ? ridge * ridge : ridge) +
                      (x[0] - 1.0) * (x[0] - 1.0);
    return fa + ackley(x.subspan(2, 1));
}

double BenchmarkFn::operator()(std::span<const double> x) const {
    switch (id) {
    case TaskId::Cosine2D:
        return cosine2d(x);
    case TaskId::Ackley1D:
        return ackley(x);
    case TaskId::Structured3D:
        return structured3d(x, squared_rosenbrock);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

BenchmarkFn make_benchmark(TaskId id, bool squared_rosenbrock) {
    switch (id) {
    case TaskId::Cosine2D:
        // additively separable: one clique per coordinate
        return {id, 2, FunctionalGraph{{{0}, {1}}}, false};
    case TaskId::Ackley1D:
        return {id, 1, FunctionalGraph{{{0}}}, false};
    case TaskId::Structured3D:
        return {id, 3, FunctionalGraph{{{0, 1}, {2}}}, squared_rosenbrock};
    }
    throw UsageError("unknown task");
}

Dataset sample_dataset(const BenchmarkFn& fn, int n_points, std::uint64_t seed) {
    if (n_points < 2) {
        throw UsageError("dataset needs at least two points");
    }
    Rng rng(seed);
    std::vector<std::vector<double>> xs;
    std::vector<double> ys;
    xs.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        std::vector<double> p(static_cast<std::size_t>(fn.dim));
        for (double& v : p) {
            v = rng.uniform(-1.0, 1.0);
        }
        ys.push_back(fn(p));
        xs.push_back(std::move(p));
    }
    Dataset d = Dataset::from_points(std::move(xs), std::move(ys));
    if (d.degenerate()) {
        spdlog::warn("{} dataset (seed {}) has constant targets; scaled targets set to 0",
                     to_string(fn.id), seed);
    }
    return d;
}

double usefulness(const BenchmarkFn& fn, std::span<const double> x_hat, const Dataset& data) {
    if (data.degenerate()) {
        throw UsageError("usefulness undefined: dataset targets are constant");
    }
    return (fn(x_hat) - data.y_min_raw) / (data.y_max_raw - data.y_min_raw);
}

double novelty(std::span<const double> x_hat, const Dataset& data) {
    if (data.empty()) {
        throw UsageError("novelty against an empty dataset");
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : data.x) {
        if (p.size() != x_hat.size()) {
            throw UsageError("novelty: dimension mismatch");
        }
        double d2 = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            const double diff = x_hat[k] - p[k];
            d2 += diff * diff;
        }
        best = std::min(best, d2);
    }
    return best;
}

Metrics evaluate_metrics(const BenchmarkFn& fn, std::span<const double> x_hat, const Dataset& data) {
    return {usefulness(fn, x_hat, data), novelty(x_hat, data)};
}

void write_dataset_table(std::ostream& os, const Dataset& data) {
    os << "index";
    for (int k = 0; k < data.dim; ++k) {
        os << " x_" << k;
    }
    os << " y_raw y_scaled\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
        os << i;
        for (double v : data.x[i]) {
            os << ' ' << fmt::format("{:.17g}", v);
        }
        os << ' ' << fmt::format("{:.17g}", data.y_raw[i]) << ' '
           << fmt::format("{:.17g}", data.y_scaled[i]) << '\n';
    }
}

} // namespace comqel
