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
 * Ground-truth objectives (all maximized), dataset sampling and the
 * usefulness / novelty metrics.
 */
#pragma once

#include "comqel/dataset.hpp"
#include "comqel/functional_graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace comqel {

enum class TaskId { Cosine2D, Ackley1D, Structured3D };

std::string_view to_string(TaskId id);
std::optional<TaskId> parse_task(std::string_view name);

/// sum_i cos(2 pi x_i) (1 - 0.1 |x_i|) over both coordinates.
double cosine2d(std::span<const double> x);

/// Negated standard Ackley (a = 20, b = 0.2, c = 2 pi); maximum 0 at the origin.
double ackley(std::span<const double> x);

/// f_a(x1, x2) + ackley(x3) with f_a = 100 (x2 - x1^2) + (x1 - 1)^2.
/// With `squared_rosenbrock` the first term is the classical 100 (x2 - x1^2)^2.
double structured3d(std::span<const double> x, bool squared_rosenbrock = false);

struct BenchmarkFn {
    TaskId id{TaskId::Cosine2D};
    int dim{2};
    FunctionalGraph fgm;
    bool squared_rosenbrock{false};

    double operator()(std::span<const double> x) const;
};

BenchmarkFn make_benchmark(TaskId id, bool squared_rosenbrock = false);

/// x_i i.i.d. uniform on [-1, 1]^d from the seeded stream, y_i = fn(x_i).
Dataset sample_dataset(const BenchmarkFn& fn, int n_points, std::uint64_t seed);

/// (f(x_hat) - y_min) / (y_max - y_min) with the true objective. Not capped.
/// Throws UsageError on a degenerate dataset.
double usefulness(const BenchmarkFn& fn, std::span<const double> x_hat, const Dataset& data);

/// min over dataset inputs of ||x_hat - x||^2.
double novelty(std::span<const double> x_hat, const Dataset& data);

struct Metrics {
    double usefulness{0.0};
    double novelty{0.0};
};

Metrics evaluate_metrics(const BenchmarkFn& fn, std::span<const double> x_hat, const Dataset& data);

/// Whitespace-separated table: index, x_0..x_{d-1}, y_raw, y_scaled.
void write_dataset_table(std::ostream& os, const Dataset& data);

} // namespace comqel
