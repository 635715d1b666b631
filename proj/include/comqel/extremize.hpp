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
 * Reflective gradient ascent on the box [-1, 1]^d.
 */
#pragma once

#include "comqel/dataset.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace comqel {

/// Coordinate-wise u = x + mu g; an out-of-range u is mirrored to 2c - u
/// (c = +1 above, -1 below). If the mirror image is still outside, the
/// coordinate is clamped to the violated bound.
std::vector<double> reflective_step(std::span<const double> x, std::span<const double> g,
                                    double mu);

struct AscentTrace {
    std::vector<std::vector<double>> iterates; ///< x^0 .. x^T
    std::vector<double> values;                ///< objective at each iterate

    [[nodiscard]] const std::vector<double>& final_point() const { return iterates.back(); }
};

/// Writes the gradient at `x` into `grad` and returns the objective value.
using ValueGradFn = std::function<double(std::span<const double> x, std::span<double> grad)>;

/// T reflective steps of size mu starting from x0. Throws NumericalError on a
/// non-finite value or gradient.
AscentTrace ascend(const ValueGradFn& fn, std::span<const double> x0, int steps, double mu);

/// (x_max, y_max_raw); ties go to the lowest index.
std::pair<std::vector<double>, double> best_in_dataset(const Dataset& data);

} // namespace comqel
