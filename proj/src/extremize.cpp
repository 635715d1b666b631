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

#include "comqel/extremize.hpp"

#include "comqel/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace comqel {

std::vector<double> reflective_step(std::span<const double> x, std::span<const double> g,
                                    double mu) {
    if (x.size() != g.size()) {
        throw UsageError("point and gradient differ in length");
    }
    std::vector<double> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        double u = x[k] + mu * g[k];
        if (u > 1.0) {
            u = 2.0 - u;
        } else if (u < -1.0) {
            u = -2.0 - u;
        }
        out[k] = std::clamp(u, -1.0, 1.0);
    }
    return out;
}

AscentTrace ascend(const ValueGradFn& fn, std::span<const double> x0, int steps, double mu) {
    if (steps < 0) {
        throw UsageError("negative number of ascent steps");
    }
    AscentTrace trace;
    trace.iterates.emplace_back(x0.begin(), x0.end());
    std::vector<double> grad(x0.size());

    auto evaluate = [&](const std::vector<double>& x) {
        const double v = fn(x, grad);
        const bool finite = std::isfinite(v) &&
                            std::ranges::all_of(grad, [](double g) { return std::isfinite(g); });
        if (!finite) {
            throw NumericalError("non-finite surrogate value or gradient at ascent step " +
                                 std::to_string(trace.iterates.size() - 1));
        }
        trace.values.push_back(v);
    };

    for (int t = 0; t < steps; ++t) {
        evaluate(trace.iterates.back());
        trace.iterates.push_back(reflective_step(trace.iterates.back(), grad, mu));
    }
    evaluate(trace.iterates.back());
    return trace;
}

std::pair<std::vector<double>, double> best_in_dataset(const Dataset& data) {
    if (data.empty()) {
        throw UsageError("best_in_dataset on an empty dataset");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < data.size(); ++i) {
        if (data.y_raw[i] > data.y_raw[best]) {
            best = i;
        }
    }
    return {data.x[best], data.y_raw[best]};
}

} // namespace comqel
