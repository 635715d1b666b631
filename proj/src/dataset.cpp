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

#include "comqel/dataset.hpp"

#include "comqel/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace comqel {

Dataset Dataset::from_points(std::vector<std::vector<double>> x, std::vector<double> y_raw) {
    if (x.empty()) {
        throw UsageError("dataset is empty");
    }
    if (x.size() != y_raw.size()) {
        throw UsageError("dataset has " + std::to_string(x.size()) + " inputs but " +
                         std::to_string(y_raw.size()) + " targets");
    }
    Dataset d;
    d.dim = static_cast<int>(x.front().size());
    if (d.dim < 1) {
        throw UsageError("dataset inputs have zero dimension");
    }
    for (const auto& p : x) {
        if (p.size() != static_cast<std::size_t>(d.dim)) {
            throw UsageError("dataset inputs have inconsistent dimension");
        }
        for (double v : p) {
            if (!(std::abs(v) <= 1.0)) {
                throw DomainError("dataset input outside [-1, 1]");
            }
        }
    }
    d.x = std::move(x);
    d.y_raw = std::move(y_raw);
    const auto [lo, hi] = std::ranges::minmax_element(d.y_raw);
    d.y_min_raw = *lo;
    d.y_max_raw = *hi;
    d.y_scaled.reserve(d.y_raw.size());
    for (double y : d.y_raw) {
        d.y_scaled.push_back(d.scale(y));
    }
    return d;
}

double Dataset::scale(double y) const {
    if (degenerate()) {
        return 0.0;
    }
    return -1.0 + 2.0 * (y - y_min_raw) / (y_max_raw - y_min_raw);
}

} // namespace comqel
