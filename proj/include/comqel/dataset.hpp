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
 * Offline dataset of (x, y) pairs with min-max target scaling.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace comqel {

struct Dataset {
    int dim{0};
    std::vector<std::vector<double>> x;
    std::vector<double> y_raw;
    std::vector<double> y_scaled; ///< -1 + 2 (y - y_min) / (y_max - y_min); all 0 if degenerate
    double y_min_raw{0.0};
    double y_max_raw{0.0};

    /// Validates |x| <= 1 and dimensions, then fills the scaling metadata.
    /// Throws UsageError on empty input or ragged points, DomainError on |x| > 1.
    static Dataset from_points(std::vector<std::vector<double>> x, std::vector<double> y_raw);

    [[nodiscard]] std::size_t size() const { return x.size(); }
    [[nodiscard]] bool empty() const { return x.empty(); }
    [[nodiscard]] bool degenerate() const { return !(y_max_raw > y_min_raw); }

    /// Raw objective mapped onto the scaled target units.
    [[nodiscard]] double scale(double y) const;
};

} // namespace comqel
