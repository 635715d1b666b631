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
 * Functional graphical model: the cliques of an additively decomposed
 * objective. Variables are 0-based.
 */
#pragma once

#include <vector>

namespace comqel {

struct FunctionalGraph {
    std::vector<std::vector<int>> cliques;

    /// Fully connected graph over `n_vars` variables.
    static FunctionalGraph single_clique(int n_vars);

    [[nodiscard]] bool share_clique(int a, int b) const;

    /// More than one clique, i.e. the objective actually decomposes.
    [[nodiscard]] bool nontrivial() const { return cliques.size() > 1; }

    /// Every variable in [0, n_vars) appears in some clique and no clique
    /// references a variable outside that range.
    [[nodiscard]] bool covers(int n_vars) const;

    bool operator==(const FunctionalGraph&) const = default;
};

} // namespace comqel
