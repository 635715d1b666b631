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

#include "comqel/functional_graph.hpp"

#include <algorithm>
#include <numeric>

namespace comqel {

FunctionalGraph FunctionalGraph::single_clique(int n_vars) {
    std::vector<int> all(static_cast<std::size_t>(n_vars));
    std::iota(all.begin(), all.end(), 0);
    return FunctionalGraph{{all}};
}

bool FunctionalGraph::share_clique(int a, int b) const {
    return std::ranges::any_of(cliques, [a, b](const std::vector<int>& c) {
        return std::ranges::find(c, a) != c.end() && std::ranges::find(c, b) != c.end();
    });
}

bool FunctionalGraph::covers(int n_vars) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_vars), false);
    for (const auto& clique : cliques) {
        for (int v : clique) {
            if (v < 0 || v >= n_vars) {
                return false;
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    return std::ranges::all_of(seen, [](bool s) { return s; });
}

} // namespace comqel
