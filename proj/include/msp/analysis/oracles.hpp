// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "msp/element_set.hpp"
#include "msp/matroid.hpp"
#include "msp/weights.hpp"

namespace msp::analysis {

inline constexpr std::size_t kBruteForceLimit = 20;

// Independence decided without union-find: uniform by counting, graphic by
// depth-first search for a cycle among the edges of s plus the contraction.
inline bool oracle_independent(const MatroidView& view, const ElementSet& s) {
  view.require_in_ground(s);
  const ElementSet all = s | view.contraction();
  if (const auto* u = std::get_if<UniformMatroid>(&view.base())) return all.size() <= u->rank;
  const auto& g = std::get<GraphicMatroid>(view.base());
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(g.vertex_count);
  for (ElementId e : all) {
    const auto [a, b] = g.endpoints[index(e)];
    if (a == b) return false;
    adj[a].push_back({b, index(e)});
    adj[b].push_back({a, index(e)});
  }
  std::vector<bool> visited(g.vertex_count, false);
  // A back edge other than the one we came in on closes a cycle.
  std::function<bool(std::uint32_t, std::size_t)> dfs = [&](std::uint32_t v, std::size_t via) {
    visited[v] = true;
    for (const auto& [w, e] : adj[v]) {
      if (e == via) continue;
      if (visited[w] || !dfs(w, e)) return false;
    }
    return true;
  };
  for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
    if (!visited[v] && !dfs(v, static_cast<std::size_t>(-1))) return false;
  }
  return true;
}

// Maximum-weight independent subset of s by enumerating all 2^|s| subsets.
// Throws if two independent subsets tie for the maximum.
inline ElementSet brute_force_mwb(const MatroidView& view, const WeightedGroundSet& weights,
                                  const ElementSet& s) {
  view.require_in_ground(s);
  if (s.size() > kBruteForceLimit) {
    throw std::invalid_argument("brute force limited to 20 elements");
  }
  const std::vector<ElementId> items(s.begin(), s.end());
  const std::uint64_t subsets = std::uint64_t{1} << items.size();
  std::int64_t best_weight = -1;
  std::uint64_t best_mask = 0;
  bool tied = false;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    ElementSet subset;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1U) {
        subset.insert(items[i]);
        total += weights.scaled(items[i]);
      }
    }
    if (total < best_weight || !oracle_independent(view, subset)) continue;
    if (total == best_weight) {
      tied = true;
      continue;
    }
    best_weight = total;
    best_mask = mask;
    tied = false;
  }
  if (tied) throw std::logic_error("max-weight independent set is not unique");
  ElementSet out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (best_mask >> i & 1U) out.insert(items[i]);
  }
  return out;
}

}  // namespace msp::analysis
