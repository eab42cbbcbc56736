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
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msp/element_set.hpp"
#include "msp/matroid.hpp"
#include "msp/rng.hpp"
#include "msp/weights.hpp"

namespace msp {

struct InstanceBundle {
  std::string family;
  std::size_t n = 0;
  MatroidView view;
  WeightedGroundSet weights;
  std::map<std::string, ElementId> named;
  ElementSet mwb;

  ElementId at(const std::string& name) const {
    auto it = named.find(name);
    if (it == named.end()) throw std::out_of_range("no element named " + name);
    return it->second;
  }
};

namespace detail {

inline InstanceBundle make_bundle(std::string family, std::size_t n, MatroidView view,
                                  WeightedGroundSet weights,
                                  std::map<std::string, ElementId> named) {
  ElementSet mwb = greedy_mwb(view, weights, view.ground());
  return InstanceBundle{std::move(family), n,           std::move(view),
                        std::move(weights), std::move(named), std::move(mwb)};
}

inline std::map<std::string, ElementId> name_all(const std::vector<std::string>& labels) {
  std::map<std::string, ElementId> named;
  for (std::size_t i = 0; i < labels.size(); ++i) named.emplace(labels[i], element(i));
  return named;
}

}  // namespace detail

// Hat graph: vertices v_t=0, v_b=1, v_i=i+1; edges e_inf=(v_t,v_b),
// t_i=(v_t,v_i), b_i=(v_b,v_i). Ids: e_inf=0, t_i=i, b_i=n+i.
// Weights t_i = 2n-i+1, b_i = n-i+1 and e_inf = 1 + sum of the others.
inline InstanceBundle hat_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("hat graph needs n >= 1");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(2 * n + 1);
  std::vector<std::int64_t> w(2 * n + 1);
  std::vector<std::string> labels(2 * n + 1);
  const auto nn = static_cast<std::int64_t>(n);
  edges[0] = {0, 1};
  labels[0] = "e_inf";
  std::int64_t others = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    const auto v = static_cast<std::uint32_t>(i + 1);
    edges[i] = {0, v};
    edges[n + i] = {1, v};
    w[i] = 2 * nn - ii + 1;
    w[n + i] = nn - ii + 1;
    labels[i] = "t_" + std::to_string(i);
    labels[n + i] = "b_" + std::to_string(i);
    others += w[i] + w[n + i];
  }
  w[0] = others + 1;
  auto named = detail::name_all(labels);
  return detail::make_bundle("hat", n, MatroidView::graphic(n + 2, std::move(edges)),
                             WeightedGroundSet::from_integers(std::move(w), std::move(labels)),
                             std::move(named));
}

// Modified hat graph: vertices v_t=0, v_b=1, v_{i,1}=2i, v_{i,2}=2i+1; edges
// e_inf=(v_t,v_b), 1_i=(v_t,v_{i,2}), 2_i=(v_t,v_{i,1}), 3_i=(v_{i,1},v_{i,2}),
// 4_i=(v_b,v_{i,2}). Ids: e_inf=0, c_i = (c-1)n + i for class c.
// Weights: class c, claw i gets c*n - i + 1, so every 4 outweighs every 3,
// and so on; e_inf = 1 + sum of the others.
inline InstanceBundle modified_hat_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("modified hat graph needs n >= 1");
  const std::size_t m = 4 * n + 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(m);
  std::vector<std::int64_t> w(m);
  std::vector<std::string> labels(m);
  const auto nn = static_cast<std::int64_t>(n);
  edges[0] = {0, 1};
  labels[0] = "e_inf";
  std::int64_t others = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto v1 = static_cast<std::uint32_t>(2 * i);
    const auto v2 = static_cast<std::uint32_t>(2 * i + 1);
    const std::pair<std::uint32_t, std::uint32_t> ends[4] = {
        {0, v2}, {0, v1}, {v1, v2}, {1, v2}};
    for (std::size_t c = 1; c <= 4; ++c) {
      const std::size_t id = (c - 1) * n + i;
      edges[id] = ends[c - 1];
      w[id] = static_cast<std::int64_t>(c) * nn - static_cast<std::int64_t>(i) + 1;
      labels[id] = std::to_string(c) + "_" + std::to_string(i);
      others += w[id];
    }
  }
  w[0] = others + 1;
  auto named = detail::name_all(labels);
  return detail::make_bundle(
      "modified-hat", n, MatroidView::graphic(2 * n + 2, std::move(edges)),
      WeightedGroundSet::from_integers(std::move(w), std::move(labels)), std::move(named));
}

// e1=(v1,v2), e2=(v2,v3), e3=(v3,v1) with v(e_i)=i; ids 0, 1, 2.
inline InstanceBundle triangle() {
  std::vector<std::string> labels = {"e1", "e2", "e3"};
  auto named = detail::name_all(labels);
  return detail::make_bundle("triangle", 3, MatroidView::graphic(3, {{0, 1}, {1, 2}, {2, 0}}),
                             WeightedGroundSet::from_integers({1, 2, 3}, std::move(labels)),
                             std::move(named));
}

// Triangle with every side doubled: e_{i,1} and e_{i,2} are parallel on
// side i, v(e_{i,j}) = i + 3(j-1). The id of e_{i,j} is its weight minus one.
inline InstanceBundle double_triangle() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(6);
  std::vector<std::int64_t> w(6);
  std::vector<std::string> labels(6);
  const std::pair<std::uint32_t, std::uint32_t> sides[3] = {{0, 1}, {1, 2}, {2, 0}};
  for (int j = 1; j <= 2; ++j) {
    for (int i = 1; i <= 3; ++i) {
      const int weight = i + 3 * (j - 1);
      const auto id = static_cast<std::size_t>(weight - 1);
      edges[id] = sides[i - 1];
      w[id] = weight;
      labels[id] = "e_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
  }
  auto named = detail::name_all(labels);
  return detail::make_bundle("double-triangle", 3, MatroidView::graphic(3, std::move(edges)),
                             WeightedGroundSet::from_integers(std::move(w), std::move(labels)),
                             std::move(named));
}

// k-uniform matroid on n elements with the given weights (labels default to
// u0..u{n-1}).
inline InstanceBundle uniform_instance(std::size_t n, std::size_t k,
                                       std::vector<std::int64_t> weights,
                                       std::vector<std::string> labels = {}) {
  if (weights.size() != n) throw std::invalid_argument("need one weight per element");
  WeightedGroundSet ws = WeightedGroundSet::from_integers(std::move(weights), std::move(labels));
  auto named = detail::name_all(ws.labels());
  return detail::make_bundle("uniform", n, MatroidView::uniform(n, k), std::move(ws),
                             std::move(named));
}

// Identity weights: element u_i weighs i+1.
inline InstanceBundle uniform_instance(std::size_t n, std::size_t k) {
  std::vector<std::int64_t> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::int64_t>(i + 1);
  return uniform_instance(n, k, std::move(w));
}

// Weights are a random permutation of 1..n.
inline InstanceBundle random_uniform(std::size_t n, std::size_t k, RandomStream& rng) {
  std::vector<std::int64_t> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::int64_t>(i + 1);
  rng.shuffle(w);
  return uniform_instance(n, k, std::move(w));
}

// Independent uniform endpoints per edge (parallel edges and self-loops can
// occur); weights are a random permutation of 1..edge_count.
inline InstanceBundle random_graphic(std::size_t vertex_count, std::size_t edge_count,
                                     RandomStream& rng) {
  if (edge_count == 0) throw std::invalid_argument("random graphic needs >= 1 edge");
  if (vertex_count == 0) throw std::invalid_argument("random graphic needs >= 1 vertex");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(edge_count);
  for (auto& [a, b] : edges) {
    a = static_cast<std::uint32_t>(rng.below(vertex_count));
    b = static_cast<std::uint32_t>(rng.below(vertex_count));
  }
  std::vector<std::int64_t> w(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) w[i] = static_cast<std::int64_t>(i + 1);
  rng.shuffle(w);
  WeightedGroundSet ws = WeightedGroundSet::from_integers(std::move(w));
  auto named = detail::name_all(ws.labels());
  return detail::make_bundle("random-graphic", edge_count,
                             MatroidView::graphic(vertex_count, std::move(edges)),
                             std::move(ws), std::move(named));
}

}  // namespace msp
