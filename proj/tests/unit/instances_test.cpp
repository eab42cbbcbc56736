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


#include <gtest/gtest.h>

#include <variant>

#include "msp/analysis/oracles.hpp"
#include "msp/instances.hpp"

namespace msp {
namespace {

std::size_t vertex_count(const InstanceBundle& b) {
  return std::get<GraphicMatroid>(b.view.base()).vertex_count;
}

TEST(Instances, HatGraphShape) {
  const InstanceBundle h1 = hat_graph(1);
  EXPECT_EQ(vertex_count(h1), 3u);
  EXPECT_EQ(h1.view.ground().size(), 3u);
  EXPECT_EQ(h1.mwb, ElementSet({h1.at("e_inf"), h1.at("t_1")}));
  EXPECT_EQ(analysis::brute_force_mwb(h1.view, h1.weights, h1.view.ground()), h1.mwb);

  const InstanceBundle h3 = hat_graph(3);
  EXPECT_EQ(vertex_count(h3), 5u);
  EXPECT_EQ(h3.view.ground().size(), 7u);
  EXPECT_EQ(h3.mwb, ElementSet({h3.at("e_inf"), h3.at("t_1"), h3.at("t_2"), h3.at("t_3")}));
  EXPECT_EQ(analysis::brute_force_mwb(h3.view, h3.weights, h3.view.ground()), h3.mwb);
}

TEST(Instances, HatWeightChain) {
  const InstanceBundle h = hat_graph(5);
  EXPECT_TRUE(h.weights.heavier(h.at("t_5"), h.at("b_1")));
  for (std::size_t i = 1; i < 5; ++i) {
    EXPECT_TRUE(h.weights.heavier(h.at("t_" + std::to_string(i)), h.at("t_" + std::to_string(i + 1))));
    EXPECT_TRUE(h.weights.heavier(h.at("b_" + std::to_string(i)), h.at("b_" + std::to_string(i + 1))));
  }
  std::int64_t others = 0;
  for (ElementId e : h.view.ground()) {
    if (e != h.at("e_inf")) others += h.weights.scaled(e);
  }
  EXPECT_GT(h.weights.scaled(h.at("e_inf")), others);
}

TEST(Instances, ModifiedHatShape) {
  const InstanceBundle m1 = modified_hat_graph(1);
  EXPECT_EQ(vertex_count(m1), 4u);
  EXPECT_EQ(m1.view.ground().size(), 5u);

  const InstanceBundle m2 = modified_hat_graph(2);
  EXPECT_EQ(analysis::brute_force_mwb(m2.view, m2.weights, m2.view.ground()), m2.mwb);
  EXPECT_TRUE(m2.mwb.contains(m2.at("e_inf")));
  EXPECT_EQ(m2.mwb.size(), 5u);
  EXPECT_EQ(rank(m2.view, m2.view.ground()), 5u);
  EXPECT_TRUE(m2.weights.heavier(m2.at("2_2"), m2.at("1_1")));
  EXPECT_TRUE(m2.weights.heavier(m2.at("4_2"), m2.at("3_1")));
}

TEST(Instances, TriangleAndDoubleTriangle) {
  const InstanceBundle t = triangle();
  EXPECT_EQ(t.mwb, ElementSet({t.at("e3"), t.at("e2")}));
  EXPECT_EQ(rank(t.view, t.view.ground()), 2u);

  const InstanceBundle d = double_triangle();
  EXPECT_EQ(d.view.ground().size(), 6u);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const ElementId e = d.at("e_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      EXPECT_EQ(d.weights.scaled(e), i + 3 * (j - 1));
    }
  }
  EXPECT_EQ(d.mwb, ElementSet({d.at("e_{3,2}"), d.at("e_{2,2}")}));
  EXPECT_EQ(analysis::brute_force_mwb(d.view, d.weights, d.view.ground()), d.mwb);
  EXPECT_FALSE(is_independent(d.view, {d.at("e_{1,2}"), d.at("e_{2,2}"), d.at("e_{3,2}")}));
}

TEST(Instances, UniformTopK) {
  const InstanceBundle u = uniform_instance(6, 2);
  EXPECT_EQ(u.mwb, ElementSet({element(4), element(5)}));
  const InstanceBundle all = uniform_instance(4, 4);
  EXPECT_EQ(all.mwb, all.view.ground());
  EXPECT_THROW(uniform_instance(3, 4), std::invalid_argument);
}

TEST(Instances, SeededGenerationIsReproducible) {
  RandomStream a(99), b(99);
  const InstanceBundle x = random_graphic(5, 8, a);
  const InstanceBundle y = random_graphic(5, 8, b);
  EXPECT_EQ(std::get<GraphicMatroid>(x.view.base()).endpoints,
            std::get<GraphicMatroid>(y.view.base()).endpoints);
  EXPECT_EQ(x.weights.labels(), y.weights.labels());
  for (ElementId e : x.view.ground()) EXPECT_EQ(x.weights.scaled(e), y.weights.scaled(e));
}

TEST(Instances, RandomBundlesMatchBruteForce) {
  RandomStream rng(2026);
  for (int i = 0; i < 200; ++i) {
    const InstanceBundle g = random_graphic(2 + rng.below(5), 1 + rng.below(8), rng);
    EXPECT_EQ(analysis::brute_force_mwb(g.view, g.weights, g.view.ground()), g.mwb);
  }
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.below(10);
    const InstanceBundle u = random_uniform(n, rng.below(n + 1), rng);
    EXPECT_EQ(analysis::brute_force_mwb(u.view, u.weights, u.view.ground()), u.mwb);
  }
}

}  // namespace
}  // namespace msp
