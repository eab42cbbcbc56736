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

#include "msp/analysis/oracles.hpp"
#include "msp/element_set.hpp"
#include "msp/instances.hpp"
#include "msp/matroid.hpp"
#include "msp/rng.hpp"
#include "msp/weights.hpp"

namespace msp {
namespace {

ElementSet ids(std::initializer_list<std::size_t> xs) {
  ElementSet s;
  for (std::size_t x : xs) s.insert(element(x));
  return s;
}

TEST(ElementSet, SetAlgebra) {
  const ElementSet a = ids({3, 1, 2, 1});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a, ids({1, 2, 3}));
  EXPECT_EQ(a | ids({5}), ids({1, 2, 3, 5}));
  EXPECT_EQ(a & ids({2, 9}), ids({2}));
  EXPECT_EQ(a - ids({2}), ids({1, 3}));
  EXPECT_TRUE(ids({1}).is_subset_of(a));
  EXPECT_FALSE(ids({4}).is_subset_of(a));
  EXPECT_EQ(a.with(element(0)).without(element(3)), ids({0, 1, 2}));
}

TEST(Weights, RejectsTiesAndNonPositive) {
  EXPECT_THROW(WeightedGroundSet::from_integers({1, 2, 2}), std::invalid_argument);
  EXPECT_THROW(WeightedGroundSet::from_integers({0, 2}), std::invalid_argument);
  EXPECT_THROW(WeightedGroundSet::from_decimal_strings({"1.5", "1.50"}), std::invalid_argument);
}

TEST(Weights, DecimalOrderIsExact) {
  const auto w = WeightedGroundSet::from_decimal_strings({"4.5", "6", "4.8", "0.000000000001"});
  EXPECT_TRUE(w.heavier(element(1), element(2)));
  EXPECT_TRUE(w.heavier(element(2), element(0)));
  EXPECT_EQ(w.position(element(1)), 0u);
  EXPECT_EQ(w.position(element(3)), 3u);
  EXPECT_EQ(*w.heaviest(ids({0, 2})), element(2));
  EXPECT_EQ(w.label(element(0)), "u0");
}

TEST(Matroid, TriangleIndependence) {
  const InstanceBundle t = triangle();
  EXPECT_TRUE(is_independent(t.view, {t.at("e1"), t.at("e2")}));
  EXPECT_FALSE(is_independent(t.view, t.view.ground()));
  EXPECT_EQ(rank(t.view, t.view.ground()), 2u);
  EXPECT_EQ(span(t.view, {t.at("e1"), t.at("e2")}), t.view.ground());
}

TEST(Matroid, ContractionAgreesWithOracle) {
  const InstanceBundle t = triangle();
  const MatroidView c = contract(t.view, {t.at("e3")});
  // {e1, e3} is acyclic, so {e1} stays independent after contracting e3.
  EXPECT_TRUE(is_independent(t.view, {t.at("e1"), t.at("e3")}));
  EXPECT_TRUE(is_independent(c, {t.at("e1")}));
  EXPECT_TRUE(analysis::oracle_independent(c, {t.at("e1")}));
  EXPECT_FALSE(is_independent(c, {t.at("e1"), t.at("e2")}));
  EXPECT_THROW(is_independent(c, {t.at("e3")}), std::domain_error);
}

TEST(Matroid, UniformRankAndSpan) {
  const MatroidView u = MatroidView::uniform(6, 2);
  EXPECT_FALSE(is_independent(u, ids({0, 1, 2})));
  EXPECT_EQ(rank(u, ids({0, 1, 2, 3, 4})), 2u);
  EXPECT_EQ(span(u, ids({0, 1})), u.ground());
  const MatroidView c = contract(u, ids({0}));
  EXPECT_EQ(rank(c, ids({1, 2, 3, 4, 5})), 1u);
  EXPECT_THROW(contract(u, ids({0, 1, 2})), std::invalid_argument);
}

TEST(Matroid, HatRanks) {
  const InstanceBundle h = hat_graph(2);
  EXPECT_EQ(rank(h.view, h.view.ground()), 3u);
  const MatroidView claw = restrict(h.view, {h.at("t_1"), h.at("b_1")});
  EXPECT_EQ(rank(claw, claw.ground()), 2u);
}

TEST(Matroid, SelfLoopIsDependentAndInEverySpan) {
  const MatroidView g = MatroidView::graphic(2, {{0, 0}, {0, 1}});
  EXPECT_FALSE(is_independent(g, ids({0})));
  EXPECT_EQ(span(g, {}), ids({0}));
  EXPECT_THROW(MatroidView::graphic(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(MatroidView::uniform(2, 3), std::invalid_argument);
}

TEST(Matroid, GreedyExamples) {
  const InstanceBundle t = triangle();
  EXPECT_EQ(greedy_mwb(t.view, t.weights, t.view.ground()), ElementSet({t.at("e3"), t.at("e2")}));
  EXPECT_TRUE(greedy_mwb(t.view, t.weights, {}).empty());
  const InstanceBundle h = hat_graph(1);
  EXPECT_EQ(greedy_mwb(h.view, h.weights, h.view.ground()),
            ElementSet({h.at("e_inf"), h.at("t_1")}));
}

TEST(Matroid, RestrictionsCompose) {
  RandomStream rng(3);
  for (int round = 0; round < 50; ++round) {
    const InstanceBundle g = random_graphic(4, 7, rng);
    ElementSet s, t;
    for (ElementId e : g.view.ground()) {
      if (rng.below(2)) s.insert(e);
      if (rng.below(2)) t.insert(e);
    }
    const MatroidView twice = restrict(restrict(g.view, s), s & t);
    const MatroidView once = restrict(g.view, s & t);
    EXPECT_EQ(twice.ground(), once.ground());
    const ElementSet i = greedy_mwb(once, g.weights, once.ground());
    const MatroidView rc = contract(restrict(g.view, s & t), i);
    EXPECT_TRUE(rc.ground().empty() || rank(rc, rc.ground()) == 0);
    for (ElementId e : once.ground()) {
      EXPECT_EQ(is_independent(twice, {e}), is_independent(once, {e}));
    }
  }
  const InstanceBundle tri = triangle();
  const MatroidView none = contract(tri.view, {});
  EXPECT_EQ(rank(none, none.ground()), 2u);
}

// Union-find independence against the DFS cycle oracle on every subset.
TEST(Matroid, UnionFindMatchesDfsOracle) {
  RandomStream rng(11);
  for (int round = 0; round < 100; ++round) {
    const InstanceBundle g = random_graphic(1 + rng.below(5), 1 + rng.below(8), rng);
    const std::size_t m = g.view.ground().size();
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      ElementSet s;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1U) s.insert(element(i));
      }
      ASSERT_EQ(is_independent(g.view, s), analysis::oracle_independent(g.view, s));
    }
  }
}

TEST(Matroid, GreedyMatchesBruteForce) {
  RandomStream rng(5);
  for (int round = 0; round < 200; ++round) {
    const InstanceBundle g = random_graphic(2 + rng.below(5), 1 + rng.below(8), rng);
    EXPECT_EQ(greedy_mwb(g.view, g.weights, g.view.ground()),
              analysis::brute_force_mwb(g.view, g.weights, g.view.ground()));
  }
}

}  // namespace
}  // namespace msp
