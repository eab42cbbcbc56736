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

#include <cmath>

#include "msp/errors.hpp"
#include "msp/instances.hpp"
#include "msp/policies.hpp"
#include "msp/simulation.hpp"

namespace msp {
namespace {

TEST(Schedule, SingleElement) {
  RandomStream rng(1);
  const ArrivalSchedule s = draw_schedule(1, rng);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.order().front(), element(0));
  EXPECT_GE(s.arrivals().front().time, 0.0);
  EXPECT_LE(s.arrivals().front().time, 1.0);
}

TEST(Schedule, SameSeedSameSchedule) {
  RandomStream a = RandomStream::for_trial(17, 0);
  RandomStream b = RandomStream::for_trial(17, 0);
  RandomStream c = RandomStream::for_trial(17, 1);
  auto list = [](const ArrivalSchedule& s) {
    return std::vector<Arrival>(s.arrivals().begin(), s.arrivals().end());
  };
  const ArrivalSchedule x = draw_schedule(20, a);
  EXPECT_EQ(list(x), list(draw_schedule(20, b)));
  EXPECT_NE(list(x), list(draw_schedule(20, c)));
}

TEST(Schedule, TimesAreUniformOnAverage) {
  RandomStream rng(4242);
  const ArrivalSchedule s = draw_schedule(10000, rng);
  double sum = 0.0;
  for (const Arrival& a : s.arrivals()) sum += a.time;
  const double mean = sum / 10000.0;
  // 3 sigma of the mean of U[0,1] at n = 10^4 is 3 / sqrt(12 * 10^4).
  EXPECT_NEAR(mean, 0.5, 3.0 / std::sqrt(12.0 * 10000.0));
  EXPECT_GE(mean, 0.49);
  EXPECT_LE(mean, 0.51);
}

TEST(Schedule, OrderIsAscendingTime) {
  RandomStream rng(8);
  const ArrivalSchedule s = draw_schedule(50, rng);
  for (std::size_t i = 1; i < s.size(); ++i) {
    EXPECT_LT(s.arrivals()[i - 1].time, s.arrivals()[i].time);
  }
  EXPECT_EQ(s.elements(), ElementSet::first_n(50));
}

TEST(Schedule, ForcedValidation) {
  const InstanceBundle t = triangle();
  const ArrivalSchedule one = forced_schedule({{t.at("e3"), 0.1}});
  EXPECT_EQ(one.order(), std::vector<ElementId>{t.at("e3")});
  EXPECT_THROW(forced_schedule({{t.at("e3"), 1.5}}), std::invalid_argument);
  EXPECT_THROW(forced_schedule({{t.at("e3"), 0.1}, {t.at("e3"), 0.2}}), std::invalid_argument);
  EXPECT_THROW(forced_schedule({{t.at("e1"), 0.1}, {t.at("e2"), 0.1}}), std::invalid_argument);

  const InstanceBundle u = uniform_instance(6, 2);
  const ArrivalSchedule stream = forced_schedule({{element(0), 0.05},
                                                  {element(2), 0.10},
                                                  {element(1), 0.3},
                                                  {element(3), 0.5},
                                                  {element(4), 0.7},
                                                  {element(5), 0.9}});
  const std::vector<ElementId> expected = {element(0), element(2), element(1),
                                           element(3), element(4), element(5)};
  EXPECT_EQ(stream.order(), expected);
}

TEST(RunTrial, TriangleReplays) {
  const InstanceBundle t = triangle();
  const ArrivalSchedule s =
      forced_schedule({{t.at("e3"), 0.1}, {t.at("e2"), 0.5}, {t.at("e1"), 0.9}});
  const DecisionTrace sample = run_trial(parse_policy("sample"), t.view, t.weights, s, 0.25);
  EXPECT_EQ(sample.accepted, ElementSet({t.at("e2"), t.at("e1")}));
  const DecisionTrace greedy = run_trial(parse_policy("greedy"), t.view, t.weights, s, 0.25);
  EXPECT_EQ(greedy.accepted, ElementSet({t.at("e2")}));
}

TEST(RunTrial, AllSamplesWhenPIsOne) {
  const InstanceBundle h = hat_graph(4);
  RandomStream rng(3);
  const ArrivalSchedule s = draw_schedule(h.weights, rng);
  const DecisionTrace tr = run_trial(parse_policy("virtual-msp"), h.view, h.weights, s, 1.0);
  EXPECT_TRUE(tr.accepted.empty());
  for (const DecisionRecord& r : tr.records) EXPECT_EQ(r.phase, Phase::kSample);
}

TEST(RunTrial, RejectsPartialSchedules) {
  const InstanceBundle t = triangle();
  const ArrivalSchedule s = forced_schedule({{t.at("e3"), 0.1}});
  EXPECT_THROW(run_trial(parse_policy("sample"), t.view, t.weights, s, 0.5),
               std::invalid_argument);
  const ArrivalSchedule full =
      forced_schedule({{t.at("e3"), 0.1}, {t.at("e2"), 0.5}, {t.at("e1"), 0.9}});
  EXPECT_THROW(run_trial(parse_policy("sample"), t.view, t.weights, full, 1.5),
               std::invalid_argument);
}

// Record-level invariants over every policy on seeded random instances.
TEST(RunTrial, TraceInvariants) {
  const char* policies[] = {"dynkin", "optimistic", "virtual-uniform", "sample",
                            "sample-contracted", "greedy", "virtual-msp"};
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    RandomStream rng = RandomStream::for_trial(77, trial);
    const bool uniform = rng.below(2) == 0;
    const std::size_t n = 1 + rng.below(10);
    const std::size_t k = 1 + rng.below(n);
    const InstanceBundle b = uniform ? random_uniform(n, k, rng)
                                     : random_graphic(2 + rng.below(4), n, rng);
    const ArrivalSchedule s = draw_schedule(b.weights, rng);
    const double p = rng.uniform01();
    for (const char* name : policies) {
      const PolicySpec spec = parse_policy(name, k);
      if (!uniform && (spec.kind == PolicyKind::kOptimistic ||
                       spec.kind == PolicyKind::kVirtualUniform || spec.kind == PolicyKind::kDynkin)) {
        continue;
      }
      const DecisionTrace tr = run_trial(spec, b.view, b.weights, s, p);
      ElementSet accepted;
      for (const DecisionRecord& r : tr.records) {
        if (r.phase == Phase::kSample) EXPECT_FALSE(r.accepted);
        EXPECT_EQ(r.phase == Phase::kSample, r.time < p);
        if (r.kicked) EXPECT_NE(*r.kicked, r.element);
        if (r.accepted) accepted.insert(r.element);
      }
      EXPECT_EQ(accepted, tr.accepted);
      EXPECT_TRUE(is_independent(b.view, tr.accepted)) << name;
    }
  }
}

// Decisions depend only on the arrival order and which side of p each
// arrival falls, so a strictly increasing map of times and p changes nothing.
TEST(RunTrial, MonotoneTimeReparameterization) {
  const InstanceBundle h = hat_graph(6);
  auto warp = [](double t) { return t * t * t; };
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    RandomStream rng = RandomStream::for_trial(5, trial);
    const ArrivalSchedule s = draw_schedule(h.weights, rng);
    std::vector<Arrival> warped;
    for (const Arrival& a : s.arrivals()) warped.push_back({a.element, warp(a.time)});
    const ArrivalSchedule w = forced_schedule(warped);
    const DecisionTrace a = run_trial(parse_policy("virtual-msp"), h.view, h.weights, s, 0.5);
    const DecisionTrace b =
        run_trial(parse_policy("virtual-msp"), h.view, h.weights, w, warp(0.5));
    EXPECT_EQ(a.decisions(), b.decisions());
    EXPECT_EQ(a.accepted, b.accepted);
  }
}

// A k-policy run with k above the rank would break independence; the
// harness must stop it rather than record a dependent accepted set.
TEST(RunTrial, HarnessCatchesDependentAcceptance) {
  const InstanceBundle u = uniform_instance(4, 1);
  const ArrivalSchedule s = forced_schedule(
      {{element(0), 0.6}, {element(1), 0.7}, {element(2), 0.8}, {element(3), 0.9}});
  EXPECT_THROW(run_trial(parse_policy("optimistic", 2), u.view, u.weights, s, 0.5),
               HarnessViolation);
}

}  // namespace
}  // namespace msp
