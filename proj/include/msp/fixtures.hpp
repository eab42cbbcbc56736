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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msp/element_set.hpp"
#include "msp/instances.hpp"
#include "msp/policies.hpp"
#include "msp/simulation.hpp"

namespace msp {

// A forced schedule with the decisions it must produce. Only the listed
// elements are asserted; expected_accepted, when present, pins the whole
// accepted set.
struct ReplayFixture {
  std::string name;
  InstanceBundle bundle;
  PolicySpec policy;
  ArrivalSchedule schedule;
  double p = 0.0;
  std::vector<std::pair<std::string, bool>> expected;
  std::optional<ElementSet> expected_accepted;
};

struct ReplayOutcome {
  DecisionTrace trace;
  std::vector<std::string> mismatches;
  bool matches() const { return mismatches.empty(); }
};

namespace detail {

inline ArrivalSchedule schedule_by_label(const InstanceBundle& b,
                                         const std::vector<std::pair<std::string, double>>& at) {
  std::vector<Arrival> arrivals;
  for (const auto& [label, time] : at) arrivals.push_back({b.at(label), time});
  return forced_schedule(std::move(arrivals));
}

inline ElementSet set_by_label(const InstanceBundle& b, const std::vector<std::string>& labels) {
  ElementSet s;
  for (const std::string& l : labels) s.insert(b.at(l));
  return s;
}

// e3 is sampled; e2 then e1 arrive live.
inline ReplayFixture triangle_fixture(std::string name, const char* policy,
                                      std::vector<std::pair<std::string, bool>> expected,
                                      std::vector<std::string> accepted) {
  InstanceBundle t = triangle();
  ArrivalSchedule s = schedule_by_label(t, {{"e3", 0.1}, {"e2", 0.5}, {"e1", 0.9}});
  ElementSet a = set_by_label(t, accepted);
  return {std::move(name), std::move(t), parse_policy(policy), std::move(s), 0.25,
          std::move(expected), std::move(a)};
}

}  // namespace detail

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"triangle-sample", "triangle-greedy",
                                                 "uniform-virtual-stream", "hat-claw",
                                                 "modified-hat-lemma1"};
  return names;
}

inline ReplayFixture make_fixture(const std::string& name) {
  if (name == "triangle-sample") {
    // SAMPLE only asks whether u joins MWB(S + u), so it takes both.
    return detail::triangle_fixture(name, "sample", {{"e2", true}, {"e1", true}}, {"e2", "e1"});
  }
  if (name == "triangle-greedy") {
    // After e2 the reference set {e2, e3} spans e1.
    return detail::triangle_fixture(name, "greedy", {{"e2", true}, {"e1", false}}, {"e2"});
  }
  if (name == "uniform-virtual-stream") {
    std::vector<std::string> labels;
    for (int i = 1; i <= 6; ++i) labels.push_back(std::to_string(i));
    InstanceBundle u = uniform_instance(6, 2, {1, 2, 3, 4, 5, 6}, labels);
    ArrivalSchedule s = detail::schedule_by_label(
        u, {{"1", 0.05}, {"3", 0.10}, {"2", 0.3}, {"4", 0.5}, {"5", 0.7}, {"6", 0.9}});
    ElementSet a = detail::set_by_label(u, {"2", "5"});
    return {name,
            std::move(u),
            parse_policy("virtual-msp"),
            std::move(s),
            0.25,
            {{"2", true}, {"4", false}, {"5", true}, {"6", false}},
            std::move(a)};
  }
  if (name == "hat-claw") {
    // t_1, b_1 sampled: b_2 closes a cycle below the sampled claw, t_3 kicks
    // the live b_3, and e_inf kicks the sampled b_1.
    InstanceBundle h = hat_graph(3);
    ArrivalSchedule s = detail::schedule_by_label(h, {{"t_1", 0.05},
                                                      {"b_1", 0.10},
                                                      {"t_2", 0.3},
                                                      {"b_2", 0.4},
                                                      {"b_3", 0.5},
                                                      {"t_3", 0.6},
                                                      {"e_inf", 0.9}});
    ElementSet a = detail::set_by_label(h, {"t_2", "b_3", "e_inf"});
    return {name,
            std::move(h),
            parse_policy("virtual-msp"),
            std::move(s),
            0.25,
            {{"t_2", true}, {"b_2", false}, {"b_3", true}, {"t_3", false}, {"e_inf", true}},
            std::move(a)};
  }
  if (name == "modified-hat-lemma1") {
    // Claw 1 sampled in full, 2_2 sampled; 1_2, 3_2, 4_2 live before e_inf.
    InstanceBundle m = modified_hat_graph(2);
    ArrivalSchedule s = detail::schedule_by_label(m, {{"1_1", 0.02},
                                                      {"2_1", 0.04},
                                                      {"3_1", 0.06},
                                                      {"4_1", 0.08},
                                                      {"2_2", 0.10},
                                                      {"1_2", 0.3},
                                                      {"3_2", 0.5},
                                                      {"4_2", 0.7},
                                                      {"e_inf", 0.9}});
    ElementSet a = detail::set_by_label(m, {"1_2", "4_2"});
    return {name,
            std::move(m),
            parse_policy("virtual-msp"),
            std::move(s),
            0.25,
            {{"1_2", true}, {"3_2", false}, {"4_2", true}, {"e_inf", false}},
            std::move(a)};
  }
  throw std::invalid_argument("unknown fixture " + name);
}

inline ReplayOutcome replay(const ReplayFixture& f) {
  ReplayOutcome out;
  out.trace = run_trial(f.policy, f.bundle.view, f.bundle.weights, f.schedule, f.p);
  for (const auto& [label, accept] : f.expected) {
    const DecisionRecord* r = out.trace.find(f.bundle.at(label));
    if (r == nullptr || r->phase != Phase::kLive) {
      out.mismatches.push_back(label + " did not arrive live");
    } else if (r->accepted != accept) {
      out.mismatches.push_back(label + (accept ? " rejected, expected accept"
                                               : " accepted, expected reject"));
    }
  }
  if (f.expected_accepted && out.trace.accepted != *f.expected_accepted) {
    out.mismatches.push_back("accepted set differs");
  }
  return out;
}

}  // namespace msp
