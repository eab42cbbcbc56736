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
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msp/element_set.hpp"
#include "msp/instances.hpp"
#include "msp/matroid.hpp"
#include "msp/simulation.hpp"
#include "msp/weights.hpp"

namespace msp::analysis {

class OracleError : public std::logic_error {
 public:
  explicit OracleError(const std::string& what) : std::logic_error(what) {}
};

// Strong forbidden sets: F(Y, u) depends only on the configuration Y and the
// element u. Queried only for u in MWB(Y).
struct ForbiddenSetOracle {
  std::function<ElementSet(const ElementSet& y, ElementId u)> rule;
  std::size_t size_bound = 0;

  ElementSet operator()(const ElementSet& y, ElementId u) const {
    ElementSet f = rule(y, u);
    if (!f.is_subset_of(y.without(u))) {
      throw OracleError("forbidden set leaves Y \\ {u}");
    }
    if (f.size() > size_bound) throw OracleError("forbidden set exceeds its size bound");
    return f;
  }
};

// Arrival records (no decisions) for a schedule split at p.
inline std::vector<DecisionRecord> arrival_records(const ArrivalSchedule& schedule, double p) {
  std::vector<DecisionRecord> out;
  for (const Arrival& a : schedule.arrivals()) {
    DecisionRecord r;
    r.element = a.element;
    r.time = a.time;
    r.phase = a.time < p ? Phase::kSample : Phase::kLive;
    out.push_back(r);
  }
  return out;
}

struct ForcedAcceptance {
  std::size_t record_index = 0;
  ElementId element;
};

// Live arrivals the forbidden-set rule forces into the accepted set: u is
// forced when u is in MWB(V_t + u) and no earlier live arrival lies in
// F(V_t + u, u).
inline std::vector<ForcedAcceptance> forced_acceptances(
    const std::vector<DecisionRecord>& records, const MatroidView& view,
    const WeightedGroundSet& weights, const ForbiddenSetOracle& oracle) {
  std::vector<ForcedAcceptance> forced;
  ElementSet seen;
  ElementSet live_seen;
  ElementSet mwb_seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ElementId u = records[i].element;
    ElementSet next_mwb = greedy_mwb(view, weights, mwb_seen.with(u));
    if (records[i].phase == Phase::kLive && next_mwb.contains(u)) {
      const ElementSet y = seen.with(u);
      if ((oracle(y, u) & live_seen).empty()) forced.push_back({i, u});
    }
    seen.insert(u);
    if (records[i].phase == Phase::kLive) live_seen.insert(u);
    mwb_seen = std::move(next_mwb);
  }
  return forced;
}

struct ConsistencyResult {
  bool consistent = true;
  std::optional<DecisionRecord> first_violation;
  std::size_t forced = 0;
};

// Every acceptance the forbidden-set rule forces must appear in the trace.
inline ConsistencyResult check_forbidden_consistency(const DecisionTrace& trace,
                                                     const ForbiddenSetOracle& oracle,
                                                     const MatroidView& view,
                                                     const WeightedGroundSet& weights) {
  ConsistencyResult out;
  for (const ForcedAcceptance& f : forced_acceptances(trace.records, view, weights, oracle)) {
    ++out.forced;
    if (out.consistent && !trace.records[f.record_index].accepted) {
      out.consistent = false;
      out.first_violation = trace.records[f.record_index];
    }
  }
  return out;
}

// The first live arrival must be accepted whenever it is in MWB(V_t + u):
// no live element precedes it, so any forbidden-set rule forces it.
inline ConsistencyResult check_first_after_sample(const DecisionTrace& trace,
                                                  const MatroidView& view,
                                                  const WeightedGroundSet& weights) {
  ForbiddenSetOracle any{[](const ElementSet&, ElementId) { return ElementSet{}; }, 0};
  ConsistencyResult out;
  for (const ForcedAcceptance& f : forced_acceptances(trace.records, view, weights, any)) {
    const DecisionRecord& r = trace.records[f.record_index];
    bool first_live = true;
    for (std::size_t i = 0; i < f.record_index; ++i) {
      if (trace.records[i].phase == Phase::kLive) first_live = false;
    }
    if (!first_live) break;
    ++out.forced;
    if (!r.accepted) {
      out.consistent = false;
      out.first_violation = r;
    }
  }
  return out;
}

namespace detail {

struct HatRoles {
  ElementId infinity;
  std::vector<ElementId> top;     // top[i-1] = t_i
  std::vector<ElementId> bottom;  // bottom[i-1] = b_i

  static HatRoles of(const InstanceBundle& hat) {
    if (hat.family != "hat") throw std::invalid_argument("expected a hat graph instance");
    HatRoles r{hat.at("e_inf"), {}, {}};
    for (std::size_t i = 1; i <= hat.n; ++i) {
      r.top.push_back(hat.at("t_" + std::to_string(i)));
      r.bottom.push_back(hat.at("b_" + std::to_string(i)));
    }
    return r;
  }

  // 1-based claw index of an edge, 0 for e_inf.
  std::size_t claw(ElementId id) const {
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (top[i] == id || bottom[i] == id) return i + 1;
    }
    return 0;
  }

  bool full(const ElementSet& y, std::size_t i) const {
    return y.contains(top[i - 1]) && y.contains(bottom[i - 1]);
  }

  // Smallest claw index > after with both edges in y; 0 if none.
  std::size_t next_full(const ElementSet& y, std::size_t after) const {
    for (std::size_t i = after + 1; i <= top.size(); ++i) {
      if (full(y, i)) return i;
    }
    return 0;
  }
};

}  // namespace detail

// Size-2 forbidden sets for the virtual algorithm on the hat graph:
//   u = e_inf                                          {t_1, b_1}
//   u = t_i, e_inf not in Y, i = min full claw of Y    {b_j : j = next full claw after i}
//   u = t_i otherwise                                  {b_i}
//   u = b_i, e_inf not in Y, i = min full claw of Y    {b_j : j = next full claw after i}
//   u = b_i, t_i not in Y                              {}
// Sets are intersected with Y \ {u}; an absent minimum gives the empty set.
inline ForbiddenSetOracle hat_forbidden_sets(const InstanceBundle& hat) {
  detail::HatRoles roles = detail::HatRoles::of(hat);
  auto rule = [roles](const ElementSet& y, ElementId u) -> ElementSet {
    ElementSet f;
    const std::size_t i = roles.claw(u);
    if (i == 0) {
      f = {roles.top[0], roles.bottom[0]};
    } else {
      const bool is_top = roles.top[i - 1] == u;
      const bool leftmost =
          !y.contains(roles.infinity) && roles.full(y, i) && roles.next_full(y, 0) == i;
      if (leftmost) {
        if (std::size_t j = roles.next_full(y, i); j != 0) f = {roles.bottom[j - 1]};
      } else if (is_top) {
        f = {roles.bottom[i - 1]};
      }
      // Remaining bottom-edge cases either have t_i outside Y (empty set) or
      // put b_i outside MWB(Y), where the rule is never queried.
    }
    return f & y.without(u);
  };
  return ForbiddenSetOracle{rule, 2};
}

struct CertificateCase {
  std::string assignment;
  std::vector<Arrival> schedule;
  double p = 0.0;
  ElementSet forced;
  bool dependent = false;
};

struct ImpossibilityCertificate {
  std::size_t checked_assignments = 0;
  std::vector<CertificateCase> violations;
};

// Exhaustive check on the doubled triangle that no size-1 strong forbidden
// sets exist. Stage 1: for target e_{i,2}, every choice F(Y, e_{i,2}) = {f}
// with f other than e_{i,1} (and the empty choice) is refuted by sampling f,
// sending e_{i,1} first live and e_{i,2} next: both parallel edges are
// forced. Stage 2: with F(Y, e_{i,2}) = {e_{i,1}} for every i, sampling all
// e_{i,1} and sending e_{1,2}, e_{2,2}, e_{3,2} live forces a triangle.
inline ImpossibilityCertificate certify_no_size1_strong_fs() {
  const InstanceBundle g = double_triangle();
  auto edge = [&](int i, int j) {
    return g.at("e_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  };
  constexpr double kP = 0.25;
  ImpossibilityCertificate cert;

  auto run_case = [&](std::string assignment, std::vector<Arrival> arrivals,
                      const ForbiddenSetOracle& oracle) {
    ++cert.checked_assignments;
    ArrivalSchedule schedule = forced_schedule(arrivals);
    ElementSet forced;
    for (const ForcedAcceptance& f :
         forced_acceptances(arrival_records(schedule, kP), g.view, g.weights, oracle)) {
      forced.insert(f.element);
    }
    if (!is_independent(g.view, forced)) {
      cert.violations.push_back({std::move(assignment), std::move(arrivals), kP, forced, true});
    }
  };

  for (int i = 1; i <= 3; ++i) {
    const ElementId target = edge(i, 2);
    const ElementId partner = edge(i, 1);
    std::vector<std::optional<ElementId>> choices = {std::nullopt};
    for (ElementId f : g.view.ground() - ElementSet{target, partner}) choices.push_back(f);
    for (const std::optional<ElementId>& choice : choices) {
      ForbiddenSetOracle oracle{[=](const ElementSet& y, ElementId u) -> ElementSet {
                                  if (u != target || !choice) return {};
                                  return ElementSet{*choice} & y.without(u);
                                },
                                1};
      std::vector<Arrival> arrivals;
      if (choice) arrivals.push_back({*choice, 0.1});
      arrivals.push_back({partner, 0.5});
      arrivals.push_back({target, 0.75});
      const std::string label = g.weights.label(target);
      run_case("F(Y," + label + ")=" + (choice ? "{" + g.weights.label(*choice) + "}" : "{}"),
               std::move(arrivals), oracle);
    }
  }

  ForbiddenSetOracle parallel{[&](const ElementSet& y, ElementId u) -> ElementSet {
                                for (int i = 1; i <= 3; ++i) {
                                  if (u == edge(i, 2)) return ElementSet{edge(i, 1)} & y;
                                }
                                return {};
                              },
                              1};
  run_case("F(Y,e_{i,2})={e_{i,1}} for all i",
           {{edge(1, 1), 0.05},
            {edge(2, 1), 0.10},
            {edge(3, 1), 0.15},
            {edge(1, 2), 0.40},
            {edge(2, 2), 0.60},
            {edge(3, 2), 0.80}},
           parallel);
  return cert;
}

}  // namespace msp::analysis
