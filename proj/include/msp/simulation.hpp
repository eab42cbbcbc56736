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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msp/element_set.hpp"
#include "msp/errors.hpp"
#include "msp/matroid.hpp"
#include "msp/policies.hpp"
#include "msp/rng.hpp"
#include "msp/weights.hpp"

namespace msp {

struct Arrival {
  ElementId element;
  double time = 0.0;

  friend bool operator==(const Arrival&, const Arrival&) = default;
};

// Arrival times of a set of elements and their ascending-time order. Equal
// times are ordered by element id.
class ArrivalSchedule {
 public:
  ArrivalSchedule() = default;

  explicit ArrivalSchedule(std::vector<Arrival> arrivals) : arrivals_(std::move(arrivals)) {
    std::sort(arrivals_.begin(), arrivals_.end(), [](const Arrival& a, const Arrival& b) {
      return a.time != b.time ? a.time < b.time : a.element < b.element;
    });
    std::size_t max_id = 0;
    for (const Arrival& a : arrivals_) max_id = std::max(max_id, index(a.element) + 1);
    time_by_id_.assign(max_id, std::numeric_limits<double>::quiet_NaN());
    for (const Arrival& a : arrivals_) {
      if (!std::isnan(time_by_id_[index(a.element)])) {
        throw std::invalid_argument("element scheduled twice");
      }
      time_by_id_[index(a.element)] = a.time;
    }
  }

  // Arrivals in time order.
  std::span<const Arrival> arrivals() const { return arrivals_; }
  std::size_t size() const { return arrivals_.size(); }

  std::vector<ElementId> order() const {
    std::vector<ElementId> out;
    out.reserve(arrivals_.size());
    for (const Arrival& a : arrivals_) out.push_back(a.element);
    return out;
  }

  bool has(ElementId id) const {
    return index(id) < time_by_id_.size() && !std::isnan(time_by_id_[index(id)]);
  }

  double time(ElementId id) const {
    if (!has(id)) throw std::out_of_range("element not scheduled");
    return time_by_id_[index(id)];
  }

  ElementSet elements() const {
    std::vector<ElementId> ids;
    for (const Arrival& a : arrivals_) ids.push_back(a.element);
    return ElementSet(std::move(ids));
  }

  // Elements arriving strictly before p.
  ElementSet before(double p) const {
    ElementSet out;
    for (const Arrival& a : arrivals_) {
      if (a.time < p) out.insert(a.element);
    }
    return out;
  }

 private:
  std::vector<Arrival> arrivals_;
  std::vector<double> time_by_id_;
};

// i.i.d. uniform arrival times for elements 0..n-1.
inline ArrivalSchedule draw_schedule(std::size_t n, RandomStream& rng) {
  std::vector<Arrival> arrivals;
  arrivals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) arrivals.push_back({element(i), rng.uniform01()});
  return ArrivalSchedule(std::move(arrivals));
}

inline ArrivalSchedule draw_schedule(const WeightedGroundSet& ground, RandomStream& rng) {
  return draw_schedule(ground.size(), rng);
}

// A fixed schedule. Times must lie in [0, 1] and be pairwise distinct.
inline ArrivalSchedule forced_schedule(std::vector<Arrival> assignments) {
  for (const Arrival& a : assignments) {
    if (!(a.time >= 0.0 && a.time <= 1.0)) {
      throw std::invalid_argument("arrival time outside [0, 1]");
    }
  }
  std::vector<double> times;
  for (const Arrival& a : assignments) times.push_back(a.time);
  std::sort(times.begin(), times.end());
  if (std::adjacent_find(times.begin(), times.end()) != times.end()) {
    throw std::invalid_argument("duplicate arrival time");
  }
  return ArrivalSchedule(std::move(assignments));
}

enum class Phase { kSample, kLive };

struct DecisionRecord {
  ElementId element;
  double time = 0.0;
  Phase phase = Phase::kSample;
  bool accepted = false;
  // Whether the element belongs to MWB(V_t + u) at its arrival.
  bool in_current_mwb = false;
  std::optional<ElementId> kicked;
  std::optional<bool> kicked_was_sample;

  friend bool operator==(const DecisionRecord&, const DecisionRecord&) = default;
};

struct DecisionTrace {
  std::vector<DecisionRecord> records;
  ElementSet accepted;
  ElementSet sample_set;

  friend bool operator==(const DecisionTrace&, const DecisionTrace&) = default;

  const DecisionRecord* find(ElementId id) const {
    for (const DecisionRecord& r : records) {
      if (r.element == id) return &r;
    }
    return nullptr;
  }

  // Accept/reject sequence in arrival order.
  std::vector<bool> decisions() const {
    std::vector<bool> out;
    out.reserve(records.size());
    for (const DecisionRecord& r : records) out.push_back(r.accepted);
    return out;
  }
};

// Runs one trial. Elements with t(u) < p are samples; the rest are offered
// live in time order. The accepted set is re-checked for independence after
// every acceptance and a violation throws HarnessViolation.
inline DecisionTrace run_trial(const PolicySpec& spec, const MatroidView& view,
                               const WeightedGroundSet& weights,
                               const ArrivalSchedule& schedule, double p,
                               PolicyOptions options = {}) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (schedule.elements() != view.ground()) {
    throw std::invalid_argument("schedule must cover the ground set exactly");
  }
  OnlinePolicy policy(spec, view, weights, options);
  DecisionTrace trace;
  trace.records.reserve(schedule.size());
  ElementSet mwb_seen;
  for (const Arrival& arrival : schedule.arrivals()) {
    const ElementId u = arrival.element;
    DecisionRecord rec;
    rec.element = u;
    rec.time = arrival.time;
    ElementSet next_mwb = greedy_mwb(view, weights, mwb_seen.with(u));
    rec.in_current_mwb = next_mwb.contains(u);
    if (arrival.time < p) {
      rec.phase = Phase::kSample;
      rec.kicked = policy.observe_sample(u);
    } else {
      rec.phase = Phase::kLive;
      Decision d = policy.decide(u);
      rec.kicked = d.kicked;
      if (d.accept) {
        trace.accepted.insert(u);
        if (!is_independent(view, trace.accepted)) {
          throw HarnessViolation(spec.name() + " accepted " + weights.label(u) +
                                 " making the accepted set dependent");
        }
        rec.accepted = true;
      }
    }
    if (rec.kicked) {
      if (*rec.kicked == u) throw HarnessViolation("policy kicked the arriving element");
      rec.kicked_was_sample = trace.sample_set.contains(*rec.kicked);
    }
    if (rec.phase == Phase::kSample) trace.sample_set.insert(u);
    mwb_seen = std::move(next_mwb);
    trace.records.push_back(rec);
  }
  return trace;
}

}  // namespace msp
