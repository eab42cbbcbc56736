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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "msp/element_set.hpp"
#include "msp/errors.hpp"
#include "msp/matroid.hpp"
#include "msp/weights.hpp"

namespace msp {

enum class PolicyKind {
  kDynkin,
  kOptimistic,
  kVirtualUniform,
  kSample,
  kSampleContracted,
  kGreedyFramework,
  kVirtualMsp,
};

// How the greedy framework builds its reference set I_t. Only one rule
// ships: I_t = MWB((M / A_t)|_S) + A_t.
enum class ReferenceRule { kSampleContracted };

struct PolicySpec {
  PolicyKind kind = PolicyKind::kVirtualMsp;
  std::size_t k = 1;  // dynkin, optimistic, virtual-uniform
  ReferenceRule reference = ReferenceRule::kSampleContracted;

  std::string name() const {
    switch (kind) {
      case PolicyKind::kDynkin: return "dynkin";
      case PolicyKind::kOptimistic: return "optimistic";
      case PolicyKind::kVirtualUniform: return "virtual-uniform";
      case PolicyKind::kSample: return "sample";
      case PolicyKind::kSampleContracted: return "sample-contracted";
      case PolicyKind::kGreedyFramework: return "greedy";
      case PolicyKind::kVirtualMsp: return "virtual-msp";
    }
    return "?";
  }
};

inline PolicySpec parse_policy(std::string_view name, std::size_t k = 1,
                               std::string_view reference = "sample-contracted") {
  PolicySpec spec;
  spec.k = k;
  if (name == "dynkin") {
    spec.kind = PolicyKind::kDynkin;
    spec.k = 1;
  } else if (name == "optimistic") {
    spec.kind = PolicyKind::kOptimistic;
  } else if (name == "virtual-uniform") {
    spec.kind = PolicyKind::kVirtualUniform;
  } else if (name == "sample") {
    spec.kind = PolicyKind::kSample;
  } else if (name == "sample-contracted") {
    spec.kind = PolicyKind::kSampleContracted;
  } else if (name == "greedy" || name == "greedy-framework") {
    spec.kind = PolicyKind::kGreedyFramework;
  } else if (name == "virtual-msp") {
    spec.kind = PolicyKind::kVirtualMsp;
  } else {
    throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
  }
  if (reference != "sample-contracted") {
    throw std::invalid_argument("unknown reference rule '" + std::string(reference) + "'");
  }
  if ((spec.kind == PolicyKind::kOptimistic || spec.kind == PolicyKind::kVirtualUniform) &&
      spec.k == 0) {
    throw std::invalid_argument("k must be positive");
  }
  return spec;
}

// What a policy knows at an arrival: everything revealed so far and its own
// decisions. `reference` depends on the policy:
//   dynkin              heaviest sample
//   optimistic          remaining reference list R (heaviest samples)
//   virtual-uniform     k heaviest elements seen so far
//   sample              MWB(S)
//   sample-contracted   MWB((M / A_t)|_S)
//   greedy              I_t
//   virtual-msp         MWB(V_t)
struct PolicyState {
  ElementSet samples;
  ElementSet accepted;
  ElementSet seen;
  ElementSet reference;
};

struct Decision {
  bool accept = false;
  // Element leaving the reference set because of this arrival.
  std::optional<ElementId> kicked;
  // Whether the arriving element enters the reference set.
  bool enters_reference = false;
};

namespace detail {

inline std::optional<ElementId> single_kicked(const ElementSet& before,
                                              const ElementSet& after) {
  ElementSet gone = before - after;
  if (gone.size() > 1) {
    throw PolicyViolation("more than one element left a max-weight basis");
  }
  if (gone.empty()) return std::nullopt;
  return *gone.begin();
}

}  // namespace detail

// Accept the first live element heavier than every sample.
inline Decision decide_dynkin(const PolicyState& state, ElementId u,
                              const WeightedGroundSet& weights) {
  Decision d;
  auto best_sample = weights.heaviest(state.reference);
  d.accept = state.accepted.empty() && (!best_sample || weights.heavier(u, *best_sample));
  return d;
}

// Threshold is the (k - i)-th heaviest sample after i acceptances. When
// fewer samples than that exist, the threshold is empty and u passes.
inline Decision decide_optimistic(const PolicyState& state, ElementId u, std::size_t k,
                                  const WeightedGroundSet& weights) {
  Decision d;
  const std::size_t taken = state.accepted.size();
  if (taken >= k) return d;
  const std::size_t slots = k - taken;
  if (state.reference.size() < slots) {
    d.accept = true;
    return d;
  }
  ElementId last = *weights.lightest(state.reference);
  if (weights.heavier(u, last)) {
    d.accept = true;
    d.kicked = last;
  }
  return d;
}

// Reference is the k heaviest elements seen; u replaces the lightest of them
// when heavier, and is accepted only if the replaced one was a sample.
inline Decision decide_virtual_uniform(const PolicyState& state, ElementId u, std::size_t k,
                                       const WeightedGroundSet& weights) {
  Decision d;
  if (state.reference.size() < k) {
    d.accept = true;
    d.enters_reference = true;
    return d;
  }
  ElementId last = *weights.lightest(state.reference);
  if (weights.heavier(u, last)) {
    d.enters_reference = true;
    d.kicked = last;
    d.accept = state.samples.contains(last);
  }
  return d;
}

// Accept iff A_t + u is independent and u is in MWB(S + u).
inline Decision decide_sample(const PolicyState& state, ElementId u, const MatroidView& view,
                              const WeightedGroundSet& weights) {
  Decision d;
  ElementSet with_u = greedy_mwb(view, weights, state.samples.with(u));
  d.kicked = detail::single_kicked(state.reference, with_u);
  d.accept = with_u.contains(u) && is_independent(view, state.accepted.with(u));
  return d;
}

// Accept iff u is in MWB((M / A_t)|_{S + u}), recomputed from scratch.
inline Decision decide_sample_contracted(const PolicyState& state, ElementId u,
                                         const MatroidView& view,
                                         const WeightedGroundSet& weights) {
  Decision d;
  MatroidView contracted = contract(view, state.accepted);
  ElementSet with_u = greedy_mwb(contracted, weights, state.samples.with(u));
  d.kicked = detail::single_kicked(state.reference, with_u);
  d.accept = with_u.contains(u);
  return d;
}

// Reference set of the greedy framework under the given rule.
inline ElementSet greedy_reference(ReferenceRule rule, const MatroidView& view,
                                   const WeightedGroundSet& weights, const ElementSet& samples,
                                   const ElementSet& accepted) {
  switch (rule) {
    case ReferenceRule::kSampleContracted:
      return greedy_mwb(contract(view, accepted), weights, samples) | accepted;
  }
  throw std::logic_error("unknown reference rule");
}

// Throws PolicyViolation unless A_t <= I_t <= A_t + S, I_t is independent and
// every element seen so far lies in span(I_t).
inline void check_greedy_reference(const PolicyState& state, const MatroidView& view) {
  const ElementSet& ref = state.reference;
  if (!state.accepted.is_subset_of(ref)) {
    throw PolicyViolation("reference set misses an accepted element");
  }
  if (!ref.is_subset_of(state.accepted | state.samples)) {
    throw PolicyViolation("reference set holds a rejected live element");
  }
  if (!is_independent(view, ref)) {
    throw PolicyViolation("reference set is dependent");
  }
  if (!state.seen.is_subset_of(span(view, ref))) {
    throw PolicyViolation("reference set does not span the arrived elements");
  }
}

// Accept iff u is in MWB((M|_{I_t + u}) / A_t).
inline Decision decide_greedy_framework(const PolicyState& state, ElementId u,
                                        const MatroidView& view,
                                        const WeightedGroundSet& weights, ReferenceRule rule,
                                        bool check_invariants = true) {
  (void)rule;
  if (check_invariants) check_greedy_reference(state, view);
  Decision d;
  const ElementSet local = state.reference.with(u);
  MatroidView minor = contract(restrict(view, local), state.accepted);
  ElementSet mwb = greedy_mwb(minor, weights, local - state.accepted);
  d.kicked = detail::single_kicked(state.reference - state.accepted, mwb);
  d.accept = mwb.contains(u);
  return d;
}

// Accept iff A_t + u is independent, u is in MWB(V_t + u), and the element
// kicked out of MWB(V_t), if any, is a sample. The reference MWB(V_t) is
// updated as MWB(MWB(V_t) + u) whatever the decision.
inline Decision decide_virtual_msp(const PolicyState& state, ElementId u,
                                   const MatroidView& view,
                                   const WeightedGroundSet& weights) {
  Decision d;
  ElementSet next = greedy_mwb(view, weights, state.reference.with(u));
  d.kicked = detail::single_kicked(state.reference, next);
  d.enters_reference = next.contains(u);
  d.accept = d.enters_reference && (!d.kicked || state.samples.contains(*d.kicked)) &&
             is_independent(view, state.accepted.with(u));
  return d;
}

struct PolicyOptions {
  // Recompute incrementally maintained references from scratch and compare.
  bool cross_check = false;
  // Assert the greedy framework's reference-set invariants at each arrival.
  bool check_invariants = true;
};

// One policy instance per trial. Elements are fed in arrival order; the
// policy sees nothing else.
class OnlinePolicy {
 public:
  OnlinePolicy(PolicySpec spec, const MatroidView& view, const WeightedGroundSet& weights,
               PolicyOptions options = {})
      : spec_(spec), view_(&view), weights_(&weights), options_(options) {}

  const PolicySpec& spec() const { return spec_; }
  const PolicyState& state() const { return state_; }

  // Sampling-phase arrival: stored, never accepted. Returns the element that
  // left the reference set, if any.
  std::optional<ElementId> observe_sample(ElementId u) {
    std::optional<ElementId> kicked;
    const ElementSet before = state_.reference;
    switch (spec_.kind) {
      case PolicyKind::kDynkin: {
        auto best = weights_->heaviest(state_.reference);
        if (!best || weights_->heavier(u, *best)) state_.reference = {u};
        break;
      }
      case PolicyKind::kOptimistic:
      case PolicyKind::kVirtualUniform: {
        state_.reference.insert(u);
        if (state_.reference.size() > spec_.k) {
          state_.reference.erase(*weights_->lightest(state_.reference));
        }
        break;
      }
      case PolicyKind::kSample:
      case PolicyKind::kSampleContracted:
      case PolicyKind::kGreedyFramework:
      case PolicyKind::kVirtualMsp:
        // No acceptances yet, so every reference is MWB of what was seen.
        state_.reference = greedy_mwb(*view_, *weights_, state_.reference.with(u));
        break;
    }
    kicked = detail::single_kicked(before, state_.reference);
    state_.samples.insert(u);
    state_.seen.insert(u);
    cross_check(u);
    return kicked;
  }

  Decision decide(ElementId u) {
    Decision d;
    switch (spec_.kind) {
      case PolicyKind::kDynkin:
        d = decide_dynkin(state_, u, *weights_);
        break;
      case PolicyKind::kOptimistic:
        d = decide_optimistic(state_, u, spec_.k, *weights_);
        break;
      case PolicyKind::kVirtualUniform:
        d = decide_virtual_uniform(state_, u, spec_.k, *weights_);
        break;
      case PolicyKind::kSample:
        d = decide_sample(state_, u, *view_, *weights_);
        break;
      case PolicyKind::kSampleContracted:
        d = decide_sample_contracted(state_, u, *view_, *weights_);
        break;
      case PolicyKind::kGreedyFramework:
        d = decide_greedy_framework(state_, u, *view_, *weights_, spec_.reference,
                                    options_.check_invariants);
        break;
      case PolicyKind::kVirtualMsp:
        d = decide_virtual_msp(state_, u, *view_, *weights_);
        break;
    }
    apply(u, d);
    state_.seen.insert(u);
    cross_check(u);
    return d;
  }

 private:
  void apply(ElementId u, const Decision& d) {
    if (d.accept) state_.accepted.insert(u);
    switch (spec_.kind) {
      case PolicyKind::kDynkin:
      case PolicyKind::kSample:
        break;
      case PolicyKind::kOptimistic:
        // Never refilled; only trimmed to the remaining capacity.
        while (!state_.reference.empty() &&
               state_.reference.size() + state_.accepted.size() > spec_.k) {
          state_.reference.erase(*weights_->lightest(state_.reference));
        }
        break;
      case PolicyKind::kVirtualUniform:
      case PolicyKind::kVirtualMsp:
        if (d.kicked) state_.reference.erase(*d.kicked);
        if (d.enters_reference) state_.reference.insert(u);
        break;
      case PolicyKind::kSampleContracted:
        if (d.accept) {
          state_.reference =
              greedy_mwb(contract(*view_, state_.accepted), *weights_, state_.samples);
        }
        break;
      case PolicyKind::kGreedyFramework:
        if (d.accept) {
          state_.reference = greedy_reference(spec_.reference, *view_, *weights_,
                                               state_.samples, state_.accepted);
        }
        break;
    }
  }

  void cross_check(ElementId u) {
    if (!options_.cross_check || spec_.kind != PolicyKind::kVirtualMsp) return;
    ElementSet scratch = greedy_mwb(*view_, *weights_, state_.seen);
    if (scratch != state_.reference) {
      throw PolicyViolation("incremental MWB(V_t) diverged after element " +
                            weights_->label(u));
    }
  }

  PolicySpec spec_;
  const MatroidView* view_;
  const WeightedGroundSet* weights_;
  PolicyOptions options_;
  PolicyState state_;
};

}  // namespace msp
