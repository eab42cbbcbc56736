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
#include <stdexcept>
#include <string>

#include "msp/instances.hpp"
#include "msp/simulation.hpp"

namespace msp::analysis {

struct ClawBlockerResult {
  bool premise = false;   // t_1, b_1 sampled and e_inf live
  bool holds = true;
  bool infinity_accepted = false;
  std::size_t doubly_accepted_claw = 0;  // first claw with both edges accepted before e_inf
};

// When t_1 and b_1 are samples and e_inf is not, no claw may have both edges
// accepted before e_inf arrives, and e_inf must be accepted.
inline ClawBlockerResult claw_blocker(const DecisionTrace& trace, const InstanceBundle& hat) {
  if (hat.family != "hat") throw std::invalid_argument("expected a hat graph instance");
  ClawBlockerResult out;
  const ElementId inf = hat.at("e_inf");
  const ElementSet& s = trace.sample_set;
  out.premise = s.contains(hat.at("t_1")) && s.contains(hat.at("b_1")) && !s.contains(inf);
  if (!out.premise) return out;
  ElementSet accepted_before;
  for (const DecisionRecord& r : trace.records) {
    if (r.element == inf) {
      out.infinity_accepted = r.accepted;
      break;
    }
    if (r.accepted) accepted_before.insert(r.element);
  }
  for (std::size_t i = 1; i <= hat.n; ++i) {
    if (accepted_before.contains(hat.at("t_" + std::to_string(i))) &&
        accepted_before.contains(hat.at("b_" + std::to_string(i)))) {
      out.doubly_accepted_claw = i;
      break;
    }
  }
  out.holds = out.infinity_accepted && out.doubly_accepted_claw == 0;
  return out;
}

inline bool check_claw_blocker(const DecisionTrace& trace, const InstanceBundle& hat) {
  return claw_blocker(trace, hat).holds;
}

struct ModifiedHatLemmaResult {
  std::size_t qualifying_claws = 0;
  std::size_t failing_claw = 0;  // first qualifying claw without 1_i and 4_i accepted
  bool holds = true;
};

// For each claw i with 2_i sampled, 1_i, 3_i, 4_i, e_inf live in that order,
// and some j < i with 2_j, 3_j, 4_j sampled: 1_i and 4_i must be accepted.
inline ModifiedHatLemmaResult modified_hat_lemma(const DecisionTrace& trace,
                                                 const InstanceBundle& bundle) {
  if (bundle.family != "modified-hat") {
    throw std::invalid_argument("expected a modified hat graph instance");
  }
  ModifiedHatLemmaResult out;
  auto id = [&](int c, std::size_t i) {
    return bundle.at(std::to_string(c) + "_" + std::to_string(i));
  };
  const ElementSet& s = trace.sample_set;
  auto time = [&](ElementId e) { return trace.find(e)->time; };
  const ElementId inf = bundle.at("e_inf");
  if (s.contains(inf)) return out;
  bool earlier_full_claw = false;
  for (std::size_t i = 1; i <= bundle.n; ++i) {
    const bool qualifies = earlier_full_claw && s.contains(id(2, i)) && !s.contains(id(1, i)) &&
                           !s.contains(id(3, i)) && !s.contains(id(4, i)) &&
                           time(id(1, i)) < time(id(3, i)) && time(id(3, i)) < time(id(4, i)) &&
                           time(id(4, i)) < time(inf);
    if (qualifies) {
      ++out.qualifying_claws;
      const bool ok = trace.accepted.contains(id(1, i)) && trace.accepted.contains(id(4, i));
      if (!ok && out.holds) {
        out.holds = false;
        out.failing_claw = i;
      }
    }
    if (s.contains(id(2, i)) && s.contains(id(3, i)) && s.contains(id(4, i))) {
      earlier_full_claw = true;
    }
  }
  return out;
}

inline bool check_modified_hat_lemma1(const DecisionTrace& trace, const InstanceBundle& bundle) {
  return modified_hat_lemma(trace, bundle).holds;
}

}  // namespace msp::analysis
