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

#include <cmath>
#include <optional>

#include "msp/analysis/bounds.hpp"
#include "msp/analysis/estimate.hpp"
#include "msp/instances.hpp"
#include "msp/policies.hpp"

namespace msp::analysis {

struct KnownBound {
  double value = 0.0;
  BoundDirection direction = BoundDirection::kLower;
};

// Analytic bound on the acceptance probability of one MWB element, where the
// instance family and policy have one. Unknown combinations give nullopt.
inline std::optional<KnownBound> element_bound(const InstanceBundle& bundle,
                                               const PolicySpec& spec, double p, ElementId u) {
  if (!(p > 0.0 && p < 1.0)) return std::nullopt;
  if (spec.kind == PolicyKind::kVirtualMsp) {
    if (bundle.family == "hat" && u == bundle.at("e_inf")) {
      return KnownBound{p * p * (1.0 - p), BoundDirection::kLower};
    }
    if (bundle.family == "modified-hat" && u == bundle.at("e_inf")) {
      return KnownBound{1.0 - modified_hat_bounds(bundle.n, p).rejection_lower_bound,
                        BoundDirection::kUpper};
    }
  }
  // On a 1-uniform matroid these policies all wait for the first live element
  // above the best sample.
  const bool single_choice = spec.kind == PolicyKind::kDynkin ||
                             spec.kind == PolicyKind::kSample ||
                             spec.kind == PolicyKind::kSampleContracted;
  if (single_choice && bundle.family == "uniform" && bundle.mwb.size() == 1 &&
      u == *bundle.mwb.begin()) {
    return KnownBound{p * std::log(1.0 / p), BoundDirection::kLower};
  }
  return std::nullopt;
}

// Bound on min over MWB of the acceptance probability.
inline std::optional<KnownBound> min_over_mwb_bound(const InstanceBundle& bundle,
                                                    const PolicySpec& spec, double p) {
  if (spec.kind == PolicyKind::kVirtualMsp && bundle.family == "hat" && p == 0.5) {
    return KnownBound{alpha_p(2).alpha, BoundDirection::kLower};
  }
  if (bundle.mwb.size() == 1) return element_bound(bundle, spec, p, *bundle.mwb.begin());
  return std::nullopt;
}

inline void attach_known_bound(EstimateReport& report, const InstanceBundle& bundle,
                               const PolicySpec& spec, double p) {
  if (auto b = min_over_mwb_bound(bundle, spec, p)) {
    report.analytic_bound = b->value;
    report.bound_direction = b->direction;
  }
}

}  // namespace msp::analysis
