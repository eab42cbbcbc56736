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
#include <exception>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "msp/instances.hpp"
#include "msp/policies.hpp"
#include "msp/rng.hpp"
#include "msp/simulation.hpp"

namespace msp::analysis {

enum class BoundDirection { kLower, kUpper };

// 3-sigma normal-approximation radius of a frequency estimate.
inline double ci_radius_3sigma(double freq, std::size_t trials) {
  return 3.0 * std::sqrt(freq * (1.0 - freq) / static_cast<double>(trials));
}

struct EstimateReport {
  std::size_t trials = 0;
  std::map<ElementId, std::size_t> accept_counts;  // over MWB elements
  std::map<ElementId, double> per_element_accept_freq;
  std::map<ElementId, double> per_element_ci;
  double min_over_mwb = 0.0;
  std::optional<ElementId> argmin;
  double utility_ratio_mean = 0.0;
  double ci_radius_3sigma = 0.0;  // of min_over_mwb
  std::optional<double> analytic_bound;
  std::optional<BoundDirection> bound_direction;
};

// Order-independent tally over trials: integer counts and exact weight sums.
class EstimateAccumulator {
 public:
  explicit EstimateAccumulator(const InstanceBundle& bundle) : bundle_(&bundle) {}

  void add(const DecisionTrace& trace) {
    ++trials_;
    for (ElementId id : trace.accepted & bundle_->mwb) ++counts_[id];
    accepted_weight_ += bundle_->weights.scaled_total(trace.accepted);
  }

  void merge(const EstimateAccumulator& other) {
    trials_ += other.trials_;
    for (const auto& [id, c] : other.counts_) counts_[id] += c;
    accepted_weight_ += other.accepted_weight_;
  }

  std::size_t trials() const { return trials_; }

  EstimateReport report() const {
    if (trials_ == 0) throw std::logic_error("no trials recorded");
    EstimateReport r;
    r.trials = trials_;
    const auto n = static_cast<double>(trials_);
    bool first = true;
    for (ElementId id : bundle_->mwb) {
      auto it = counts_.find(id);
      const std::size_t c = it == counts_.end() ? 0 : it->second;
      const double f = static_cast<double>(c) / n;
      r.accept_counts[id] = c;
      r.per_element_accept_freq[id] = f;
      r.per_element_ci[id] = ci_radius_3sigma(f, trials_);
      if (first || f < r.min_over_mwb) {
        r.min_over_mwb = f;
        r.argmin = id;
        first = false;
      }
    }
    r.ci_radius_3sigma = ci_radius_3sigma(r.min_over_mwb, trials_);
    const auto optimum = static_cast<long double>(bundle_->weights.scaled_total(bundle_->mwb));
    r.utility_ratio_mean =
        static_cast<double>(static_cast<long double>(accepted_weight_) / (optimum * n));
    return r;
  }

 private:
  const InstanceBundle* bundle_;
  std::size_t trials_ = 0;
  std::map<ElementId, std::size_t> counts_;
  __int128 accepted_weight_ = 0;
};

// Runs trials [first, last) and hands each (trial, schedule, trace) to visit.
// Trial i draws its schedule from RandomStream::for_trial(seed, i).
template <class Visitor>
void run_trials(const PolicySpec& spec, const InstanceBundle& bundle, double p,
                std::size_t first, std::size_t last, std::uint64_t seed, Visitor&& visit,
                PolicyOptions options = {}) {
  for (std::size_t trial = first; trial < last; ++trial) {
    RandomStream rng = RandomStream::for_trial(seed, trial);
    ArrivalSchedule schedule = draw_schedule(bundle.weights, rng);
    DecisionTrace trace = run_trial(spec, bundle.view, bundle.weights, schedule, p, options);
    visit(trial, schedule, trace);
  }
}

// Monte Carlo estimate of per-element acceptance probabilities over the
// optimum and of the utility ratio. Trials may be spread over workers; the
// result does not depend on the worker count.
inline EstimateReport estimate(const PolicySpec& spec, const InstanceBundle& bundle, double p,
                               std::size_t trials, std::uint64_t seed, unsigned workers = 1,
                               PolicyOptions options = {}) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(trials)));
  std::vector<EstimateAccumulator> parts(workers, EstimateAccumulator(bundle));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    const std::size_t first = trials * w / workers;
    const std::size_t last = trials * (w + 1) / workers;
    try {
      run_trials(
          spec, bundle, p, first, last, seed,
          [&](std::size_t, const ArrivalSchedule&, const DecisionTrace& trace) {
            parts[w].add(trace);
          },
          options);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  EstimateAccumulator total(bundle);
  for (const EstimateAccumulator& part : parts) total.merge(part);
  return total.report();
}

}  // namespace msp::analysis
