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
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msp/analysis/estimate.hpp"
#include "msp/analysis/forbidden.hpp"
#include "msp/analysis/hat_checks.hpp"
#include "msp/analysis/oracles.hpp"
#include "msp/element_set.hpp"
#include "msp/instances.hpp"
#include "msp/matroid.hpp"
#include "msp/policies.hpp"
#include "msp/rng.hpp"
#include "msp/simulation.hpp"

namespace msp::analysis {

struct SuiteParams {
  std::size_t cases = 200;
  std::uint64_t seed = 7;
  std::size_t n = 8;         // hat-graph suites
  std::size_t trials = 10000;
  double p = 0.5;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;  // cases with at least one failed check
  std::map<std::string, std::size_t> failures_by_check;
  std::vector<std::string> messages;  // first few failures only

  bool ok() const { return failures == 0; }

  void fail(const std::string& check, const std::string& what) {
    ++failures_by_check[check];
    if (messages.size() < 10) messages.push_back(check + ": " + what);
  }
};

// One member of the seeded fuzz corpus: a random graphic or uniform matroid,
// or a minor of a random graphic matroid, with distinct weights.
struct FuzzCase {
  std::string family;
  MatroidView view;
  WeightedGroundSet weights;
};

inline ElementSet random_subset(RandomStream& rng, const ElementSet& of) {
  ElementSet out;
  for (ElementId id : of) {
    if (rng.below(2) == 1) out.insert(id);
  }
  return out;
}

inline FuzzCase fuzz_case(RandomStream& rng, std::size_t max_elements) {
  if (max_elements == 0) throw std::invalid_argument("fuzz corpus needs >= 1 element");
  const std::uint64_t kind = rng.below(20);
  if (kind < 5) {
    const std::size_t n = 1 + rng.below(max_elements);
    const std::size_t k = rng.below(n + 1);
    InstanceBundle b = random_uniform(n, k, rng);
    return {"uniform", b.view, b.weights};
  }
  const std::size_t vertices = 1 + rng.below(6);
  const std::size_t edges = 1 + rng.below(max_elements);
  InstanceBundle b = random_graphic(vertices, edges, rng);
  if (kind < 16) return {"graphic", b.view, b.weights};
  MatroidView minor = restrict(b.view, random_subset(rng, b.view.ground()));
  minor = contract(minor, greedy_mwb(minor, b.weights, random_subset(rng, minor.ground())));
  return {"minor", minor, b.weights};
}

namespace detail {

inline std::string describe(const FuzzCase& c, const ElementSet& s) {
  std::ostringstream os;
  os << c.family << " ground " << c.view.ground() << " S " << s;
  return os.str();
}

}  // namespace detail

// Exhaustive axiom check over all subsets of each case's ground set
// (at most 10 elements): non-triviality, downward closure, augmentation,
// agreement with the DFS oracle, rank as largest independent subset, and
// span as the rank-preserving elements.
inline SuiteResult verify_matroid_axioms(const SuiteParams& params) {
  SuiteResult out{"matroid-axioms"};
  for (std::size_t c = 0; c < params.cases; ++c) {
    RandomStream rng = RandomStream::for_trial(params.seed, c);
    const FuzzCase fc = fuzz_case(rng, 10);
    const std::vector<ElementId> items(fc.view.ground().begin(), fc.view.ground().end());
    const std::size_t m = items.size();
    const std::uint32_t full = (1U << m) - 1;
    auto subset = [&](std::uint32_t mask) {
      ElementSet s;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1U) s.insert(items[i]);
      }
      return s;
    };
    std::vector<bool> indep(full + 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask) indep[mask] = is_independent(fc.view, subset(mask));
    std::size_t local = 0;
    auto fail = [&](const std::string& check, std::uint32_t mask) {
      ++local;
      out.fail(check, detail::describe(fc, subset(mask)));
    };
    if (!indep[0]) fail("empty-set-independent", 0);
    std::vector<int> best(full + 1, 0);  // largest independent subset size
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (indep[mask] != oracle_independent(fc.view, subset(mask))) fail("dfs-oracle", mask);
      if (indep[mask]) {
        best[mask] = __builtin_popcount(mask);
        for (std::size_t i = 0; i < m; ++i) {
          if ((mask >> i & 1U) && !indep[mask & ~(1U << i)]) fail("downward-closure", mask);
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1U) best[mask] = std::max(best[mask], best[mask & ~(1U << i)]);
      }
    }
    for (std::uint32_t a = 0; a <= full; ++a) {
      if (!indep[a]) continue;
      for (std::uint32_t b = 0; b <= full; ++b) {
        if (!indep[b] || __builtin_popcount(a) <= __builtin_popcount(b)) continue;
        bool augmented = false;
        for (std::size_t i = 0; i < m && !augmented; ++i) {
          const std::uint32_t bit = 1U << i;
          augmented = (a & bit) && !(b & bit) && indep[b | bit];
        }
        if (!augmented) fail("augmentation", a);
      }
    }
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const ElementSet s = subset(mask);
      if (rank(fc.view, s) != static_cast<std::size_t>(best[mask])) fail("rank", mask);
      ElementSet expected;
      for (std::size_t i = 0; i < m; ++i) {
        if (best[mask | (1U << i)] == best[mask]) expected.insert(items[i]);
      }
      if (span(fc.view, s) != expected) fail("span", mask);
    }
    ++out.cases;
    if (local > 0) ++out.failures;
  }
  return out;
}

// One randomized (S, T, u) draw per case, checking the basis-exchange lemmas
// the online policies rely on.
inline SuiteResult verify_mwb_lemmas(const SuiteParams& params) {
  SuiteResult out{"mwb-lemmas"};
  for (std::size_t c = 0; c < params.cases; ++c) {
    RandomStream rng = RandomStream::for_trial(params.seed, c);
    const FuzzCase fc = fuzz_case(rng, 10);
    const MatroidView& v = fc.view;
    const WeightedGroundSet& w = fc.weights;
    const ElementSet& ground = v.ground();
    ++out.cases;
    if (ground.empty()) continue;
    const ElementSet s = random_subset(rng, ground);
    const ElementSet t = random_subset(rng, s);
    const ElementSet other = random_subset(rng, ground);
    const ElementId u = ground.items()[rng.below(ground.size())];
    std::size_t local = 0;
    auto check = [&](bool ok, const std::string& name) {
      if (ok) return;
      ++local;
      std::ostringstream os;
      os << detail::describe(fc, s) << " T " << t << " u " << u;
      out.fail(name, os.str());
    };

    const ElementSet mwb_s = greedy_mwb(v, w, s);
    check(mwb_s == brute_force_mwb(v, w, s), "greedy-vs-brute-force");

    // MWBInSubset: MWB(S) & T is inside MWB(T); equality on a heaviest prefix.
    check((mwb_s & t).is_subset_of(greedy_mwb(v, w, t)), "mwb-in-subset");
    const std::vector<ElementId> order = w.sorted_desc(s);
    ElementSet prefix;
    if (!order.empty()) {
      const std::size_t cut = rng.below(order.size() + 1);
      for (std::size_t i = 0; i < cut; ++i) prefix.insert(order[i]);
    }
    check((mwb_s & prefix) == greedy_mwb(v, w, prefix), "mwb-in-subset-prefix");

    // MWBKickOutOne and MWBisMWBofMWB.
    const ElementSet mwb_su = greedy_mwb(v, w, s.with(u));
    check((mwb_s - mwb_su).size() <= 1, "mwb-kick-out-one");
    check(mwb_su == greedy_mwb(v, w, mwb_s.with(u)), "mwb-is-mwb-of-mwb");

    // SpanTheSame for an independent I and u, u2 outside span(I).
    const ElementSet indep = mwb_s;
    const ElementSet sp = span(v, indep);
    const ElementId u2 = ground.items()[rng.below(ground.size())];
    if (!sp.contains(u) && !sp.contains(u2) && span(v, indep.with(u2)).contains(u)) {
      check(span(v, indep.with(u)) == span(v, indep.with(u2)), "span-the-same");
    }

    // Rank: submodular, unit increments; span monotone.
    const std::size_t rs = rank(v, s);
    const std::size_t ro = rank(v, other);
    check(rs + ro >= rank(v, s | other) + rank(v, s & other), "rank-submodular");
    const std::size_t rsu = rank(v, s.with(u));
    check(rsu == rs || rsu == rs + 1, "rank-unit-increment");
    check(span(v, t).is_subset_of(span(v, s)), "span-monotone");

    // Greedy keeps u_i iff u_i is outside the span of what it kept before.
    ElementSet kept;
    for (ElementId x : order) {
      const bool accepted = mwb_s.contains(x);
      check(accepted == !span(v, kept).contains(x), "greedy-span-criterion");
      if (accepted) kept.insert(x);
    }
    if (local > 0) ++out.failures;
  }
  return out;
}

// Decision-for-decision equivalences between policies on seeded schedules:
// sample-contracted vs the greedy framework on mixed instances, and on
// k-uniform instances sample-contracted vs optimistic(k) and virtual-msp vs
// virtual-uniform(k), including the kicked element.
inline SuiteResult verify_equivalences(const SuiteParams& params) {
  SuiteResult out{"equivalences"};
  auto same_decisions = [](const DecisionTrace& a, const DecisionTrace& b, bool with_kicks) {
    if (a.accepted != b.accepted || a.records.size() != b.records.size()) return false;
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      if (a.records[i].accepted != b.records[i].accepted) return false;
      if (with_kicks && a.records[i].kicked != b.records[i].kicked) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < params.cases; ++c) {
    RandomStream rng = RandomStream::for_trial(params.seed, c);
    std::size_t local = 0;
    auto check = [&](bool ok, const std::string& name) {
      if (ok) return;
      ++local;
      out.fail(name, "case " + std::to_string(c));
    };
    const double p = 0.05 + 0.9 * rng.uniform01();

    const auto mixed = [&] {
      if (rng.below(2) == 0) return random_graphic(2 + rng.below(6), 1 + rng.below(12), rng);
      const std::size_t size = 1 + rng.below(12);
      return random_uniform(size, 1 + rng.below(size), rng);
    }();
    const ArrivalSchedule s1 = draw_schedule(mixed.weights, rng);
    const DecisionTrace sc = run_trial(parse_policy("sample-contracted"), mixed.view,
                                       mixed.weights, s1, p);
    const DecisionTrace gf = run_trial(parse_policy("greedy"), mixed.view, mixed.weights, s1, p);
    check(same_decisions(sc, gf, false), "sample-contracted=greedy");

    const std::size_t n = 1 + rng.below(15);
    const std::size_t k = 1 + rng.below(n);
    InstanceBundle uni = random_uniform(n, k, rng);
    const ArrivalSchedule s2 = draw_schedule(uni.weights, rng);
    const DecisionTrace usc =
        run_trial(parse_policy("sample-contracted"), uni.view, uni.weights, s2, p);
    const DecisionTrace opt = run_trial(parse_policy("optimistic", k), uni.view, uni.weights, s2, p);
    check(same_decisions(usc, opt, false), "sample-contracted=optimistic");
    const DecisionTrace vm = run_trial(parse_policy("virtual-msp"), uni.view, uni.weights, s2, p);
    const DecisionTrace vu =
        run_trial(parse_policy("virtual-uniform", k), uni.view, uni.weights, s2, p);
    check(same_decisions(vm, vu, true), "virtual-msp=virtual-uniform");
    if (k == 1) {
      const DecisionTrace dk = run_trial(parse_policy("dynkin"), uni.view, uni.weights, s2, p);
      check(same_decisions(dk, usc, false), "dynkin=sample-contracted");
    }
    ++out.cases;
    if (local > 0) ++out.failures;
  }
  return out;
}

// Claw-blocker lemmas on virtual-msp hat-graph traces. Only trials meeting
// the premise count as cases.
inline SuiteResult verify_claw_blocker(const SuiteParams& params) {
  SuiteResult out{"claw-blocker"};
  const InstanceBundle hat = hat_graph(params.n);
  run_trials(parse_policy("virtual-msp"), hat, params.p, 0, params.trials, params.seed,
             [&](std::size_t trial, const ArrivalSchedule&, const DecisionTrace& trace) {
               const ClawBlockerResult r = claw_blocker(trace, hat);
               if (!r.premise) return;
               ++out.cases;
               if (r.holds) return;
               ++out.failures;
               out.fail(r.infinity_accepted ? "claw-doubly-accepted" : "e_inf-rejected",
                        "trial " + std::to_string(trial));
             });
  return out;
}

// Forbidden-set table consistency and the first-after-sample implication on
// virtual-msp hat-graph traces; one case per trial.
inline SuiteResult verify_forbidden_consistency(const SuiteParams& params) {
  SuiteResult out{"forbidden-consistency"};
  const InstanceBundle hat = hat_graph(params.n);
  const ForbiddenSetOracle table = hat_forbidden_sets(hat);
  run_trials(parse_policy("virtual-msp"), hat, params.p, 0, params.trials, params.seed,
             [&](std::size_t trial, const ArrivalSchedule&, const DecisionTrace& trace) {
               ++out.cases;
               std::size_t local = 0;
               const ConsistencyResult t = check_forbidden_consistency(trace, table, hat.view,
                                                                       hat.weights);
               if (!t.consistent) {
                 ++local;
                 out.fail("hat-table", "trial " + std::to_string(trial) + " element " +
                                           hat.weights.label(t.first_violation->element));
               }
               if (!check_first_after_sample(trace, hat.view, hat.weights).consistent) {
                 ++local;
                 out.fail("first-after-sample", "trial " + std::to_string(trial));
               }
               if (local > 0) ++out.failures;
             });
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"matroid-axioms", "mwb-lemmas", "equivalences",
                                                 "claw-blocker", "forbidden-consistency"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
  if (name == "matroid-axioms") return verify_matroid_axioms(params);
  if (name == "mwb-lemmas") return verify_mwb_lemmas(params);
  if (name == "equivalences") return verify_equivalences(params);
  if (name == "claw-blocker") return verify_claw_blocker(params);
  if (name == "forbidden-consistency") return verify_forbidden_consistency(params);
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace msp::analysis
