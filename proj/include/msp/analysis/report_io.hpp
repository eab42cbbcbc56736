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
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "msp/analysis/estimate.hpp"
#include "msp/analysis/forbidden.hpp"
#include "msp/instances.hpp"
#include "msp/trace_io.hpp"

namespace msp::analysis {

inline const char* to_string(BoundDirection d) {
  return d == BoundDirection::kLower ? "lower" : "upper";
}

// Frequencies are keyed by element label; MWB order (heaviest first) is kept.
inline nlohmann::ordered_json to_json(const EstimateReport& r, const InstanceBundle& bundle) {
  nlohmann::ordered_json j;
  j["trials"] = r.trials;
  nlohmann::ordered_json freq = nlohmann::ordered_json::object();
  nlohmann::ordered_json ci = nlohmann::ordered_json::object();
  for (ElementId id : bundle.weights.sorted_desc(bundle.mwb)) {
    freq[bundle.weights.label(id)] = round_sig9(r.per_element_accept_freq.at(id));
    ci[bundle.weights.label(id)] = round_sig9(r.per_element_ci.at(id));
  }
  j["perElementAcceptFreq"] = freq;
  j["perElementCi"] = ci;
  j["minOverMwb"] = round_sig9(r.min_over_mwb);
  j["argminElement"] = r.argmin ? nlohmann::ordered_json(bundle.weights.label(*r.argmin)) : nullptr;
  j["utilityRatioMean"] = round_sig9(r.utility_ratio_mean);
  j["ciRadius3Sigma"] = round_sig9(r.ci_radius_3sigma);
  j["analyticBound"] = r.analytic_bound ? nlohmann::ordered_json(round_sig9(*r.analytic_bound)) : nullptr;
  j["boundDirection"] =
      r.bound_direction ? nlohmann::ordered_json(to_string(*r.bound_direction)) : nullptr;
  return j;
}

inline std::string format_sig9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

inline constexpr const char* kSweepCsvHeader = "instance,n,policy,p,trials,element,freq,ci,bound";

struct SweepRow {
  std::string instance;
  std::size_t n = 0;
  std::string policy;
  double p = 0.0;
  std::size_t trials = 0;
  std::string element;
  double freq = 0.0;
  double ci = 0.0;
  std::optional<double> bound;
};

// Labels never contain commas in the built-in families; quote them anyway
// when a file-supplied label does.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline void write_csv_row(std::ostream& out, const SweepRow& r) {
  out << csv_field(r.instance) << ',' << r.n << ',' << csv_field(r.policy) << ','
      << format_sig9(r.p) << ',' << r.trials << ',' << csv_field(r.element) << ','
      << format_sig9(r.freq) << ',' << format_sig9(r.ci) << ','
      << (r.bound ? format_sig9(*r.bound) : std::string()) << '\n';
}

inline nlohmann::ordered_json to_json(const ImpossibilityCertificate& cert,
                                      const InstanceBundle& g) {
  nlohmann::ordered_json j;
  j["checkedAssignments"] = cert.checked_assignments;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CertificateCase& c : cert.violations) {
    nlohmann::ordered_json v;
    v["assignment"] = c.assignment;
    v["p"] = round_sig9(c.p);
    nlohmann::ordered_json sched = nlohmann::ordered_json::array();
    for (const Arrival& a : c.schedule) {
      sched.push_back({{"element", g.weights.label(a.element)}, {"time", round_sig9(a.time)}});
    }
    v["schedule"] = sched;
    nlohmann::ordered_json forced = nlohmann::ordered_json::array();
    for (ElementId id : c.forced) forced.push_back(g.weights.label(id));
    v["forcedAccepted"] = forced;
    v["dependent"] = c.dependent;
    list.push_back(v);
  }
  j["violations"] = list;
  return j;
}

}  // namespace msp::analysis
