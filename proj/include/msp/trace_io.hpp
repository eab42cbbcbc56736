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

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "msp/simulation.hpp"

namespace msp {

// Serialized floats carry 9 significant digits so output is diff-stable.
inline double round_sig9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::stod(buf);
}

inline nlohmann::ordered_json to_json(const DecisionRecord& r) {
  nlohmann::ordered_json j;
  j["element"] = index(r.element);
  j["time"] = round_sig9(r.time);
  j["phase"] = r.phase == Phase::kSample ? "sample" : "live";
  j["accepted"] = r.accepted;
  j["inCurrentMwb"] = r.in_current_mwb;
  j["kicked"] = r.kicked ? nlohmann::ordered_json(index(*r.kicked)) : nullptr;
  j["kickedWasSample"] =
      r.kicked_was_sample ? nlohmann::ordered_json(*r.kicked_was_sample) : nullptr;
  return j;
}

inline DecisionRecord record_from_json(const nlohmann::json& j) {
  DecisionRecord r;
  r.element = element(j.at("element").get<std::size_t>());
  r.time = j.at("time").get<double>();
  const std::string phase = j.at("phase").get<std::string>();
  if (phase != "sample" && phase != "live") throw std::invalid_argument("bad phase " + phase);
  r.phase = phase == "sample" ? Phase::kSample : Phase::kLive;
  r.accepted = j.at("accepted").get<bool>();
  r.in_current_mwb = j.at("inCurrentMwb").get<bool>();
  if (!j.at("kicked").is_null()) r.kicked = element(j.at("kicked").get<std::size_t>());
  if (!j.at("kickedWasSample").is_null()) r.kicked_was_sample = j.at("kickedWasSample").get<bool>();
  if (r.phase == Phase::kSample && r.accepted) {
    throw std::invalid_argument("sample-phase record marked accepted");
  }
  return r;
}

// One JSON object per line, in arrival order.
inline void write_trace_jsonl(std::ostream& out, const DecisionTrace& trace) {
  for (const DecisionRecord& r : trace.records) out << to_json(r).dump() << '\n';
}

inline DecisionTrace read_trace_jsonl(std::istream& in) {
  DecisionTrace trace;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    DecisionRecord r = record_from_json(nlohmann::json::parse(line));
    if (r.accepted) trace.accepted.insert(r.element);
    if (r.phase == Phase::kSample) trace.sample_set.insert(r.element);
    trace.records.push_back(r);
  }
  return trace;
}

// "schedule <id> <time>" per arrival, in time order.
inline void write_schedule(std::ostream& out, const ArrivalSchedule& schedule) {
  char buf[32];
  for (const Arrival& a : schedule.arrivals()) {
    std::snprintf(buf, sizeof buf, "%.17g", a.time);
    out << "schedule " << index(a.element) << ' ' << buf << '\n';
  }
}

inline ArrivalSchedule read_schedule(std::istream& in) {
  std::vector<Arrival> arrivals;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword) || keyword[0] == '#') continue;
    std::size_t id = 0;
    double t = 0.0;
    if (keyword != "schedule" || !(ss >> id >> t)) {
      throw std::invalid_argument("malformed schedule line: " + line);
    }
    arrivals.push_back({element(id), t});
  }
  return forced_schedule(std::move(arrivals));
}

}  // namespace msp
