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

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msp/instances.hpp"

namespace msp {

// Line-oriented instance format.
//
//   # comment                 (blank lines and '#' lines are ignored)
//   matroid uniform <n> <k>
//   element <id> <weight> [label]        one per element, ids 0..n-1
//
//   matroid graphic <V> <E>
//   edge <id> <u> <v> <weight> [label]   one per edge, ids 0..E-1,
//                                        vertices 0..V-1
//
// Weights are unsigned decimals ("3", "2.5"); they must be positive and
// pairwise distinct. Labels are single tokens and default to u<id>.
class InstanceFormatError : public std::runtime_error {
 public:
  InstanceFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

inline std::string format_weight(std::int64_t scaled, std::int64_t denominator) {
  std::string out = std::to_string(scaled / denominator);
  std::int64_t frac = scaled % denominator;
  if (frac == 0) return out;
  std::string digits;
  for (std::int64_t d = denominator; d > 1; d /= 10) {
    digits.insert(digits.begin(), static_cast<char>('0' + frac % 10));
    frac /= 10;
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  return out + "." + digits;
}

inline InstanceBundle read_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<BaseMatroid> base;
  std::size_t expected = 0;
  std::vector<std::optional<std::string>> weights;
  std::vector<std::string> labels;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints;
  std::size_t vertex_count = 0;

  auto parse_count = [&](const std::string& token) -> std::size_t {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw InstanceFormatError(line_no, "expected a natural number, got '" + token + "'");
    }
    return std::stoull(token);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (tokens[0] == "matroid") {
      if (base) throw InstanceFormatError(line_no, "duplicate header");
      if (tokens.size() != 4) throw InstanceFormatError(line_no, "malformed header");
      if (tokens[1] == "uniform") {
        expected = parse_count(tokens[2]);
        std::size_t k = parse_count(tokens[3]);
        if (k > expected) throw InstanceFormatError(line_no, "uniform rank exceeds size");
        base = UniformMatroid{expected, k};
      } else if (tokens[1] == "graphic") {
        vertex_count = parse_count(tokens[2]);
        expected = parse_count(tokens[3]);
        endpoints.assign(expected, {0, 0});
        base = GraphicMatroid{};
      } else {
        throw InstanceFormatError(line_no, "unknown matroid kind '" + tokens[1] + "'");
      }
      weights.assign(expected, std::nullopt);
      labels.assign(expected, "");
      continue;
    }
    if (!base) throw InstanceFormatError(line_no, "header must come first");

    const bool graphic = std::holds_alternative<GraphicMatroid>(*base);
    const std::string keyword = graphic ? "edge" : "element";
    const std::size_t fields = graphic ? 5 : 3;
    if (tokens[0] != keyword) {
      throw InstanceFormatError(line_no, "expected '" + keyword + "' line");
    }
    if (tokens.size() != fields && tokens.size() != fields + 1) {
      throw InstanceFormatError(line_no, "wrong number of fields");
    }
    std::size_t id = parse_count(tokens[1]);
    if (id >= expected) throw InstanceFormatError(line_no, "id out of range");
    if (weights[id]) throw InstanceFormatError(line_no, "duplicate id");
    if (graphic) {
      std::size_t a = parse_count(tokens[2]);
      std::size_t b = parse_count(tokens[3]);
      if (a >= vertex_count || b >= vertex_count) {
        throw InstanceFormatError(line_no, "vertex out of range");
      }
      endpoints[id] = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    }
    weights[id] = tokens[fields - 1];
    labels[id] = tokens.size() > fields ? tokens[fields] : "u" + std::to_string(id);
  }
  if (!base) throw InstanceFormatError(line_no, "missing header");
  std::vector<std::string> weight_text;
  for (std::size_t i = 0; i < expected; ++i) {
    if (!weights[i]) throw InstanceFormatError(line_no, "missing id " + std::to_string(i));
    weight_text.push_back(*weights[i]);
  }
  if (auto* g = std::get_if<GraphicMatroid>(&*base)) {
    g->vertex_count = vertex_count;
    g->endpoints = std::move(endpoints);
  }
  // Weight errors (ties, zero, bad decimals) are reported against the last line.
  WeightedGroundSet ws = [&] {
    try {
      return WeightedGroundSet::from_decimal_strings(weight_text, labels);
    } catch (const std::invalid_argument& e) {
      throw InstanceFormatError(line_no, e.what());
    }
  }();
  auto named = detail::name_all(ws.labels());
  return detail::make_bundle("file", expected, MatroidView(std::move(*base)), std::move(ws),
                             std::move(named));
}

inline InstanceBundle parse_instance(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

// Writes the base matroid of the bundle (minors are not representable).
inline void write_instance(std::ostream& out, const InstanceBundle& bundle) {
  const WeightedGroundSet& w = bundle.weights;
  auto label_suffix = [&](std::size_t i) {
    const std::string& label = w.label(element(i));
    return label == "u" + std::to_string(i) ? std::string() : " " + label;
  };
  if (const auto* u = std::get_if<UniformMatroid>(&bundle.view.base())) {
    out << "matroid uniform " << u->size << ' ' << u->rank << '\n';
    for (std::size_t i = 0; i < u->size; ++i) {
      out << "element " << i << ' '
          << format_weight(w.scaled(element(i)), w.denominator()) << label_suffix(i)
          << '\n';
    }
    return;
  }
  const auto& g = std::get<GraphicMatroid>(bundle.view.base());
  out << "matroid graphic " << g.vertex_count << ' ' << g.endpoints.size() << '\n';
  for (std::size_t i = 0; i < g.endpoints.size(); ++i) {
    out << "edge " << i << ' ' << g.endpoints[i].first << ' ' << g.endpoints[i].second << ' '
        << format_weight(w.scaled(element(i)), w.denominator()) << label_suffix(i) << '\n';
  }
}

}  // namespace msp
