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
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "msp/element_set.hpp"

namespace msp {

// Element weights of a ground set. Weights are exact positive rationals
// sharing one denominator (a power of ten), stored as scaled integers.
// All weights are pairwise distinct, so they induce a strict total order.
class WeightedGroundSet {
 public:
  WeightedGroundSet() = default;

  WeightedGroundSet(std::vector<std::int64_t> scaled, std::int64_t denominator,
                    std::vector<std::string> labels = {})
      : scaled_(std::move(scaled)),
        denominator_(denominator),
        labels_(std::move(labels)) {
    if (denominator_ <= 0) {
      throw std::invalid_argument("weight denominator must be positive");
    }
    if (labels_.empty()) {
      labels_.reserve(scaled_.size());
      for (std::size_t i = 0; i < scaled_.size(); ++i) {
        labels_.push_back("u" + std::to_string(i));
      }
    }
    if (labels_.size() != scaled_.size()) {
      throw std::invalid_argument("one label per element is required");
    }
    for (std::int64_t w : scaled_) {
      if (w <= 0) throw std::invalid_argument("weights must be positive");
    }
    order_.reserve(scaled_.size());
    for (std::size_t i = 0; i < scaled_.size(); ++i) order_.push_back(element(i));
    std::sort(order_.begin(), order_.end(), [this](ElementId a, ElementId b) {
      return scaled_[index(a)] > scaled_[index(b)];
    });
    for (std::size_t i = 1; i < order_.size(); ++i) {
      if (scaled_[index(order_[i - 1])] == scaled_[index(order_[i])]) {
        throw std::invalid_argument("weights must be pairwise distinct (" +
                                    labels_[index(order_[i - 1])] + ", " +
                                    labels_[index(order_[i])] + ")");
      }
    }
    position_.resize(scaled_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      position_[index(order_[i])] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      by_label_.emplace(labels_[i], element(i));
    }
  }

  static WeightedGroundSet from_integers(std::vector<std::int64_t> weights,
                                         std::vector<std::string> labels = {}) {
    return WeightedGroundSet(std::move(weights), 1, std::move(labels));
  }

  // Parses unsigned decimal strings such as "3", "2.5" or "0.125". The common
  // denominator is 10^(longest fractional part).
  static WeightedGroundSet from_decimal_strings(
      const std::vector<std::string>& weights,
      std::vector<std::string> labels = {}) {
    std::size_t max_fraction = 0;
    for (const std::string& w : weights) {
      auto dot = w.find('.');
      if (dot != std::string::npos) {
        max_fraction = std::max(max_fraction, w.size() - dot - 1);
      }
    }
    if (max_fraction > 12) {
      throw std::invalid_argument("at most 12 fractional digits supported");
    }
    std::int64_t denominator = 1;
    for (std::size_t i = 0; i < max_fraction; ++i) denominator *= 10;
    std::vector<std::int64_t> scaled;
    scaled.reserve(weights.size());
    for (const std::string& w : weights) {
      scaled.push_back(parse_scaled(w, max_fraction));
    }
    return WeightedGroundSet(std::move(scaled), denominator, std::move(labels));
  }

  std::size_t size() const { return scaled_.size(); }
  std::int64_t denominator() const { return denominator_; }
  std::int64_t scaled(ElementId id) const { return scaled_.at(index(id)); }
  double value(ElementId id) const {
    return static_cast<double>(scaled(id)) / static_cast<double>(denominator_);
  }
  const std::string& label(ElementId id) const { return labels_.at(index(id)); }

  std::optional<ElementId> find(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
  }

  // 0 for the heaviest element.
  std::uint32_t position(ElementId id) const { return position_.at(index(id)); }

  bool heavier(ElementId a, ElementId b) const {
    return position(a) < position(b);
  }

  // All ids, heaviest first.
  std::span<const ElementId> by_weight_desc() const { return order_; }

  std::vector<ElementId> sorted_desc(const ElementSet& s) const {
    std::vector<ElementId> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(),
              [this](ElementId a, ElementId b) { return heavier(a, b); });
    return out;
  }

  std::optional<ElementId> heaviest(const ElementSet& s) const {
    if (s.empty()) return std::nullopt;
    return *std::min_element(s.begin(), s.end(), [this](ElementId a, ElementId b) {
      return heavier(a, b);
    });
  }

  std::optional<ElementId> lightest(const ElementSet& s) const {
    if (s.empty()) return std::nullopt;
    return *std::max_element(s.begin(), s.end(), [this](ElementId a, ElementId b) {
      return heavier(a, b);
    });
  }

  // Exact sum in units of 1/denominator().
  std::int64_t scaled_total(const ElementSet& s) const {
    std::int64_t total = 0;
    for (ElementId id : s) {
      if (total > std::numeric_limits<std::int64_t>::max() - scaled(id)) {
        throw std::overflow_error("weight sum overflows");
      }
      total += scaled(id);
    }
    return total;
  }

  const std::vector<std::string>& labels() const { return labels_; }

 private:
  static std::int64_t parse_scaled(std::string_view text, std::size_t fraction) {
    if (text.empty()) throw std::invalid_argument("empty weight");
    std::int64_t value = 0;
    std::size_t digits_after_dot = 0;
    bool seen_dot = false;
    bool seen_digit = false;
    for (char c : text) {
      if (c == '.') {
        if (seen_dot) throw std::invalid_argument("malformed weight: " + std::string(text));
        seen_dot = true;
        continue;
      }
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed weight: " + std::string(text));
      }
      seen_digit = true;
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
        throw std::overflow_error("weight too large: " + std::string(text));
      }
      value = value * 10 + (c - '0');
      if (seen_dot) ++digits_after_dot;
    }
    if (!seen_digit) throw std::invalid_argument("malformed weight: " + std::string(text));
    for (std::size_t i = digits_after_dot; i < fraction; ++i) {
      if (value > std::numeric_limits<std::int64_t>::max() / 10) {
        throw std::overflow_error("weight too large: " + std::string(text));
      }
      value *= 10;
    }
    return value;
  }

  std::vector<std::int64_t> scaled_;
  std::int64_t denominator_ = 1;
  std::vector<std::string> labels_;
  std::vector<ElementId> order_;
  std::vector<std::uint32_t> position_;
  std::unordered_map<std::string, ElementId> by_label_;
};

}  // namespace msp
