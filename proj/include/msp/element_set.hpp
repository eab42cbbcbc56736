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
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace msp {

// Ordinal index into a ground set. Ids of one ground set are 0..n-1.
enum class ElementId : std::uint32_t {};

constexpr ElementId element(std::size_t index) {
  return static_cast<ElementId>(static_cast<std::uint32_t>(index));
}

constexpr std::size_t index(ElementId id) {
  return static_cast<std::size_t>(id);
}

inline std::ostream& operator<<(std::ostream& os, ElementId id) {
  return os << index(id);
}

// Finite set of element ids, stored sorted and unique.
class ElementSet {
 public:
  using value_type = ElementId;
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;

  ElementSet(std::initializer_list<ElementId> ids) : items_(ids) { normalize(); }

  explicit ElementSet(std::vector<ElementId> ids) : items_(std::move(ids)) {
    normalize();
  }

  // {0, 1, ..., n-1}
  static ElementSet first_n(std::size_t n) {
    ElementSet out;
    out.items_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.items_.push_back(element(i));
    return out;
  }

  bool contains(ElementId id) const {
    return std::binary_search(items_.begin(), items_.end(), id);
  }

  // Returns false if the element was already present.
  bool insert(ElementId id) {
    auto it = std::lower_bound(items_.begin(), items_.end(), id);
    if (it != items_.end() && *it == id) return false;
    items_.insert(it, id);
    return true;
  }

  bool erase(ElementId id) {
    auto it = std::lower_bound(items_.begin(), items_.end(), id);
    if (it == items_.end() || *it != id) return false;
    items_.erase(it);
    return true;
  }

  ElementSet with(ElementId id) const {
    ElementSet out = *this;
    out.insert(id);
    return out;
  }

  ElementSet without(ElementId id) const {
    ElementSet out = *this;
    out.erase(id);
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  std::span<const ElementId> items() const { return items_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    out.items_.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out.items_));
    return out;
  }

  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out.items_));
    return out;
  }

  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out.items_));
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
    os << '{';
    bool first = true;
    for (ElementId id : s) {
      if (!first) os << ", ";
      os << id;
      first = false;
    }
    return os << '}';
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<ElementId> items_;
};

}  // namespace msp
