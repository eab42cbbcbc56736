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
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "msp/element_set.hpp"
#include "msp/weights.hpp"

namespace msp {

struct UniformMatroid {
  std::size_t size = 0;
  std::size_t rank = 0;
};

// Edge e has endpoints[e]. Parallel edges and self-loops are allowed; a
// self-loop is dependent on its own.
struct GraphicMatroid {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints;
};

using BaseMatroid = std::variant<UniformMatroid, GraphicMatroid>;

inline std::size_t ground_size(const BaseMatroid& base) {
  return std::visit(
      [](const auto& m) -> std::size_t {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, UniformMatroid>) {
          return m.size;
        } else {
          return m.endpoints.size();
        }
      },
      base);
}

inline void validate(const BaseMatroid& base) {
  if (const auto* u = std::get_if<UniformMatroid>(&base)) {
    if (u->rank > u->size) {
      throw std::invalid_argument("uniform matroid needs k <= n");
    }
    return;
  }
  const auto& g = std::get<GraphicMatroid>(base);
  for (const auto& [a, b] : g.endpoints) {
    if (a >= g.vertex_count || b >= g.vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

// Union-find with path compression and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::uint32_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // False if a and b were already connected.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

// Grows an independent set of the base matroid one element at a time.
// Callers must not offer the same element twice.
class IndependentSetBuilder {
 public:
  explicit IndependentSetBuilder(const BaseMatroid& base)
      : base_(&base),
        forest_(std::holds_alternative<GraphicMatroid>(base)
                    ? std::get<GraphicMatroid>(base).vertex_count
                    : 0) {}

  bool can_add(ElementId id) {
    if (const auto* u = std::get_if<UniformMatroid>(base_)) {
      return count_ < u->rank;
    }
    const auto& [a, b] = std::get<GraphicMatroid>(*base_).endpoints[index(id)];
    return forest_.find(a) != forest_.find(b);
  }

  // Adds the element if the result stays independent.
  bool add(ElementId id) {
    if (const auto* u = std::get_if<UniformMatroid>(base_)) {
      if (count_ >= u->rank) return false;
      ++count_;
      return true;
    }
    const auto& [a, b] = std::get<GraphicMatroid>(*base_).endpoints[index(id)];
    if (!forest_.unite(a, b)) return false;
    ++count_;
    return true;
  }

  std::size_t size() const { return count_; }

 private:
  const BaseMatroid* base_;
  DisjointSets forest_;
  std::size_t count_ = 0;
};

// A base matroid seen through a restriction and a contraction. The
// effective ground set is restriction \ contraction; a set S of it is
// independent iff S plus the contraction set is independent in the base.
// Views are immutable; restrict() and contract() return new views.
class MatroidView {
 public:
  explicit MatroidView(BaseMatroid base)
      : base_(std::make_shared<const BaseMatroid>(std::move(base))) {
    validate(*base_);
    restriction_ = ElementSet::first_n(ground_size(*base_));
    ground_ = restriction_;
  }

  static MatroidView uniform(std::size_t n, std::size_t k) {
    return MatroidView(UniformMatroid{n, k});
  }

  static MatroidView graphic(
      std::size_t vertex_count,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints) {
    return MatroidView(GraphicMatroid{vertex_count, std::move(endpoints)});
  }

  const BaseMatroid& base() const { return *base_; }
  std::size_t base_size() const { return ground_size(*base_); }
  const ElementSet& restriction() const { return restriction_; }
  const ElementSet& contraction() const { return contraction_; }
  const ElementSet& ground() const { return ground_; }

  void require_in_ground(const ElementSet& s) const {
    if (!s.is_subset_of(ground_)) {
      throw std::domain_error("element outside the effective ground set");
    }
  }

  // Builder already holding the contraction set.
  IndependentSetBuilder builder() const {
    IndependentSetBuilder b(*base_);
    for (ElementId c : contraction_) b.add(c);
    return b;
  }

  friend MatroidView restrict(const MatroidView& view, const ElementSet& s);
  friend MatroidView contract(const MatroidView& view, const ElementSet& s);

 private:
  std::shared_ptr<const BaseMatroid> base_;
  ElementSet restriction_;
  ElementSet contraction_;
  ElementSet ground_;
};

inline bool is_independent(const MatroidView& view, const ElementSet& s) {
  view.require_in_ground(s);
  IndependentSetBuilder b = view.builder();
  for (ElementId id : s) {
    if (!b.add(id)) return false;
  }
  return true;
}

inline std::size_t rank(const MatroidView& view, const ElementSet& s) {
  view.require_in_ground(s);
  IndependentSetBuilder b = view.builder();
  std::size_t r = 0;
  for (ElementId id : s) {
    if (b.add(id)) ++r;
  }
  return r;
}

inline ElementSet span(const MatroidView& view, const ElementSet& s) {
  view.require_in_ground(s);
  IndependentSetBuilder b = view.builder();
  for (ElementId id : s) b.add(id);
  ElementSet out;
  for (ElementId u : view.ground()) {
    if (s.contains(u) || !b.can_add(u)) out.insert(u);
  }
  return out;
}

// Greedy max-weight basis of the view restricted to s: scan s heaviest
// first, keep an element iff it stays independent with those kept so far.
inline ElementSet greedy_mwb(const MatroidView& view,
                             const WeightedGroundSet& weights,
                             const ElementSet& s) {
  view.require_in_ground(s);
  IndependentSetBuilder b = view.builder();
  ElementSet out;
  for (ElementId id : weights.sorted_desc(s)) {
    if (b.add(id)) out.insert(id);
  }
  return out;
}

inline MatroidView restrict(const MatroidView& view, const ElementSet& s) {
  view.require_in_ground(s);
  MatroidView out = view;
  out.restriction_ = view.restriction_ & s;
  out.ground_ = out.restriction_ - out.contraction_;
  return out;
}

inline MatroidView contract(const MatroidView& view, const ElementSet& s) {
  view.require_in_ground(s);
  if (!is_independent(view, s)) {
    throw std::invalid_argument("contraction set must be independent");
  }
  MatroidView out = view;
  out.contraction_ = view.contraction_ | s;
  out.ground_ = out.restriction_ - out.contraction_;
  return out;
}

}  // namespace msp
