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
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace msp::analysis {

struct RatioAndProbability {
  double alpha = 0.0;
  double p = 0.0;
};

// Probability competitive ratio guaranteed by forbidden sets of size k,
// together with the sampling probability that attains it.
inline RatioAndProbability alpha_p(std::size_t k) {
  if (k == 0) throw std::invalid_argument("forbidden-set size must be >= 1");
  if (k == 1) return {1.0 / std::numbers::e, 1.0 / std::numbers::e};
  const double kk = static_cast<double>(k);
  return {std::pow(kk, -kk / (kk - 1.0)), std::pow(kk, -1.0 / (kk - 1.0))};
}

// Composite Simpson rule on [a, b] with an even number of intervals.
template <class F>
double simpson(F&& f, double a, double b, std::size_t intervals) {
  if (intervals == 0 || intervals % 2 != 0) {
    throw std::invalid_argument("Simpson needs a positive even interval count");
  }
  const double h = (b - a) / static_cast<double>(intervals);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < intervals; ++i) {
    sum += f(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// Chance that some claw j <= floor(n/2) of the modified hat graph has
// 2_j, 3_j, 4_j all sampled.
inline double modified_hat_pn(std::size_t n, double p) {
  return 1.0 - std::pow(1.0 - p * p * p, static_cast<double>(n / 2));
}

// Given e_inf arrives at t > p: chance that some claw i > floor(n/2) has 2_i
// sampled and 1_i, 3_i, 4_i live before t in that order.
inline double modified_hat_q(std::size_t n, double p, double t) {
  const double d = t - p;
  return 1.0 - std::pow(1.0 - p * d * d * d / 6.0, static_cast<double>(n / 2));
}

struct ModifiedHatBounds {
  double p_n = 0.0;
  // Lower bound on Pr[e_inf rejected]: p + p_n * integral_p^1 q_{n,t} dt.
  double rejection_lower_bound = 0.0;
};

inline constexpr std::size_t kSimpsonIntervals = 1024;

inline ModifiedHatBounds modified_hat_bounds(std::size_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
  ModifiedHatBounds out;
  out.p_n = modified_hat_pn(n, p);
  const double integral =
      simpson([&](double t) { return modified_hat_q(n, p, t); }, p, 1.0, kSimpsonIntervals);
  out.rejection_lower_bound = p + out.p_n * integral;
  return out;
}

}  // namespace msp::analysis
