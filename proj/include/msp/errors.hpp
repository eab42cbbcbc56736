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

#include <stdexcept>
#include <string>

namespace msp {

// A policy tried to accept an element that makes the accepted set dependent,
// or broke the online contract. Trials fail loudly; nothing is repaired.
class HarnessViolation : public std::logic_error {
 public:
  explicit HarnessViolation(const std::string& what) : std::logic_error(what) {}
};

// A policy's internal reference set broke its defining invariants.
class PolicyViolation : public std::logic_error {
 public:
  explicit PolicyViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace msp
