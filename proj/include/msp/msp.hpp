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

#include "msp/analysis/bounds.hpp"
#include "msp/analysis/estimate.hpp"
#include "msp/analysis/forbidden.hpp"
#include "msp/analysis/hat_checks.hpp"
#include "msp/analysis/known_bounds.hpp"
#include "msp/analysis/oracles.hpp"
#include "msp/analysis/report_io.hpp"
#include "msp/analysis/verify.hpp"
#include "msp/element_set.hpp"
#include "msp/errors.hpp"
#include "msp/fixtures.hpp"
#include "msp/instance_io.hpp"
#include "msp/instances.hpp"
#include "msp/matroid.hpp"
#include "msp/policies.hpp"
#include "msp/rng.hpp"
#include "msp/simulation.hpp"
#include "msp/trace_io.hpp"
#include "msp/weights.hpp"
