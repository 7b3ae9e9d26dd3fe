// Copyright 2026 The besnake Authors
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

#include "besnake/bench.hpp"
#include "besnake/circuit.hpp"
#include "besnake/errors.hpp"
#include "besnake/ids.hpp"
#include "besnake/metrics.hpp"
#include "besnake/placement.hpp"
#include "besnake/rng.hpp"
#include "besnake/router.hpp"
#include "besnake/topology.hpp"
#include "besnake/verify.hpp"
