// Copyright 2026 The walkpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "walkpovm/linalg.hpp"

namespace walkpovm {

// Sparse map position -> d x d coin unitary; unlisted positions carry the
// identity.
using CoinLayer = std::map<int, CMatrix>;

// One program step: a coin layer, then (unless suppressed) the conditional
// translation. Translation-free layers host corrective coins that some
// schedules need between iterations.
struct ProgramLayer {
    CoinLayer coins;
    bool translate = true;
};

// A compiled measurement: walk layers plus the map from final walker
// positions to rank-1 item indices. post_layer, when present, is applied
// last with no translation (used to rotate conditional coin states).
struct WalkProgram {
    int dim = 0;
    std::vector<ProgramLayer> layers;
    std::map<int, int> outcome_positions;
    std::optional<CoinLayer> post_layer;
};

}  // namespace walkpovm
