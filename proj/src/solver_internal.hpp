/*
 * Copyright 2026 The sigames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "sigames/solvers.hpp"

namespace sigames::detail {

/// The opponent's best response to s (Min's if s is a Max strategy).
BestResponse counter(const ParityGame& game, const PositionalStrategy& s, const PositionalStrategy* hint);

/// `after` is strictly better than `before` for `player` (Max: before ⊏ after).
bool improves(Owner player, const ValuationVector& before, const ValuationVector& after);
bool weakly_improves(Owner player, const ValuationVector& before, const ValuationVector& after);

/// Report for a final strategy s paired with the opponent's best response.
SolveReport finish(const PositionalStrategy& s, BestResponse response);

/// For each vertex in prof, the profitable successor the player likes best;
/// ties to the smallest id. prof must be sorted by (from, to).
std::vector<Edge> best_switches(const ProfitableSet& prof, const ValuationVector& val, Owner player);

}  // namespace sigames::detail
