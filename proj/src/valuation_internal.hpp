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

#include "sigames/valuation.hpp"

namespace sigames::detail {

void require_injective(const ParityGame& game);
void require_total(const ParityGame& game, const PositionalStrategy& s, Owner player);

/// Valuation of a vertex with colour `colour` whose successor has valuation
/// `next`, assuming the vertex is not the dominant vertex of its play.
PlayValuation extend(const PlayValuation& next, Colour colour);

/// True if moving from a vertex of colour `colour` to a successor valued
/// `next` realises `target` at that vertex.
bool extends_to(const PlayValuation& next, Colour colour, const PlayValuation& target);

ValuationVector evaluate_unchecked(const ParityGame& game, const PositionalStrategy& sigma,
                                   const PositionalStrategy& tau);

}  // namespace sigames::detail
