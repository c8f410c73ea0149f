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

// Fixtures and reference oracles shared by the unit and acceptance tests.
// The oracles only use the arena accessors of the library; valuations,
// comparisons and optimal values are recomputed here from first principles.

#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "sigames/game.hpp"
#include "sigames/strategy.hpp"
#include "sigames/valuation.hpp"

namespace sigames::testing {

/*
 * The four-vertex example game. Vertices are named by their colours:
 *
 *   id 0 = "1" (Min, self-loop)      id 1 = "4" (Min, -> 1, 3)
 *   id 2 = "3" (Max, -> 4, 3, 0)     id 3 = "0" (Min, self-loop)
 */
ParityGame example_game();
/// Max stays at 3.
PositionalStrategy example_blue_sigma(const ParityGame& g);
/// Min plays 4 -> 3.
PositionalStrategy example_red_tau(const ParityGame& g);
/// Vertex id of the example vertex with the given colour name.
VertexId example_id(Colour name);

/// Random arena with 2..max_n vertices, out-degree 1..3 and colour range 2n.
ParityGame small_game(std::uint64_t seed, std::uint32_t max_n = 8);

/// Valuation of the play from v, computed from the explicit vertex sequence.
PlayValuation oracle_valuation(const ParityGame& g, const PositionalStrategy& sigma,
                               const PositionalStrategy& tau, VertexId v);

/// a strictly worse for Max than b, case by case from the definition.
bool oracle_less(const PlayValuation& a, const PlayValuation& b);

/// Calls f for every positional strategy of `player`; stops when f returns false.
void for_each_strategy(const ParityGame& g, Owner player, const std::function<bool(const PositionalStrategy&)>& f);

/// val(sigma) or val(tau): the opponent's pointwise best reply by enumeration.
ValuationVector oracle_strategy_value(const ParityGame& g, const PositionalStrategy& s);

/// Value of every vertex: max over sigma of min over tau, by enumeration.
ValuationVector oracle_game_value(const ParityGame& g);

/// Winners under the plain limsup parity condition (colours may repeat).
std::vector<Owner> oracle_limsup_winners(const ParityGame& g);

inline PlayValuation pv(Colour c, std::set<Colour, std::greater<>> prefix, std::uint32_t d)
{
    return {c, {prefix.begin(), prefix.end()}, d};
}

}  // namespace sigames::testing
