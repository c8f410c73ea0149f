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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sigames/game.hpp"
#include "sigames/strategy.hpp"

namespace sigames {

/**
 * Valuation of a play in a game with injective colours.
 *
 * `dominant` is the highest colour on the cycle the play ends in, `index` the
 * position (0-based, from the start vertex) of its first occurrence, and
 * `prefix` the colours above `dominant` seen before that position, kept in
 * descending order.
 */
struct PlayValuation {
    Colour dominant = 0;
    std::vector<Colour> prefix;
    std::uint32_t index = 0;

    friend bool operator==(const PlayValuation&, const PlayValuation&) = default;
};

/// Orders dominant colours from Min's best (large odd) to Max's best (large even).
std::strong_ordering compare_parity(Colour a, Colour b);

/// The preference order. `Greater` means better for Max.
std::strong_ordering compare(const PlayValuation& a, const PlayValuation& b);

inline std::strong_ordering operator<=>(const PlayValuation& a, const PlayValuation& b)
{
    return compare(a, b);
}

using ValuationVector = std::vector<PlayValuation>;

/// a ⊑ b: a(v) <= b(v) at every vertex.
bool pointwise_leq(const ValuationVector& a, const ValuationVector& b);
/// a ⊏ b: a ⊑ b and a != b.
bool pointwise_less(const ValuationVector& a, const ValuationVector& b);

/// Valuation of the play from v when Max plays sigma and Min plays tau.
/// Walks the play until a vertex repeats.
PlayValuation play_valuation(const ParityGame& game, const PositionalStrategy& sigma,
                             const PositionalStrategy& tau, VertexId v);

/// play_valuation at every vertex, in time linear in the size of the
/// functional graph (plus the size of the prefix sets).
ValuationVector evaluate_pair(const ParityGame& game, const PositionalStrategy& sigma,
                              const PositionalStrategy& tau);

struct BestResponse {
    PositionalStrategy strategy;
    ValuationVector value;
};

/**
 * The optimal positional counter strategy of Min against sigma together with
 * the resulting valuation vector (val(sigma)). Among the optimal strategies,
 * every Min vertex picks the smallest successor id that realises its optimal
 * valuation, so the result is a function of (game, sigma) alone.
 *
 * `hint`, if given, seeds the internal search and never changes the result.
 */
BestResponse best_response_min(const ParityGame& game, const PositionalStrategy& sigma,
                               const PositionalStrategy* hint = nullptr);

/// Dual of best_response_min: Max's optimal counter strategy to tau.
BestResponse best_response_max(const ParityGame& game, const PositionalStrategy& tau,
                               const PositionalStrategy* hint = nullptr);

/// Edges of one player's vertices whose single switch strictly improves that
/// player's strategy; sorted by (from, to).
using ProfitableSet = std::vector<Edge>;

/// {(v, w) : v owned by Max, w != sigma(v), val(w) > val(sigma(v))} where
/// val = best_response_min(game, sigma).value. One exception: when v is the
/// top colour of its own cycle, a w whose play returns to v with an empty
/// prefix is not profitable, however its index compares.
ProfitableSet profitable_updates_max(const ParityGame& game, const PositionalStrategy& sigma,
                                     const ValuationVector& val);

/// {(v, w) : v owned by Min, w != tau(v), val(w) < val(tau(v))} where
/// val = best_response_max(game, tau).value.
ProfitableSet profitable_updates_min(const ParityGame& game, const PositionalStrategy& tau,
                                     const ValuationVector& val);

/// Profitable updates for whichever player owns `strategy`.
ProfitableSet profitable_updates(const ParityGame& game, const PositionalStrategy& strategy,
                                 const ValuationVector& val);

/// One JSON object per line: {"v":id,"c":colour,"C":[...descending],"d":index}.
std::string valuation_json_lines(const ValuationVector& val);

}  // namespace sigames
