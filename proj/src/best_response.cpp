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

// Optimal counter strategies. The opponent's strategy is fixed, which leaves a
// one-player game for the responder; it is solved by switch-all strategy
// improvement on the responder's side, starting from `hint`. The optimal
// valuation vector of a one-player game is unique, so the canonical strategy
// read off it at the end does not depend on the starting point.

#include <stdexcept>

#include "sigames/valuation.hpp"
#include "valuation_internal.hpp"

namespace sigames {

namespace {

/// Responder picks at v the successor the valuation ranks best for it; ties
/// go to the smallest id.
VertexId best_successor(const ParityGame& game, VertexId v, const ValuationVector& val, Owner responder)
{
    const auto better = responder == Owner::Max ? std::strong_ordering::greater : std::strong_ordering::less;
    VertexId best = kNoVertex;
    for (const VertexId w : game.successors(v)) {
        if (best == kNoVertex) {
            best = w;
            continue;
        }
        const auto cmp = compare(val[w], val[best]);
        if (cmp == better || (cmp == std::strong_ordering::equal && w < best)) best = w;
    }
    return best;
}

BestResponse respond(const ParityGame& game, const PositionalStrategy& fixed, Owner responder,
                     const PositionalStrategy* hint)
{
    detail::require_injective(game);
    detail::require_total(game, fixed, opponent(responder));

    PositionalStrategy reply = PositionalStrategy::first_successor(game, responder);
    if (hint != nullptr) {
        detail::require_total(game, *hint, responder);
        reply = *hint;
    }

    const auto evaluate = [&](const PositionalStrategy& r) {
        return responder == Owner::Min ? detail::evaluate_unchecked(game, fixed, r)
                                       : detail::evaluate_unchecked(game, r, fixed);
    };
    const auto better = responder == Owner::Max ? std::strong_ordering::greater : std::strong_ordering::less;

    // Every round strictly improves the responder, so the number of rounds is
    // bounded by the number of its strategies.
    const std::uint64_t cap = strategy_count(game, responder);
    ValuationVector val = evaluate(reply);
    for (std::uint64_t round = 0;; ++round) {
        if (round > cap) throw std::logic_error("best response search failed to converge");
        bool changed = false;
        for (VertexId v = 0; v < game.size(); ++v) {
            if (game.owner(v) != responder) continue;
            const VertexId w = best_successor(game, v, val, responder);
            if (compare(val[w], val[reply[v]]) == better) {
                reply.set(v, w);
                changed = true;
            }
        }
        if (!changed) break;
        val = evaluate(reply);
    }

    // Canonical choice: the smallest successor realising the optimal valuation.
    PositionalStrategy canonical(responder, game.size());
    for (VertexId v = 0; v < game.size(); ++v) {
        if (game.owner(v) != responder) continue;
        VertexId pick = kNoVertex;
        for (const VertexId w : game.successors(v))
            if (w < pick && detail::extends_to(val[w], game.colour(v), val[v])) pick = w;
        if (pick == kNoVertex) throw std::logic_error("no successor realises the optimal valuation");
        canonical.set(v, pick);
    }

    ValuationVector check = evaluate(canonical);
    if (check != val) throw std::logic_error("canonical counter strategy changed the valuation");
    return {std::move(canonical), std::move(check)};
}

}  // namespace

BestResponse best_response_min(const ParityGame& game, const PositionalStrategy& sigma,
                               const PositionalStrategy* hint)
{
    return respond(game, sigma, Owner::Min, hint);
}

BestResponse best_response_max(const ParityGame& game, const PositionalStrategy& tau,
                               const PositionalStrategy* hint)
{
    return respond(game, tau, Owner::Max, hint);
}

}  // namespace sigames
