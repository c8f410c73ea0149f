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

// Exhaustive oracle. Only pair evaluation is shared with the other solvers;
// best responses are found by enumeration.

#include <functional>

#include "sigames/solvers.hpp"
#include "valuation_internal.hpp"

namespace sigames {

namespace {

/// Calls f(strategy) for every positional strategy of `player`, in
/// mixed-radix order with the lowest vertex varying fastest, until f returns false.
void for_each_strategy(const ParityGame& game, Owner player, const std::function<bool(const PositionalStrategy&)>& f)
{
    std::vector<VertexId> owned;
    for (VertexId v = 0; v < game.size(); ++v)
        if (game.owner(v) == player) owned.push_back(v);
    std::vector<std::size_t> digit(owned.size(), 0);
    PositionalStrategy s = PositionalStrategy::first_successor(game, player);
    for (;;) {
        if (!f(s)) return;
        std::size_t i = 0;
        for (; i < owned.size(); ++i) {
            const auto succ = game.successors(owned[i]);
            if (++digit[i] < succ.size()) {
                s.set(owned[i], succ[digit[i]]);
                break;
            }
            digit[i] = 0;
            s.set(owned[i], succ[0]);
        }
        if (i == owned.size()) return;
    }
}

/// Replaces acc(v) by val(v) wherever val(v) is `better`.
void keep_best(ValuationVector& acc, const ValuationVector& val, std::strong_ordering better)
{
    for (std::size_t v = 0; v < acc.size(); ++v)
        if (compare(val[v], acc[v]) == better) acc[v] = val[v];
}

struct Side {
    ValuationVector value;
    std::optional<PositionalStrategy> attaining;
};

}  // namespace

SolveReport brute_force_solve(const ParityGame& game, std::uint64_t guard)
{
    detail::require_injective(game);
    const std::uint64_t sigmas = strategy_count(game, Owner::Max);
    const std::uint64_t taus = strategy_count(game, Owner::Min);
    if (sigmas > guard || taus > guard / sigmas)
        throw SizeGuardExceeded("brute force would enumerate " + std::to_string(sigmas) + " x " +
                                std::to_string(taus) + " strategy pairs (limit " + std::to_string(guard) + ")");

    SolveReport report;
    auto eval = [&](const PositionalStrategy& s, const PositionalStrategy& t) {
        ++report.evaluations;
        return detail::evaluate_unchecked(game, s, t);
    };

    // val(s) for one strategy: the pointwise optimum over all opponent strategies.
    auto value_of = [&](const PositionalStrategy& s) {
        const Owner responder = opponent(s.player());
        const auto worse = s.player() == Owner::Max ? std::strong_ordering::less : std::strong_ordering::greater;
        std::optional<ValuationVector> acc;
        for_each_strategy(game, responder, [&](const PositionalStrategy& t) {
            auto val = s.player() == Owner::Max ? eval(s, t) : eval(t, s);
            if (!acc) acc = std::move(val);
            else keep_best(*acc, val, worse);
            return true;
        });
        return *acc;
    };

    // Best value for `player` over its strategies, and the first strategy attaining it everywhere.
    auto solve_side = [&](Owner player) {
        const auto better = player == Owner::Max ? std::strong_ordering::greater : std::strong_ordering::less;
        Side side;
        for_each_strategy(game, player, [&](const PositionalStrategy& s) {
            auto val = value_of(s);
            if (side.value.empty()) side.value = std::move(val);
            else keep_best(side.value, val, better);
            return true;
        });
        for_each_strategy(game, player, [&](const PositionalStrategy& s) {
            if (value_of(s) == side.value) side.attaining = s;
            return !side.attaining;
        });
        if (!side.attaining) throw InternalError("no positional strategy attains the game value everywhere");
        return side;
    };

    Side max_side = solve_side(Owner::Max);
    Side min_side = solve_side(Owner::Min);
    if (max_side.value != min_side.value) throw InternalError("enumerated max-min and min-max values differ");

    report.value = std::move(max_side.value);
    report.winners = winners_of(report.value);
    report.sigma = std::move(*max_side.attaining);
    report.tau = std::move(*min_side.attaining);
    return report;
}

}  // namespace sigames
