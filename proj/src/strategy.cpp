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

#include "sigames/strategy.hpp"

#include <algorithm>
#include <random>

namespace sigames {

PositionalStrategy PositionalStrategy::first_successor(const ParityGame& game, Owner player)
{
    PositionalStrategy s(player, game.size());
    for (VertexId v = 0; v < game.size(); ++v)
        if (game.owner(v) == player) s.choice_[v] = game.successors(v).front();
    return s;
}

PositionalStrategy PositionalStrategy::random(const ParityGame& game, Owner player, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    PositionalStrategy s(player, game.size());
    for (VertexId v = 0; v < game.size(); ++v) {
        if (game.owner(v) != player) continue;
        const auto succ = game.successors(v);
        std::uniform_int_distribution<std::size_t> pick(0, succ.size() - 1);
        s.choice_[v] = succ[pick(rng)];
    }
    return s;
}

PositionalStrategy PositionalStrategy::from_choices(
    const ParityGame& game, Owner player, std::initializer_list<std::pair<VertexId, VertexId>> choices)
{
    auto s = first_successor(game, player);
    for (const auto& [v, w] : choices) s.choice_[v] = w;
    return s;
}

std::size_t PositionalStrategy::apply(std::span<const Edge> switches)
{
    std::size_t changed = 0;
    for (const auto& e : switches) {
        if (choice_[e.from] != e.to) ++changed;
        choice_[e.from] = e.to;
    }
    return changed;
}

bool PositionalStrategy::is_total_for(const ParityGame& game) const
{
    if (choice_.size() != game.size()) return false;
    for (VertexId v = 0; v < game.size(); ++v) {
        if (game.owner(v) == player_) {
            if (choice_[v] == kNoVertex || !game.has_edge(v, choice_[v])) return false;
        } else if (choice_[v] != kNoVertex) {
            return false;
        }
    }
    return true;
}

std::vector<Edge> PositionalStrategy::edges() const
{
    std::vector<Edge> out;
    for (VertexId v = 0; v < choice_.size(); ++v)
        if (choice_[v] != kNoVertex) out.push_back({v, choice_[v]});
    return out;
}

std::uint64_t strategy_count(const ParityGame& game, Owner player)
{
    std::uint64_t total = 1;
    for (VertexId v = 0; v < game.size(); ++v) {
        if (game.owner(v) != player) continue;
        const std::uint64_t deg = game.successors(v).size();
        if (deg != 0 && total > UINT64_MAX / deg) return UINT64_MAX;
        total *= deg;
    }
    return total;
}

ParityGame restrict_to_strategies(const ParityGame& game, std::span<const PositionalStrategy> strategies)
{
    ParityGame out = game;
    for (VertexId v = 0; v < game.size(); ++v) {
        std::vector<VertexId> kept;
        for (const auto& s : strategies)
            if (s.player() == game.owner(v) && s[v] != kNoVertex) kept.push_back(s[v]);
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        if (kept.empty())
            throw GameError("restriction leaves vertex " + std::to_string(v) + " without successors");
        out.set_successors(v, std::move(kept));
    }
    return out;
}

}  // namespace sigames
