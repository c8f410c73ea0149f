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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "sigames/game.hpp"

namespace sigames {

/**
 * A positional strategy of one player: a successor for every vertex that
 * player owns. Entries for the opponent's vertices hold kNoVertex, so two
 * strategies for the same game compare equal iff they make the same choices.
 */
class PositionalStrategy {
public:
    PositionalStrategy() = default;
    PositionalStrategy(Owner player, std::size_t vertex_count)
        : player_(player), choice_(vertex_count, kNoVertex) {}

    /// Every owned vertex plays its first listed successor.
    static PositionalStrategy first_successor(const ParityGame& game, Owner player);

    /// Every owned vertex plays a uniformly drawn successor.
    static PositionalStrategy random(const ParityGame& game, Owner player, std::uint64_t seed);

    /// Builds a strategy from explicit (vertex, successor) assignments; owned
    /// vertices not mentioned play their first successor.
    static PositionalStrategy from_choices(const ParityGame& game, Owner player,
                                           std::initializer_list<std::pair<VertexId, VertexId>> choices);

    Owner player() const { return player_; }
    std::size_t size() const { return choice_.size(); }
    VertexId operator[](VertexId v) const { return choice_[v]; }
    void set(VertexId v, VertexId successor) { choice_[v] = successor; }
    std::span<const VertexId> choices() const { return choice_; }

    /// Applies a functional set of switches; returns the number of choices
    /// that actually changed.
    std::size_t apply(std::span<const Edge> switches);

    /// True if the strategy picks an existing edge at every owned vertex and
    /// nothing elsewhere.
    bool is_total_for(const ParityGame& game) const;

    /// The edges (v, choice(v)) for every owned vertex.
    std::vector<Edge> edges() const;

    friend bool operator==(const PositionalStrategy&, const PositionalStrategy&) = default;

private:
    Owner player_ = Owner::Max;
    std::vector<VertexId> choice_;
};

/// Number of positional strategies of `player`, saturating at UINT64_MAX.
std::uint64_t strategy_count(const ParityGame& game, Owner player);

/**
 * Keeps only the edges chosen by at least one of the given strategies. Owners
 * and colours are unchanged; each successor list is sorted ascending.
 * Throws GameError if some vertex ends up without successors.
 */
ParityGame restrict_to_strategies(const ParityGame& game,
                                  std::span<const PositionalStrategy> strategies);

}  // namespace sigames
