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

#include "sigames/game.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace sigames {

const char* to_string(Owner p)
{
    return p == Owner::Max ? "max" : "min";
}

VertexId ParityGame::add_vertex(Colour colour, Owner owner, std::vector<VertexId> successors,
                                std::string label)
{
    const auto id = static_cast<VertexId>(owner_.size());
    owner_.push_back(owner);
    colour_.push_back(colour);
    successors_.push_back(std::move(successors));
    label_.push_back(std::move(label));
    return id;
}

bool ParityGame::has_labels() const
{
    return std::any_of(label_.begin(), label_.end(), [](const auto& l) { return !l.empty(); });
}

bool ParityGame::has_edge(VertexId from, VertexId to) const
{
    const auto& s = successors_[from];
    return std::find(s.begin(), s.end(), to) != s.end();
}

std::size_t ParityGame::count(Owner p) const
{
    return static_cast<std::size_t>(std::count(owner_.begin(), owner_.end(), p));
}

std::size_t ParityGame::edge_count() const
{
    std::size_t m = 0;
    for (const auto& s : successors_) m += s.size();
    return m;
}

Colour ParityGame::max_colour() const
{
    return colour_.empty() ? 0 : *std::max_element(colour_.begin(), colour_.end());
}

void ParityGame::set_successors(VertexId v, std::vector<VertexId> successors)
{
    successors_[v] = std::move(successors);
}

std::string Violation::message() const
{
    std::ostringstream out;
    switch (rule) {
    case Rule::NoSuccessor:
        out << "vertex " << vertex << " has no successors";
        break;
    case Rule::DanglingSuccessor:
        out << "vertex " << vertex << " has successor " << detail << " which does not exist";
        break;
    case Rule::DuplicateSuccessor:
        out << "vertex " << vertex << " lists successor " << detail << " more than once";
        break;
    case Rule::DuplicateColour:
        out << "vertex " << vertex << " repeats colour " << detail;
        break;
    }
    return out.str();
}

std::vector<Violation> validate(const ParityGame& game, ColourCheck colours)
{
    std::vector<Violation> found;
    const auto n = game.size();
    std::vector<VertexId> seen(n, kNoVertex);
    for (VertexId v = 0; v < n; ++v) {
        const auto succ = game.successors(v);
        if (succ.empty()) found.push_back({Violation::Rule::NoSuccessor, v});
        for (const VertexId w : succ) {
            if (w >= n) {
                found.push_back({Violation::Rule::DanglingSuccessor, v, w});
            } else if (seen[w] == v) {
                found.push_back({Violation::Rule::DuplicateSuccessor, v, w});
            } else {
                seen[w] = v;
            }
        }
    }

    if (colours == ColourCheck::RequireInjective) {
        std::unordered_map<Colour, VertexId> first;
        for (VertexId v = 0; v < n; ++v) {
            auto [it, fresh] = first.emplace(game.colour(v), v);
            if (!fresh) found.push_back({Violation::Rule::DuplicateColour, v, game.colour(v)});
        }
    }
    return found;
}

bool has_injective_colours(const ParityGame& game)
{
    std::vector<Colour> c(game.size());
    for (VertexId v = 0; v < game.size(); ++v) c[v] = game.colour(v);
    std::sort(c.begin(), c.end());
    return std::adjacent_find(c.begin(), c.end()) == c.end();
}

ParityGame make_colours_unique(const ParityGame& game)
{
    std::vector<VertexId> order(game.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return game.colour(a) < game.colour(b); });

    ParityGame out = game;
    std::int64_t previous = -1;
    for (const VertexId v : order) {
        const Colour old = game.colour(v);
        std::int64_t next = std::max<std::int64_t>(old, previous + 1);
        if ((next & 1) != (old & 1)) ++next;
        out.set_colour(v, static_cast<Colour>(next));
        previous = next;
    }
    return out;
}

}  // namespace sigames
