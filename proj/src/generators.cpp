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

#include "sigames/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sigames {

std::string RandomGameParams::check() const
{
    if (out_min < 1) return "out_min must be at least 1";
    if (out_min > out_max) return "out_min must not exceed out_max";
    if (out_max >= vertices) return "out_max must be smaller than the number of vertices";
    if (colour_max < 1) return "colour_max must be at least 1";
    if (!(owner_bias >= 0.0 && owner_bias <= 1.0)) return "owner_bias must lie in [0, 1]";
    return {};
}

ParityGame gen_random(const RandomGameParams& params)
{
    if (auto problem = params.check(); !problem.empty()) throw std::invalid_argument(problem);

    std::mt19937_64 rng(params.seed);
    std::bernoulli_distribution max_owned(params.owner_bias);
    std::uniform_int_distribution<std::uint32_t> degree(params.out_min, params.out_max);
    std::uniform_int_distribution<Colour> colour(0, params.colour_max);

    std::vector<VertexId> all(params.vertices);
    std::iota(all.begin(), all.end(), VertexId{0});

    ParityGame game;
    for (VertexId v = 0; v < params.vertices; ++v) {
        const Owner owner = max_owned(rng) ? Owner::Max : Owner::Min;
        std::vector<VertexId> succ;
        std::sample(all.begin(), all.end(), std::back_inserter(succ), degree(rng), rng);
        std::sort(succ.begin(), succ.end());
        game.add_vertex(colour(rng), owner, std::move(succ));
    }
    return make_colours_unique(game);
}

namespace {

struct TrapVertex {
    std::string name;
    Colour colour;
    Owner owner;
    std::vector<std::string> successors;
};

std::string indexed(char gadget, std::uint32_t i)
{
    return std::string(1, gadget) + std::to_string(i);
}

}  // namespace

ParityGame gen_friedmann_trap(std::uint32_t bits)
{
    if (bits < 1) throw std::invalid_argument("the trap needs at least one bit");
    const std::uint32_t n = bits;
    std::vector<TrapVertex> layout;

    layout.push_back({"x", 1, Owner::Min, {"x"}});

    // Simple cycles d_i <-> e_i and the bit outputs g_i.
    for (std::uint32_t i = 1; i <= n; ++i) {
        // r leads so that the first-successor strategy starts with every bit unset.
        std::vector<std::string> d_succ{"r", indexed('e', i)};
        for (std::uint32_t j = 1; j <= 2 * i; ++j) d_succ.push_back(indexed('a', j));
        d_succ.push_back("s");
        layout.push_back({indexed('d', i), 4 * i - 1, Owner::Max, std::move(d_succ)});
        layout.push_back({indexed('e', i), 4 * i, Owner::Min, {indexed('d', i), indexed('h', i)}});
        layout.push_back({indexed('g', i), 4 * i + 2, Owner::Max, {indexed('f', i), indexed('k', i)}});
    }

    // Deceleration lane.
    for (std::uint32_t j = 1; j <= 2 * n; ++j) {
        const std::string prev = j == 1 ? "c" : indexed('t', j - 1);
        layout.push_back({indexed('t', j), 4 * n + 1 + 2 * j, Owner::Max, {prev, "r", "s"}});
        layout.push_back({indexed('a', j), 4 * n + 2 + 2 * j, Owner::Min, {indexed('t', j)}});
    }
    layout.push_back({"c", 8 * n + 4, Owner::Max, {"r", "s"}});

    // s starts at the sink, r at g_1.
    std::vector<std::string> s_succ{"x"}, r_succ;
    for (std::uint32_t i = 1; i <= n; ++i) {
        s_succ.push_back(indexed('f', i));
        r_succ.push_back(indexed('g', i));
    }
    r_succ.push_back("x");
    layout.push_back({"s", 8 * n + 6, Owner::Max, std::move(s_succ)});
    layout.push_back({"r", 8 * n + 8, Owner::Max, std::move(r_succ)});

    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<std::string> k_succ{"x"};
        for (std::uint32_t j = i + 1; j <= n; ++j) k_succ.push_back(indexed('g', j));
        layout.push_back({indexed('k', i), 8 * n + 5 + 4 * i, Owner::Max, std::move(k_succ)});
        layout.push_back({indexed('f', i), 8 * n + 7 + 4 * i, Owner::Min, {indexed('e', i)}});
        layout.push_back({indexed('h', i), 8 * n + 8 + 4 * i, Owner::Min, {indexed('k', i)}});
    }

    std::sort(layout.begin(), layout.end(), [](const auto& a, const auto& b) { return a.colour < b.colour; });
    std::map<std::string, VertexId> id;
    for (VertexId v = 0; v < layout.size(); ++v) id[layout[v].name] = v;

    ParityGame game;
    for (const auto& t : layout) {
        std::vector<VertexId> succ;
        for (const auto& name : t.successors) succ.push_back(id.at(name));
        game.add_vertex(t.colour, t.owner, std::move(succ), t.name);
    }
    return game;
}

}  // namespace sigames
