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
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigames {

using VertexId = std::uint32_t;
using Colour = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// The two players. Max is the even player (PGSolver owner code 0).
enum class Owner : std::uint8_t { Max = 0, Min = 1 };

constexpr Owner opponent(Owner p) { return p == Owner::Max ? Owner::Min : Owner::Max; }
constexpr bool is_even(Colour c) { return (c & 1u) == 0; }
const char* to_string(Owner p);

struct Edge {
    VertexId from = kNoVertex;
    VertexId to = kNoVertex;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A finite max-parity arena. Vertices are dense ids 0..n-1; every vertex has
 * an owner, a colour and an ordered successor list. Successor order is
 * significant: the first successor is the default initial choice and
 * tie-breaks elsewhere are by smallest VertexId.
 */
class ParityGame {
public:
    ParityGame() = default;

    /// Appends a vertex and returns its id. Successors may refer to vertices
    /// that are added later; use validate() once construction is complete.
    VertexId add_vertex(Colour colour, Owner owner, std::vector<VertexId> successors,
                        std::string label = {});

    std::size_t size() const { return owner_.size(); }
    Owner owner(VertexId v) const { return owner_[v]; }
    Colour colour(VertexId v) const { return colour_[v]; }
    std::span<const VertexId> successors(VertexId v) const { return successors_[v]; }
    const std::string& label(VertexId v) const { return label_[v]; }
    bool has_labels() const;
    bool has_edge(VertexId from, VertexId to) const;

    /// Number of vertices owned by p.
    std::size_t count(Owner p) const;
    std::size_t edge_count() const;
    Colour max_colour() const;

    void set_colour(VertexId v, Colour c) { colour_[v] = c; }
    void set_successors(VertexId v, std::vector<VertexId> successors);

    friend bool operator==(const ParityGame&, const ParityGame&) = default;

private:
    std::vector<Owner> owner_;
    std::vector<Colour> colour_;
    std::vector<std::vector<VertexId>> successors_;
    std::vector<std::string> label_;
};

struct Violation {
    enum class Rule { NoSuccessor, DanglingSuccessor, DuplicateSuccessor, DuplicateColour };

    Rule rule;
    VertexId vertex;
    /// The offending successor for DanglingSuccessor/DuplicateSuccessor, the
    /// repeated colour for DuplicateColour, otherwise unused.
    std::uint64_t detail = 0;

    std::string message() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

enum class ColourCheck { AllowRepeated, RequireInjective };

/// Lists every broken arena invariant. An empty result means the game is
/// accepted by every solver, provided colours are injective.
std::vector<Violation> validate(const ParityGame& game,
                                ColourCheck colours = ColourCheck::RequireInjective);

bool has_injective_colours(const ParityGame& game);

/**
 * Relabels colours so that they are pairwise distinct. Vertices are visited in
 * (colour, id) order and each gets the smallest colour that is at least its
 * old colour, strictly above the previously assigned one, and of the same
 * parity. Games that are already injective are returned unchanged.
 */
ParityGame make_colours_unique(const ParityGame& game);

}  // namespace sigames
