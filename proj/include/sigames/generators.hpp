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

#include "sigames/game.hpp"

namespace sigames {

struct RandomGameParams {
    std::uint32_t vertices = 0;
    std::uint32_t out_min = 1;
    std::uint32_t out_max = 1;
    Colour colour_max = 1;
    double owner_bias = 0.5;  ///< probability that a vertex is owned by Max
    std::uint64_t seed = 0;

    /// Empty if valid, otherwise a description of the first problem.
    std::string check() const;
};

/**
 * Seeded random arena. Each vertex draws its owner, an out-degree in
 * [out_min, out_max], that many distinct successors and a colour in
 * [0, colour_max]; colours are then made unique. Successor lists are sorted.
 * Throws std::invalid_argument on invalid parameters.
 */
ParityGame gen_random(const RandomGameParams& params);

/// Vertex count of gen_friedmann_trap(bits).
/// Per bit d, e, g, k, f, h and two lane pairs t/a; plus c, r, s and x.
constexpr std::size_t trap_vertex_count(std::uint32_t bits) { return 10u * bits + 4u; }

/**
 * The lower-bound family for switch-all strategy improvement with `bits`
 * cycle gates: simple cycles d_i/e_i, the deceleration lane t_j/a_j/c,
 * the r/s entry points, g/k/f/h bit outputs, and the sink x. Vertex ids follow
 * ascending colour; vertices carry their gadget names as labels.
 */
ParityGame gen_friedmann_trap(std::uint32_t bits);

}  // namespace sigames
