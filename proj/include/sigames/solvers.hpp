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
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "sigames/game.hpp"
#include "sigames/strategy.hpp"
#include "sigames/valuation.hpp"

namespace sigames {

/// Raised when a solver's own sanity checks fail (lost monotonicity, hit the
/// strategy-space cap). Always a bug, never a property of the input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SizeGuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RoundLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SwitchRule {
    enum class Kind {
        SwitchAll,     ///< every improvable vertex takes its best successor
        SingleSwitch,  ///< best successor at the smallest improvable vertex
        RandomEdge,    ///< one uniformly drawn profitable edge
        RandomFacet,   ///< recursive random-facet scheme
        SwitchHalf,    ///< each improvable vertex with probability 1/2
    };

    Kind kind = Kind::SwitchAll;
    std::uint64_t seed = 0;

    bool randomized() const { return kind == Kind::RandomEdge || kind == Kind::RandomFacet || kind == Kind::SwitchHalf; }
};

std::string_view to_string(SwitchRule::Kind kind);
std::optional<SwitchRule::Kind> parse_switch_rule(std::string_view name);
inline constexpr SwitchRule::Kind kAllSwitchRules[] = {
    SwitchRule::Kind::SwitchAll, SwitchRule::Kind::SingleSwitch, SwitchRule::Kind::RandomEdge,
    SwitchRule::Kind::RandomFacet, SwitchRule::Kind::SwitchHalf};

/// One strategy update of one player.
struct TraceEntry {
    std::uint64_t iter = 0;
    Owner player = Owner::Max;
    std::vector<Edge> switched;
    std::size_t prof_size = 0;
    /// Digest of the player's valuation vector before the update.
    std::uint64_t value_digest = 0;
};

struct SolveReport {
    std::vector<Owner> winners;
    PositionalStrategy sigma;
    PositionalStrategy tau;
    ValuationVector value;
    /// Rounds in which at least one switch was applied.
    std::uint64_t iterations = 0;
    /// Best-response computations (pair evaluations for the brute-force solver).
    std::uint64_t evaluations = 0;
    std::vector<TraceEntry> trace;
};

/// Max wins v iff the dominant colour of value(v) is even.
std::vector<Owner> winners_of(const ValuationVector& value);

/**
 * Classic strategy improvement for `player`: evaluate against the opponent's
 * best response, stop when nothing is profitable, otherwise apply the rule's
 * selection of profitable switches.
 */
SolveReport classic_si(const ParityGame& game, Owner player, SwitchRule rule, const PositionalStrategy& init,
                       bool trace = false);

/// classic_si with SingleSwitch.
SolveReport slow_si(const ParityGame& game, Owner player, const PositionalStrategy& init, bool trace = false);

struct CycleDetected {
    std::uint64_t first_index = 0;
    std::uint64_t period = 0;
};

using NaiveOutcome = std::variant<SolveReport, CycleDetected>;

/**
 * Replaces (sigma, tau) by their mutual best responses until the pair is a
 * fixed point (SolveReport) or repeats an earlier pair (CycleDetected).
 * Throws RoundLimitExceeded after `max_rounds` updates without either.
 */
NaiveOutcome naive_symmetric(const ParityGame& game, const PositionalStrategy& init_sigma,
                             const PositionalStrategy& init_tau, std::uint64_t max_rounds);

enum class UpdateMode {
    Maximal,  ///< all profitable switches that agree with the counter strategy
    Slow,     ///< only the first such switch (smallest vertex) per player
};

/**
 * Symmetric strategy improvement. Each round, sigma takes profitable switches
 * that agree with the best response to tau and vice versa; stops when neither
 * strategy changes.
 */
SolveReport symmetric_si(const ParityGame& game, const PositionalStrategy& init_sigma,
                         const PositionalStrategy& init_tau, UpdateMode mode = UpdateMode::Maximal,
                         bool trace = false);

/// symmetric_si that returns as soon as either player's strategy has no
/// profitable switch, pairing it with the opponent's best response.
SolveReport symmetric_si_early(const ParityGame& game, const PositionalStrategy& init_sigma,
                               const PositionalStrategy& init_tau, UpdateMode mode = UpdateMode::Maximal,
                               bool trace = false);

inline constexpr std::uint64_t kBruteForceGuard = 1'000'000;

/// Exhaustive solver over all positional strategy pairs. Throws
/// SizeGuardExceeded if |Sigma| * |T| exceeds `guard`.
SolveReport brute_force_solve(const ParityGame& game, std::uint64_t guard = kBruteForceGuard);

}  // namespace sigames
