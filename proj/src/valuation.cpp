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

#include "sigames/valuation.hpp"

#include <algorithm>
#include <sstream>

#include "valuation_internal.hpp"

namespace sigames {

namespace {

std::int64_t parity_rank(Colour c)
{
    return is_even(c) ? static_cast<std::int64_t>(c) : -static_cast<std::int64_t>(c) - 1;
}

}  // namespace

std::strong_ordering compare_parity(Colour a, Colour b)
{
    return parity_rank(a) <=> parity_rank(b);
}

std::strong_ordering compare(const PlayValuation& a, const PlayValuation& b)
{
    if (a.dominant != b.dominant) return compare_parity(a.dominant, b.dominant);

    // Highest colour of the symmetric difference decides; both lists are descending.
    std::size_t i = 0, j = 0;
    while (i < a.prefix.size() || j < b.prefix.size()) {
        if (i < a.prefix.size() && j < b.prefix.size() && a.prefix[i] == b.prefix[j]) {
            ++i;
            ++j;
            continue;
        }
        const bool in_a = j == b.prefix.size() || (i < a.prefix.size() && a.prefix[i] > b.prefix[j]);
        const Colour h = in_a ? a.prefix[i] : b.prefix[j];
        if (is_even(h) == in_a) return std::strong_ordering::greater;
        return std::strong_ordering::less;
    }

    if (is_even(a.dominant)) return b.index <=> a.index;
    return a.index <=> b.index;
}

bool pointwise_leq(const ValuationVector& a, const ValuationVector& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t v = 0; v < a.size(); ++v)
        if (compare(a[v], b[v]) == std::strong_ordering::greater) return false;
    return true;
}

bool pointwise_less(const ValuationVector& a, const ValuationVector& b)
{
    return pointwise_leq(a, b) && a != b;
}

namespace detail {

void require_injective(const ParityGame& game)
{
    if (!has_injective_colours(game))
        throw GameError("valuations need pairwise distinct colours; normalise the game first");
}

void require_total(const ParityGame& game, const PositionalStrategy& s, Owner player)
{
    if (s.player() != player || !s.is_total_for(game))
        throw GameError(std::string("strategy is not a total ") + to_string(player) + " strategy for this game");
}

PlayValuation extend(const PlayValuation& next, Colour colour)
{
    PlayValuation out;
    out.dominant = next.dominant;
    out.index = next.index + 1;
    out.prefix = next.prefix;
    if (colour > next.dominant) {
        auto pos = std::lower_bound(out.prefix.begin(), out.prefix.end(), colour, std::greater<>{});
        out.prefix.insert(pos, colour);
    }
    return out;
}

bool extends_to(const PlayValuation& next, Colour colour, const PlayValuation& target)
{
    if (next.dominant != target.dominant) return false;
    if (target.index == 0) {
        // v itself carries the dominant colour; the successor must lead back to
        // v without meeting anything higher.
        return colour == target.dominant && next.prefix.empty();
    }
    if (next.index + 1 != target.index) return false;
    if (colour <= target.dominant) return next.prefix == target.prefix;
    if (target.prefix.size() != next.prefix.size() + 1) return false;
    std::size_t j = 0;
    bool inserted = false;
    for (const Colour c : target.prefix) {
        if (!inserted && c == colour) {
            inserted = true;
            continue;
        }
        if (j == next.prefix.size() || next.prefix[j] != c) return false;
        ++j;
    }
    return inserted;
}

ValuationVector evaluate_unchecked(const ParityGame& game, const PositionalStrategy& sigma,
                                   const PositionalStrategy& tau)
{
    const auto n = static_cast<VertexId>(game.size());
    auto next = [&](VertexId v) { return game.owner(v) == Owner::Max ? sigma[v] : tau[v]; };

    enum : std::uint8_t { Fresh, OnPath, Done };
    std::vector<std::uint8_t> state(n, Fresh);
    ValuationVector val(n);
    std::vector<VertexId> path;

    for (VertexId start = 0; start < n; ++start) {
        if (state[start] != Fresh) continue;
        path.clear();
        VertexId v = start;
        while (state[v] == Fresh) {
            state[v] = OnPath;
            path.push_back(v);
            v = next(v);
        }

        std::size_t tail = path.size();
        if (state[v] == OnPath) {
            // v closes a new cycle: path[k..] with k the position of v.
            const auto k = static_cast<std::size_t>(std::find(path.begin(), path.end(), v) - path.begin());
            std::size_t top = k;
            for (std::size_t i = k; i < path.size(); ++i)
                if (game.colour(path[i]) > game.colour(path[top])) top = i;
            const Colour m = game.colour(path[top]);
            const std::size_t len = path.size() - k;
            for (std::size_t i = k; i < path.size(); ++i) {
                const std::size_t dist = (top + len - i) % len;
                val[path[i]] = PlayValuation{m, {}, static_cast<std::uint32_t>(dist)};
                state[path[i]] = Done;
            }
            tail = k;
        }
        for (std::size_t i = tail; i-- > 0;) {
            const VertexId u = path[i];
            val[u] = extend(val[next(u)], game.colour(u));
            state[u] = Done;
        }
    }
    return val;
}

}  // namespace detail

PlayValuation play_valuation(const ParityGame& game, const PositionalStrategy& sigma,
                             const PositionalStrategy& tau, VertexId v)
{
    detail::require_injective(game);
    detail::require_total(game, sigma, Owner::Max);
    detail::require_total(game, tau, Owner::Min);

    std::vector<std::size_t> seen_at(game.size(), SIZE_MAX);
    std::vector<Colour> colours;
    VertexId u = v;
    while (seen_at[u] == SIZE_MAX) {
        seen_at[u] = colours.size();
        colours.push_back(game.colour(u));
        u = game.owner(u) == Owner::Max ? sigma[u] : tau[u];
    }
    const std::size_t cycle_start = seen_at[u];
    const auto top = std::max_element(colours.begin() + static_cast<std::ptrdiff_t>(cycle_start), colours.end());

    PlayValuation out;
    out.dominant = *top;
    out.index = static_cast<std::uint32_t>(top - colours.begin());
    for (std::size_t i = 0; i < out.index; ++i)
        if (colours[i] > out.dominant) out.prefix.push_back(colours[i]);
    std::sort(out.prefix.begin(), out.prefix.end(), std::greater<>{});
    return out;
}

ValuationVector evaluate_pair(const ParityGame& game, const PositionalStrategy& sigma,
                              const PositionalStrategy& tau)
{
    detail::require_injective(game);
    detail::require_total(game, sigma, Owner::Max);
    detail::require_total(game, tau, Owner::Min);
    return detail::evaluate_unchecked(game, sigma, tau);
}

ProfitableSet profitable_updates(const ParityGame& game, const PositionalStrategy& strategy,
                                 const ValuationVector& val)
{
    const Owner p = strategy.player();
    const auto better = p == Owner::Max ? std::strong_ordering::greater : std::strong_ordering::less;
    ProfitableSet out;
    for (VertexId v = 0; v < game.size(); ++v) {
        if (game.owner(v) != p) continue;
        const VertexId current = strategy[v];
        // If v tops its own cycle, successors that return to v with nothing
        // above it on the way only reshape the cycle: no valuation changes.
        const bool tops_cycle = val[current].dominant == game.colour(v);
        std::vector<VertexId> hits;
        for (const VertexId w : game.successors(v)) {
            if (w == current || compare(val[w], val[current]) != better) continue;
            if (tops_cycle && val[w].dominant == game.colour(v) && val[w].prefix.empty()) continue;
            hits.push_back(w);
        }
        std::sort(hits.begin(), hits.end());
        for (const VertexId w : hits) out.push_back({v, w});
    }
    return out;
}

ProfitableSet profitable_updates_max(const ParityGame& game, const PositionalStrategy& sigma,
                                     const ValuationVector& val)
{
    detail::require_total(game, sigma, Owner::Max);
    return profitable_updates(game, sigma, val);
}

ProfitableSet profitable_updates_min(const ParityGame& game, const PositionalStrategy& tau,
                                     const ValuationVector& val)
{
    detail::require_total(game, tau, Owner::Min);
    return profitable_updates(game, tau, val);
}

std::string valuation_json_lines(const ValuationVector& val)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < val.size(); ++v) {
        out << "{\"v\":" << v << ",\"c\":" << val[v].dominant << ",\"C\":[";
        for (std::size_t i = 0; i < val[v].prefix.size(); ++i) {
            if (i) out << ',';
            out << val[v].prefix[i];
        }
        out << "],\"d\":" << val[v].index << "}\n";
    }
    return out.str();
}

}  // namespace sigames
