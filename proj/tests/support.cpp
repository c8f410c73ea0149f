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

#include "support.hpp"

#include <algorithm>
#include <random>

#include "sigames/generators.hpp"

namespace sigames::testing {

ParityGame example_game()
{
    ParityGame g;
    g.add_vertex(1, Owner::Min, {0});
    g.add_vertex(4, Owner::Min, {0, 2});
    g.add_vertex(3, Owner::Max, {1, 2, 3});
    g.add_vertex(0, Owner::Min, {3});
    return g;
}

VertexId example_id(Colour name)
{
    switch (name) {
    case 1: return 0;
    case 4: return 1;
    case 3: return 2;
    default: return 3;
    }
}

PositionalStrategy example_blue_sigma(const ParityGame& g)
{
    return PositionalStrategy::from_choices(g, Owner::Max, {{example_id(3), example_id(3)}});
}

PositionalStrategy example_red_tau(const ParityGame& g)
{
    return PositionalStrategy::from_choices(g, Owner::Min, {{example_id(4), example_id(3)}});
}

ParityGame small_game(std::uint64_t seed, std::uint32_t max_n)
{
    std::mt19937_64 rng(seed);
    const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(2, max_n)(rng);
    RandomGameParams p{n, 1, std::min<std::uint32_t>(3, n - 1), 2 * n, 0.5, rng()};
    return gen_random(p);
}

PlayValuation oracle_valuation(const ParityGame& g, const PositionalStrategy& sigma,
                               const PositionalStrategy& tau, VertexId v)
{
    std::vector<VertexId> seq;
    std::vector<int> seen(g.size(), -1);
    while (seen[v] < 0) {
        seen[v] = static_cast<int>(seq.size());
        seq.push_back(v);
        v = g.owner(v) == Owner::Max ? sigma[v] : tau[v];
    }
    Colour c = 0;
    for (std::size_t i = seen[v]; i < seq.size(); ++i) c = std::max(c, g.colour(seq[i]));
    std::uint32_t d = 0;
    while (g.colour(seq[d]) != c) ++d;
    std::set<Colour, std::greater<>> prefix;
    for (std::uint32_t i = 0; i < d; ++i)
        if (g.colour(seq[i]) > c) prefix.insert(g.colour(seq[i]));
    return pv(c, prefix, d);
}

namespace {

bool parity_less(Colour a, Colour b)
{
    if (a == b) return false;
    const bool ea = a % 2 == 0, eb = b % 2 == 0;
    if (ea && eb) return a < b;
    if (!ea && !eb) return a > b;
    return !ea;
}

}  // namespace

bool oracle_less(const PlayValuation& a, const PlayValuation& b)
{
    if (parity_less(a.dominant, b.dominant)) return true;
    if (a.dominant != b.dominant) return false;

    std::set<Colour> ca(a.prefix.begin(), a.prefix.end()), cb(b.prefix.begin(), b.prefix.end());
    std::vector<Colour> diff;
    std::set_symmetric_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(diff));
    if (!diff.empty()) {
        const Colour h = diff.back();
        if (h % 2 == 0) return cb.count(h) > 0;
        return ca.count(h) > 0;
    }
    if (a.dominant % 2 == 0) return b.index < a.index;
    return b.index > a.index;
}

void for_each_strategy(const ParityGame& g, Owner player, const std::function<bool(const PositionalStrategy&)>& f)
{
    std::vector<VertexId> owned;
    for (VertexId v = 0; v < g.size(); ++v)
        if (g.owner(v) == player) owned.push_back(v);
    std::vector<std::size_t> digit(owned.size(), 0);
    PositionalStrategy s = PositionalStrategy::first_successor(g, player);
    while (true) {
        for (std::size_t i = 0; i < owned.size(); ++i) s.set(owned[i], g.successors(owned[i])[digit[i]]);
        if (!f(s)) return;
        std::size_t i = 0;
        while (i < owned.size() && ++digit[i] == g.successors(owned[i]).size()) digit[i++] = 0;
        if (i == owned.size()) return;
    }
}

ValuationVector oracle_strategy_value(const ParityGame& g, const PositionalStrategy& s)
{
    const bool max_side = s.player() == Owner::Max;
    ValuationVector best;
    for_each_strategy(g, opponent(s.player()), [&](const PositionalStrategy& o) {
        const auto& sigma = max_side ? s : o;
        const auto& tau = max_side ? o : s;
        for (VertexId v = 0; v < g.size(); ++v) {
            auto val = oracle_valuation(g, sigma, tau, v);
            if (best.size() <= v) best.push_back(val);
            else if (max_side ? oracle_less(val, best[v]) : oracle_less(best[v], val)) best[v] = val;
        }
        return true;
    });
    return best;
}

ValuationVector oracle_game_value(const ParityGame& g)
{
    ValuationVector best;
    for_each_strategy(g, Owner::Max, [&](const PositionalStrategy& sigma) {
        auto val = oracle_strategy_value(g, sigma);
        if (best.empty()) best = val;
        for (VertexId v = 0; v < g.size(); ++v)
            if (oracle_less(best[v], val[v])) best[v] = val[v];
        return true;
    });
    return best;
}

std::vector<Owner> oracle_limsup_winners(const ParityGame& g)
{
    auto cycle_max = [&](const PositionalStrategy& sigma, const PositionalStrategy& tau, VertexId v) {
        std::vector<bool> seen(g.size(), false);
        while (!seen[v]) {
            seen[v] = true;
            v = g.owner(v) == Owner::Max ? sigma[v] : tau[v];
        }
        Colour c = g.colour(v);
        for (VertexId u = g.owner(v) == Owner::Max ? sigma[v] : tau[v]; u != v;
             u = g.owner(u) == Owner::Max ? sigma[u] : tau[u])
            c = std::max(c, g.colour(u));
        return c;
    };

    std::vector<Owner> winners(g.size(), Owner::Min);
    for_each_strategy(g, Owner::Max, [&](const PositionalStrategy& sigma) {
        std::vector<bool> wins(g.size(), true);
        for_each_strategy(g, Owner::Min, [&](const PositionalStrategy& tau) {
            for (VertexId v = 0; v < g.size(); ++v)
                if (wins[v] && cycle_max(sigma, tau, v) % 2 == 1) wins[v] = false;
            return true;
        });
        for (VertexId v = 0; v < g.size(); ++v)
            if (wins[v]) winners[v] = Owner::Max;
        return true;
    });
    return winners;
}

}  // namespace sigames::testing
