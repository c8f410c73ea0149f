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

#include <random>

#include "doctest.h"
#include "sigames/digest.hpp"
#include "support.hpp"

using namespace sigames;
using namespace sigames::testing;

namespace {

PlayValuation random_valuation(std::mt19937_64& rng)
{
    const Colour c = rng() % 6;
    std::set<Colour, std::greater<>> prefix;
    for (Colour k = c + 1; k <= 8; ++k)
        if (rng() % 2) prefix.insert(k);
    return pv(c, prefix, static_cast<std::uint32_t>(prefix.size() + rng() % 3));
}

std::vector<Edge> random_functional_subset(const ProfitableSet& prof, std::mt19937_64& rng)
{
    std::vector<Edge> out;
    for (const auto& e : prof) {
        if (!out.empty() && out.back().from == e.from) {
            if (rng() % 2) out.back() = e;
        } else if (rng() % 2) {
            out.push_back(e);
        }
    }
    if (out.empty() && !prof.empty()) out.push_back(prof[rng() % prof.size()]);
    return out;
}

}  // namespace

TEST_CASE("example valuations under the blue and red strategies")
{
    const auto g = example_game();
    const auto val = evaluate_pair(g, example_blue_sigma(g), example_red_tau(g));
    CHECK(val[example_id(1)] == pv(1, {}, 0));
    CHECK(val[example_id(4)] == pv(3, {4}, 1));
    CHECK(val[example_id(3)] == pv(3, {}, 0));
    CHECK(val[example_id(0)] == pv(0, {}, 0));
}

TEST_CASE("example profitable updates and counter strategies")
{
    const auto g = example_game();
    const auto sigma = example_blue_sigma(g);
    const auto tau = example_red_tau(g);

    const auto for_sigma = best_response_min(g, sigma);
    CHECK(profitable_updates_max(g, sigma, for_sigma.value) ==
          ProfitableSet{{example_id(3), example_id(4)}, {example_id(3), example_id(0)}});

    const auto sigma_c = best_response_max(g, tau);
    CHECK(sigma_c.strategy[example_id(3)] == example_id(4));
    CHECK(sigma_c.value[example_id(3)] == pv(4, {}, 1));
    CHECK(sigma_c.value[example_id(4)] == pv(4, {}, 0));
    CHECK(profitable_updates_min(g, tau, sigma_c.value) == ProfitableSet{{example_id(4), example_id(1)}});
    CHECK(profitable_updates(g, tau, sigma_c.value) == profitable_updates_min(g, tau, sigma_c.value));
}

TEST_CASE("compare agrees with the case-by-case definition")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20000; ++i) {
        const auto a = random_valuation(rng);
        const auto b = random_valuation(rng);
        const auto ab = compare(a, b);
        CHECK((ab < 0) == oracle_less(a, b));
        CHECK((ab > 0) == oracle_less(b, a));
        CHECK((ab == 0) == (a == b));
    }
}

TEST_CASE("compare is a strict total order")
{
    std::mt19937_64 rng(4);
    std::vector<PlayValuation> pool;
    for (int i = 0; i < 60; ++i) pool.push_back(random_valuation(rng));
    for (const auto& a : pool)
        for (const auto& b : pool) {
            CHECK((compare(a, b) < 0) == (compare(b, a) > 0));
            for (const auto& c : pool)
                if (compare(a, b) < 0 && compare(b, c) < 0) CHECK(compare(a, c) < 0);
        }
}

TEST_CASE("compare_parity")
{
    CHECK(compare_parity(5, 1) < 0);
    CHECK(compare_parity(1, 0) < 0);
    CHECK(compare_parity(0, 2) < 0);
    CHECK(compare_parity(7, 7) == 0);
}

TEST_CASE("evaluate_pair matches the walk oracle")
{
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = small_game(seed, 12);
        const auto sigma = PositionalStrategy::random(g, Owner::Max, rng());
        const auto tau = PositionalStrategy::random(g, Owner::Min, rng());
        const auto val = evaluate_pair(g, sigma, tau);
        for (VertexId v = 0; v < g.size(); ++v) {
            CHECK(val[v] == oracle_valuation(g, sigma, tau, v));
            CHECK(val[v] == play_valuation(g, sigma, tau, v));
        }
    }
}

TEST_CASE("best responses match enumeration and are deterministic")
{
    std::mt19937_64 rng(6);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto g = small_game(seed);
        const auto sigma = PositionalStrategy::random(g, Owner::Max, rng());
        const auto tau = PositionalStrategy::random(g, Owner::Min, rng());

        const auto rm = best_response_min(g, sigma);
        CHECK(rm.value == oracle_strategy_value(g, sigma));
        CHECK(evaluate_pair(g, sigma, rm.strategy) == rm.value);
        const auto hint_min = PositionalStrategy::random(g, Owner::Min, rng());
        const auto rm2 = best_response_min(g, sigma, &hint_min);
        CHECK(rm2.strategy == rm.strategy);
        CHECK(rm2.value == rm.value);

        const auto rx = best_response_max(g, tau);
        CHECK(rx.value == oracle_strategy_value(g, tau));
        CHECK(evaluate_pair(g, rx.strategy, tau) == rx.value);
        const auto hint_max = PositionalStrategy::random(g, Owner::Max, rng());
        CHECK(best_response_max(g, tau, &hint_max).strategy == rx.strategy);
    }
}

TEST_CASE("profitable updates are exactly the improving single switches")
{
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const auto g = small_game(seed, 7);
        for (Owner p : {Owner::Max, Owner::Min}) {
            const auto s = PositionalStrategy::random(g, p, rng());
            const auto val = p == Owner::Max ? best_response_min(g, s).value : best_response_max(g, s).value;
            const auto prof = profitable_updates(g, s, val);
            for (VertexId v = 0; v < g.size(); ++v) {
                if (g.owner(v) != p) continue;
                for (VertexId w : g.successors(v)) {
                    if (w == s[v]) continue;
                    auto t = s;
                    t.set(v, w);
                    const auto after = oracle_strategy_value(g, t);
                    const bool improves = p == Owner::Max ? pointwise_less(val, after) : pointwise_less(after, val);
                    const bool listed = std::find(prof.begin(), prof.end(), Edge{v, w}) != prof.end();
                    CHECK(listed == improves);
                }
            }
        }
    }
}

TEST_CASE("profitable updates combine")
{
    std::mt19937_64 rng(8);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = small_game(seed);
        for (Owner p : {Owner::Max, Owner::Min}) {
            auto s = PositionalStrategy::random(g, p, rng());
            const auto val = p == Owner::Max ? best_response_min(g, s).value : best_response_max(g, s).value;
            const auto prof = profitable_updates(g, s, val);
            if (prof.empty()) continue;
            const auto subset = random_functional_subset(prof, rng);
            s.apply(subset);
            const auto after = oracle_strategy_value(g, s);
            CHECK((p == Owner::Max ? pointwise_less(val, after) : pointwise_less(after, val)));
        }
    }
}

TEST_CASE("no profitable update iff optimal")
{
    std::mt19937_64 rng(9);
    int optimal_seen = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = small_game(seed, 6);
        const auto value = oracle_game_value(g);
        for (int k = 0; k < 4; ++k) {
            const auto sigma = PositionalStrategy::random(g, Owner::Max, rng());
            const auto val = best_response_min(g, sigma).value;
            const bool optimal = val == value;
            optimal_seen += optimal;
            CHECK(profitable_updates_max(g, sigma, val).empty() == optimal);
            const auto tau = PositionalStrategy::random(g, Owner::Min, rng());
            const auto vt = best_response_max(g, tau).value;
            CHECK(profitable_updates_min(g, tau, vt).empty() == (vt == value));
        }
    }
    CHECK(optimal_seen > 0);
}

TEST_CASE("valuation JSON lines and digests")
{
    const ValuationVector v{pv(3, {8, 4}, 2), pv(0, {}, 0)};
    CHECK(valuation_json_lines(v) == "{\"v\":0,\"c\":3,\"C\":[8,4],\"d\":2}\n{\"v\":1,\"c\":0,\"C\":[],\"d\":0}\n");
    CHECK(value_digest(v) == fnv1a64(valuation_json_lines(v)));
    CHECK(fnv1a64(std::string_view("")) == 0xcbf29ce484222325ull);
    CHECK(fnv1a64(std::string_view("a")) == 0xaf63dc4c8601ec8cull);
    const std::vector<Owner> w{Owner::Max, Owner::Min};
    const unsigned char bytes[] = {0, 1};
    CHECK(winners_digest(w) == fnv1a64(bytes));
    CHECK(mix_seed(1, 2, 3) == splitmix64(splitmix64(splitmix64(1) ^ 2) ^ 3));
}
