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

#include <deque>

#include "doctest.h"
#include "sigames/generators.hpp"
#include "sigames/pgsolver.hpp"
#include "sigames/solvers.hpp"
#include "trap_golden.hpp"

using namespace sigames;

namespace {

VertexId by_label(const ParityGame& g, const std::string& name)
{
    for (VertexId v = 0; v < g.size(); ++v)
        if (g.label(v) == name) return v;
    FAIL("no vertex " << name);
    return kNoVertex;
}

}  // namespace

TEST_CASE("trap with three bits is the drawn instance")
{
    CHECK(testing::trap3_matches_golden(gen_friedmann_trap(3)) == "");
}

TEST_CASE("trap vertex counts and colours")
{
    for (std::uint32_t n = 1; n <= 10; ++n) {
        const auto g = gen_friedmann_trap(n);
        CHECK(g.size() == trap_vertex_count(n));
        CHECK(validate(g).empty());
        for (VertexId v = 1; v < g.size(); ++v) CHECK(g.colour(v - 1) < g.colour(v));
    }
    CHECK(trap_vertex_count(3) == 34);
    CHECK_THROWS_AS(gen_friedmann_trap(0), std::invalid_argument);
}

TEST_CASE("every trap vertex reaches the sink")
{
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const auto g = gen_friedmann_trap(n);
        const VertexId x = by_label(g, "x");
        CHECK(g.colour(x) == 1);
        // backwards search from x
        std::vector<std::vector<VertexId>> pred(g.size());
        for (VertexId v = 0; v < g.size(); ++v)
            for (VertexId w : g.successors(v)) pred[w].push_back(v);
        std::vector<bool> seen(g.size(), false);
        std::deque<VertexId> queue{x};
        seen[x] = true;
        while (!queue.empty()) {
            const VertexId w = queue.front();
            queue.pop_front();
            for (VertexId v : pred[w])
                if (!seen[v]) seen[v] = true, queue.push_back(v);
        }
        CHECK(std::count(seen.begin(), seen.end(), true) == static_cast<long>(g.size()));
    }
}

TEST_CASE("one-bit trap: Min wins everywhere, closed simple cycle is even")
{
    const auto g = gen_friedmann_trap(1);
    const auto brute = brute_force_solve(g);
    for (Owner w : brute.winners) CHECK(w == Owner::Min);
    CHECK(classic_si(g, Owner::Max, {}, PositionalStrategy::first_successor(g, Owner::Max)).winners == brute.winners);

    const VertexId d = by_label(g, "d1"), e = by_label(g, "e1");
    auto sigma = PositionalStrategy::first_successor(g, Owner::Max);
    sigma.set(d, e);
    auto tau = PositionalStrategy::first_successor(g, Owner::Min);
    tau.set(e, d);
    const auto val = evaluate_pair(g, sigma, tau);
    CHECK(val[d].dominant == 4);
    CHECK(val[e].dominant == 4);
}

TEST_CASE("random games are valid and deterministic")
{
    const RandomGameParams p{1000, 2, 4, 1000, 0.5, 6};
    const auto g = gen_random(p);
    CHECK(validate(g).empty());
    CHECK(write_pgsolver(g) == write_pgsolver(gen_random(p)));
    for (VertexId v = 0; v < g.size(); ++v) {
        const auto s = g.successors(v);
        CHECK(s.size() >= 2);
        CHECK(s.size() <= 4);
        CHECK(std::is_sorted(s.begin(), s.end()));
    }
    CHECK(!(gen_random({50, 1, 3, 50, 0.5, 1}) == gen_random({50, 1, 3, 50, 0.5, 2})));
}

TEST_CASE("out-degree one needs no more classic rounds than Max vertices")
{
    const auto g = gen_random({4, 1, 1, 3, 0.5, 7});
    for (VertexId v = 0; v < g.size(); ++v) CHECK(g.successors(v).size() == 1);
    const auto r = classic_si(g, Owner::Max, {}, PositionalStrategy::first_successor(g, Owner::Max));
    CHECK(r.iterations <= g.count(Owner::Max));
}

TEST_CASE("owner bias extremes")
{
    const auto all_max = gen_random({30, 1, 2, 10, 1.0, 3});
    CHECK(all_max.count(Owner::Max) == 30);
    const auto all_min = gen_random({30, 1, 2, 10, 0.0, 3});
    CHECK(all_min.count(Owner::Min) == 30);
}

TEST_CASE("random parameters are checked")
{
    CHECK_THROWS_AS(gen_random({4, 0, 1, 3, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_random({4, 2, 1, 3, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_random({4, 1, 4, 3, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_random({4, 1, 1, 0, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_random({4, 1, 1, 3, 1.5, 1}), std::invalid_argument);
}
