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

#include <algorithm>
#include <random>

#include "sigames/digest.hpp"
#include "sigames/solvers.hpp"
#include "solver_internal.hpp"
#include "valuation_internal.hpp"

namespace sigames {

std::string_view to_string(SwitchRule::Kind kind)
{
    switch (kind) {
    case SwitchRule::Kind::SwitchAll: return "switch-all";
    case SwitchRule::Kind::SingleSwitch: return "single-switch";
    case SwitchRule::Kind::RandomEdge: return "random-edge";
    case SwitchRule::Kind::RandomFacet: return "random-facet";
    case SwitchRule::Kind::SwitchHalf: return "switch-half";
    }
    return "?";
}

std::optional<SwitchRule::Kind> parse_switch_rule(std::string_view name)
{
    for (const auto kind : kAllSwitchRules)
        if (to_string(kind) == name) return kind;
    return std::nullopt;
}

std::vector<Owner> winners_of(const ValuationVector& value)
{
    std::vector<Owner> out(value.size());
    for (std::size_t v = 0; v < value.size(); ++v)
        out[v] = is_even(value[v].dominant) ? Owner::Max : Owner::Min;
    return out;
}

namespace detail {

BestResponse counter(const ParityGame& game, const PositionalStrategy& s, const PositionalStrategy* hint)
{
    return s.player() == Owner::Max ? best_response_min(game, s, hint) : best_response_max(game, s, hint);
}

bool improves(Owner player, const ValuationVector& before, const ValuationVector& after)
{
    return player == Owner::Max ? pointwise_less(before, after) : pointwise_less(after, before);
}

bool weakly_improves(Owner player, const ValuationVector& before, const ValuationVector& after)
{
    return player == Owner::Max ? pointwise_leq(before, after) : pointwise_leq(after, before);
}

SolveReport finish(const PositionalStrategy& s, BestResponse response)
{
    SolveReport report;
    report.value = std::move(response.value);
    report.winners = winners_of(report.value);
    if (s.player() == Owner::Max) {
        report.sigma = s;
        report.tau = std::move(response.strategy);
    } else {
        report.sigma = std::move(response.strategy);
        report.tau = s;
    }
    return report;
}

std::vector<Edge> best_switches(const ProfitableSet& prof, const ValuationVector& val, Owner player)
{
    const auto better = player == Owner::Max ? std::strong_ordering::greater : std::strong_ordering::less;
    std::vector<Edge> out;
    for (const Edge& e : prof) {
        if (!out.empty() && out.back().from == e.from) {
            if (compare(val[e.to], val[out.back().to]) == better) out.back().to = e.to;
        } else {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace detail

namespace {

std::vector<Edge> select(SwitchRule rule, const ProfitableSet& prof,
                         const ValuationVector& val, Owner player, std::uint64_t round)
{
    auto best = detail::best_switches(prof, val, player);
    std::mt19937_64 rng(mix_seed(rule.seed, 0x5157u, round));
    switch (rule.kind) {
    case SwitchRule::Kind::SwitchAll:
        return best;
    case SwitchRule::Kind::SingleSwitch:
        best.resize(1);
        return best;
    case SwitchRule::Kind::RandomEdge: {
        std::uniform_int_distribution<std::size_t> pick(0, prof.size() - 1);
        return {prof[pick(rng)]};
    }
    case SwitchRule::Kind::SwitchHalf: {
        std::bernoulli_distribution coin(0.5);
        for (;;) {
            std::vector<Edge> chosen;
            for (const Edge& e : best)
                if (coin(rng)) chosen.push_back(e);
            if (!chosen.empty()) return chosen;
        }
    }
    case SwitchRule::Kind::RandomFacet:
        break;
    }
    throw std::logic_error("random-facet has no per-round selection");
}

void record(SolveReport& report, bool trace, std::uint64_t iter, Owner player, std::vector<Edge> switched,
            std::size_t prof_size, const ValuationVector& before)
{
    if (!trace) return;
    report.trace.push_back({iter, player, std::move(switched), prof_size, value_digest(before)});
}

/**
 * Random facet over the player's edges: drop a random non-strategy edge,
 * solve the remaining game, then switch to the dropped edge if it is
 * profitable and start over. Removing one player's edges leaves the
 * opponent's best responses untouched, so every evaluation is done in the
 * full game.
 */
class RandomFacet {
public:
    RandomFacet(const ParityGame& game, Owner player, std::uint64_t seed, bool trace)
        : game_(game), player_(player), rng_(mix_seed(seed, 0xfacefu, 0)), trace_(trace)
    {
        for (VertexId v = 0; v < game.size(); ++v)
            if (game.owner(v) == player)
                for (const VertexId w : game.successors(v)) edges_.push_back({v, w});
        removed_.assign(edges_.size(), false);
        cap_ = strategy_count(game, player);
    }

    SolveReport run(const PositionalStrategy& init)
    {
        PositionalStrategy s = solve(init);
        SolveReport out = detail::finish(s, evaluate(s));
        out.iterations = report_.iterations;
        out.evaluations = report_.evaluations;
        out.trace = std::move(report_.trace);
        return out;
    }

private:
    const BestResponse& evaluate(const PositionalStrategy& s)
    {
        if (!cached_ || cached_strategy_ != s) {
            cached_ = detail::counter(game_, s, cached_ ? &cached_->strategy : nullptr);
            cached_strategy_ = s;
            ++report_.evaluations;
        }
        return *cached_;
    }

    PositionalStrategy solve(PositionalStrategy s)
    {
        for (;;) {
            std::vector<std::size_t> free;
            for (std::size_t i = 0; i < edges_.size(); ++i)
                if (!removed_[i] && s[edges_[i].from] != edges_[i].to) free.push_back(i);
            if (free.empty()) return s;

            std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
            const std::size_t dropped = free[pick(rng_)];
            removed_[dropped] = true;
            PositionalStrategy inner = solve(s);
            removed_[dropped] = false;

            const Edge e = edges_[dropped];
            const ValuationVector before = evaluate(inner).value;
            const ProfitableSet prof = profitable_updates(game_, inner, before);
            if (!std::binary_search(prof.begin(), prof.end(), e)) return inner;

            const std::size_t prof_size = prof.size();
            inner.set(e.from, e.to);
            ++report_.iterations;
            if (report_.iterations > cap_) throw InternalError("random-facet exceeded the strategy-space bound");
            record(report_, trace_, report_.iterations, player_, {e}, prof_size, before);
            if (!detail::improves(player_, before, evaluate(inner).value))
                throw InternalError("random-facet switch did not improve the strategy");
            s = std::move(inner);
        }
    }

    const ParityGame& game_;
    Owner player_;
    std::mt19937_64 rng_;
    bool trace_;
    std::vector<Edge> edges_;
    std::vector<bool> removed_;
    std::uint64_t cap_ = 0;
    std::optional<BestResponse> cached_;
    PositionalStrategy cached_strategy_;
    SolveReport report_;
};

}  // namespace

SolveReport classic_si(const ParityGame& game, Owner player, SwitchRule rule, const PositionalStrategy& init,
                       bool trace)
{
    detail::require_injective(game);
    detail::require_total(game, init, player);

    if (rule.kind == SwitchRule::Kind::RandomFacet) return RandomFacet(game, player, rule.seed, trace).run(init);

    const std::uint64_t cap = strategy_count(game, player);
    SolveReport report;
    PositionalStrategy s = init;
    BestResponse response = detail::counter(game, s, nullptr);
    ++report.evaluations;

    for (;;) {
        const ProfitableSet prof = profitable_updates(game, s, response.value);
        if (prof.empty()) break;

        auto chosen = select(rule, prof, response.value, player, report.iterations);
        s.apply(chosen);
        ++report.iterations;
        if (report.iterations > cap) throw InternalError("strategy improvement exceeded the strategy-space bound");
        record(report, trace, report.iterations, player, std::move(chosen), prof.size(), response.value);

        BestResponse next = detail::counter(game, s, &response.strategy);
        ++report.evaluations;
        if (!detail::improves(player, response.value, next.value))
            throw InternalError("strategy improvement step did not strictly improve the valuation");
        response = std::move(next);
    }

    SolveReport out = detail::finish(s, std::move(response));
    out.iterations = report.iterations;
    out.evaluations = report.evaluations;
    out.trace = std::move(report.trace);
    return out;
}

SolveReport slow_si(const ParityGame& game, Owner player, const PositionalStrategy& init, bool trace)
{
    return classic_si(game, player, {SwitchRule::Kind::SingleSwitch, 0}, init, trace);
}

}  // namespace sigames
