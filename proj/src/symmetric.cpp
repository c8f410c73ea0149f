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

#include <map>

#include "sigames/digest.hpp"
#include "sigames/solvers.hpp"
#include "solver_internal.hpp"
#include "valuation_internal.hpp"

namespace sigames {

namespace {

/// Profitable switches that agree with the counter strategy `advice`.
std::vector<Edge> advised(const ProfitableSet& prof, const PositionalStrategy& advice, UpdateMode mode)
{
    std::vector<Edge> out;
    for (const Edge& e : prof) {
        if (advice[e.from] != e.to) continue;
        out.push_back(e);
        if (mode == UpdateMode::Slow) break;
    }
    return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

SolveReport run_symmetric(const ParityGame& game, const PositionalStrategy& init_sigma,
                          const PositionalStrategy& init_tau, UpdateMode mode, bool trace, bool early)
{
    detail::require_injective(game);
    detail::require_total(game, init_sigma, Owner::Max);
    detail::require_total(game, init_tau, Owner::Min);

    const std::uint64_t cap = saturating_add(strategy_count(game, Owner::Max), strategy_count(game, Owner::Min));
    PositionalStrategy sigma = init_sigma;
    PositionalStrategy tau = init_tau;
    std::optional<BestResponse> to_sigma;  // Min's answer to sigma: tau^c_sigma, val(sigma)
    std::optional<BestResponse> to_tau;    // Max's answer to tau: sigma^c_tau, val(tau)
    SolveReport report;

    for (;;) {
        BestResponse r_sigma = best_response_min(game, sigma, to_sigma ? &to_sigma->strategy : nullptr);
        BestResponse r_tau = best_response_max(game, tau, to_tau ? &to_tau->strategy : nullptr);
        report.evaluations += 2;

        // Max's values never decrease, Min's never increase.
        if (to_sigma && !detail::weakly_improves(Owner::Max, to_sigma->value, r_sigma.value))
            throw InternalError("symmetric improvement lowered Max's valuation");
        if (to_tau && !detail::weakly_improves(Owner::Min, to_tau->value, r_tau.value))
            throw InternalError("symmetric improvement raised Min's valuation");

        const ProfitableSet prof_sigma = profitable_updates(game, sigma, r_sigma.value);
        const ProfitableSet prof_tau = profitable_updates(game, tau, r_tau.value);

        if (early && prof_sigma.empty()) {
            SolveReport out = detail::finish(sigma, std::move(r_sigma));
            out.iterations = report.iterations;
            out.evaluations = report.evaluations;
            out.trace = std::move(report.trace);
            return out;
        }
        if (early && prof_tau.empty()) {
            SolveReport out = detail::finish(tau, std::move(r_tau));
            out.iterations = report.iterations;
            out.evaluations = report.evaluations;
            out.trace = std::move(report.trace);
            return out;
        }

        auto step_sigma = advised(prof_sigma, r_tau.strategy, mode);
        auto step_tau = advised(prof_tau, r_sigma.strategy, mode);
        if (step_sigma.empty() && step_tau.empty()) {
            if (r_sigma.value != r_tau.value)
                throw InternalError("symmetric improvement stopped at a non-optimal pair");
            report.value = std::move(r_sigma.value);
            report.winners = winners_of(report.value);
            report.sigma = std::move(sigma);
            report.tau = std::move(tau);
            return report;
        }

        ++report.iterations;
        if (report.iterations > cap) throw InternalError("symmetric improvement exceeded the strategy-space bound");
        if (trace) {
            report.trace.push_back({report.iterations, Owner::Max, step_sigma, prof_sigma.size(),
                                    value_digest(r_sigma.value)});
            report.trace.push_back({report.iterations, Owner::Min, step_tau, prof_tau.size(),
                                    value_digest(r_tau.value)});
        }
        sigma.apply(step_sigma);
        tau.apply(step_tau);
        to_sigma = std::move(r_sigma);
        to_tau = std::move(r_tau);
    }
}

std::vector<VertexId> pair_key(const PositionalStrategy& sigma, const PositionalStrategy& tau)
{
    std::vector<VertexId> key(sigma.choices().begin(), sigma.choices().end());
    key.insert(key.end(), tau.choices().begin(), tau.choices().end());
    return key;
}

}  // namespace

SolveReport symmetric_si(const ParityGame& game, const PositionalStrategy& init_sigma,
                         const PositionalStrategy& init_tau, UpdateMode mode, bool trace)
{
    return run_symmetric(game, init_sigma, init_tau, mode, trace, false);
}

SolveReport symmetric_si_early(const ParityGame& game, const PositionalStrategy& init_sigma,
                               const PositionalStrategy& init_tau, UpdateMode mode, bool trace)
{
    return run_symmetric(game, init_sigma, init_tau, mode, trace, true);
}

NaiveOutcome naive_symmetric(const ParityGame& game, const PositionalStrategy& init_sigma,
                             const PositionalStrategy& init_tau, std::uint64_t max_rounds)
{
    detail::require_injective(game);
    detail::require_total(game, init_sigma, Owner::Max);
    detail::require_total(game, init_tau, Owner::Min);
    if (max_rounds == 0) throw std::invalid_argument("max_rounds must be at least 1");

    PositionalStrategy sigma = init_sigma;
    PositionalStrategy tau = init_tau;
    std::map<std::vector<VertexId>, std::uint64_t> seen{{pair_key(sigma, tau), 0}};
    std::uint64_t evaluations = 0;

    for (std::uint64_t round = 0;; ++round) {
        BestResponse r_sigma = best_response_min(game, sigma);
        BestResponse r_tau = best_response_max(game, tau);
        evaluations += 2;

        if (r_tau.strategy == sigma && r_sigma.strategy == tau) {
            // Mutual best responses: val(sigma) = val(sigma, tau) = val(tau).
            if (r_sigma.value != r_tau.value) throw InternalError("fixed point of best responses is not optimal");
            SolveReport report;
            report.value = std::move(r_sigma.value);
            report.winners = winners_of(report.value);
            report.sigma = std::move(sigma);
            report.tau = std::move(tau);
            report.iterations = round;
            report.evaluations = evaluations;
            return report;
        }

        if (round + 1 > max_rounds) throw RoundLimitExceeded("naive symmetric improvement hit the round limit");
        sigma = std::move(r_tau.strategy);
        tau = std::move(r_sigma.strategy);
        auto [it, fresh] = seen.emplace(pair_key(sigma, tau), round + 1);
        if (!fresh) return CycleDetected{it->second, round + 1 - it->second};
    }
}

}  // namespace sigames
