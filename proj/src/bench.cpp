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

#include "sigames/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "sigames/digest.hpp"

namespace sigames {

namespace {

struct Instance {
    std::string generator;
    std::uint64_t param;
    ParityGame game;
};

struct Cell {
    std::size_t instance;
    std::string algorithm;
    std::optional<SwitchRule::Kind> rule;
    std::uint32_t repeat;
};

SolveReport run_cell(const ParityGame& game, const Cell& cell, std::uint64_t seed)
{
    const auto sigma = PositionalStrategy::first_successor(game, Owner::Max);
    const auto tau = PositionalStrategy::first_successor(game, Owner::Min);
    if (cell.algorithm == "classic") return classic_si(game, Owner::Max, SwitchRule{*cell.rule, seed}, sigma);
    if (cell.algorithm == "slow") return slow_si(game, Owner::Max, sigma);
    if (cell.algorithm == "symmetric") return symmetric_si(game, sigma, tau);
    if (cell.algorithm == "symmetric-early") return symmetric_si_early(game, sigma, tau);
    return brute_force_solve(game);
}

std::string rule_column(const Cell& cell)
{
    if (cell.rule) return std::string(to_string(*cell.rule));
    if (cell.algorithm == "slow") return "single-switch";
    if (cell.algorithm == "brute") return "-";
    return "maximal";
}

}  // namespace

std::string BenchConfig::check() const
{
    if (algorithms.empty()) return "no algorithms selected";
    for (const auto& a : algorithms)
        if (std::find_if(std::begin(kBenchAlgorithms), std::end(kBenchAlgorithms),
                         [&](const char* k) { return a == k; }) == std::end(kBenchAlgorithms))
            return "unknown algorithm '" + a + "'";
    if (rules.empty()) return "no switching rules selected";
    if (repeat < 1) return "repeat must be at least 1";
    if (suite == Suite::Random) {
        if (games < 1) return "games must be at least 1";
        return random.check();
    }
    if (bits_max < 1) return "bits-max must be at least 1";
    return {};
}

unsigned default_threads()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SI_GAMES_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config)
{
    if (auto problem = config.check(); !problem.empty()) throw std::invalid_argument(problem);

    std::vector<Instance> instances;
    if (config.suite == BenchConfig::Suite::Random) {
        for (std::uint64_t p = 1; p <= config.games; ++p) {
            RandomGameParams params = config.random;
            params.seed = mix_seed(config.seed_base, p, 0);
            instances.push_back({"random", p, gen_random(params)});
        }
    } else {
        for (std::uint32_t bits = 1; bits <= config.bits_max; ++bits)
            instances.push_back({"friedmann", bits, gen_friedmann_trap(bits)});
    }

    std::vector<Cell> cells;
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (std::uint32_t r = 0; r < config.repeat; ++r)
            for (const auto& algo : config.algorithms) {
                if (algo == "classic")
                    for (auto rule : config.rules) cells.push_back({i, algo, rule, r});
                else
                    cells.push_back({i, algo, std::nullopt, r});
            }

    std::vector<BenchRecord> records(cells.size());
    std::vector<std::exception_ptr> failures(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < cells.size(); c = next++) {
            const Cell& cell = cells[c];
            const Instance& inst = instances[cell.instance];
            const std::uint64_t seed = mix_seed(config.seed_base, inst.param, cell.repeat);
            try {
                const auto start = std::chrono::steady_clock::now();
                const SolveReport report = run_cell(inst.game, cell, seed);
                const auto elapsed = std::chrono::steady_clock::now() - start;
                BenchRecord& rec = records[c];
                rec.generator = inst.generator;
                rec.param = inst.param;
                rec.seed = seed;
                rec.algorithm = cell.algorithm;
                rec.rule = rule_column(cell);
                rec.iterations = report.iterations;
                rec.evaluations = report.evaluations;
                rec.wall_ms = config.timing
                                  ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
                                  : 0;
                rec.winners_digest = winners_digest(report.winners);
            } catch (...) {
                failures[c] = std::current_exception();
            }
        }
    };

    const unsigned threads = std::min<std::size_t>(config.threads ? config.threads : default_threads(),
                                                   std::max<std::size_t>(cells.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return std::tie(a.generator, a.param, a.seed, a.algorithm, a.rule) <
               std::tie(b.generator, b.param, b.seed, b.algorithm, b.rule);
    });

    std::map<std::pair<std::string, std::uint64_t>, const BenchRecord*> first;
    for (const auto& rec : records) {
        auto [it, fresh] = first.try_emplace({rec.generator, rec.param}, &rec);
        if (!fresh && it->second->winners_digest != rec.winners_digest) {
            std::ostringstream msg;
            msg << "winner disagreement on " << rec.generator << " instance " << rec.param << ": "
                << it->second->algorithm << "/" << it->second->rule << " vs " << rec.algorithm << "/" << rec.rule;
            throw WinnerMismatch(msg.str());
        }
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records)
{
    std::ostringstream out;
    out << kBenchCsvHeader << '\n';
    for (const auto& r : records)
        out << r.generator << ',' << r.param << ',' << r.seed << ',' << r.algorithm << ',' << r.rule << ','
            << r.iterations << ',' << r.evaluations << ',' << r.wall_ms << ',' << r.winners_digest << '\n';
    return out.str();
}

}  // namespace sigames
