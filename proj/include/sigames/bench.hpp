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
#include <stdexcept>
#include <string>
#include <vector>

#include "sigames/generators.hpp"
#include "sigames/solvers.hpp"

namespace sigames {

inline constexpr const char* kBenchCsvHeader =
    "generator,param,seed,algorithm,rule,iterations,evaluations,wall_ms,winners_digest";

struct BenchRecord {
    std::string generator;
    std::uint64_t param = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::string rule;
    std::uint64_t iterations = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t wall_ms = 0;
    std::uint64_t winners_digest = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Raised when two algorithms disagree on the winners of one instance.
class WinnerMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BenchConfig {
    enum class Suite { Random, Friedmann };

    Suite suite = Suite::Friedmann;
    /// Any of: classic, slow, symmetric, symmetric-early, brute.
    std::vector<std::string> algorithms{"classic", "symmetric"};
    /// Rules for the classic algorithm; the others ignore them.
    std::vector<SwitchRule::Kind> rules{SwitchRule::Kind::SwitchAll};
    std::uint32_t repeat = 1;
    std::uint64_t seed_base = 0;

    /// Random suite: `games` instances drawn from `random` (its seed is replaced per instance).
    RandomGameParams random{1000, 2, 4, 1000, 0.5, 0};
    std::uint32_t games = 1;

    /// Friedmann suite: bits 1..bits_max.
    std::uint32_t bits_max = 10;

    bool timing = true;
    /// Worker threads; 0 means SI_GAMES_THREADS or the hardware concurrency.
    unsigned threads = 0;

    /// Empty if valid, otherwise a description of the first problem.
    std::string check() const;
};

inline constexpr const char* kBenchAlgorithms[] = {"classic", "slow", "symmetric", "symmetric-early", "brute"};

/**
 * Runs every (instance, algorithm, rule, repeat) cell and returns the records
 * sorted by (generator, param, seed, algorithm, rule). Instance seeds are
 * mix_seed(seed_base, param, 0); the run seed of repeat r is
 * mix_seed(seed_base, param, r). Throws WinnerMismatch if winner digests of
 * one instance differ.
 */
std::vector<BenchRecord> run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRecord>& records);

/// Worker count from SI_GAMES_THREADS, defaulting to the hardware concurrency.
unsigned default_threads();

}  // namespace sigames
