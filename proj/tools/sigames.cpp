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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigames/bench.hpp"
#include "sigames/digest.hpp"
#include "sigames/generators.hpp"
#include "sigames/pgsolver.hpp"
#include "sigames/report.hpp"
#include "sigames/solvers.hpp"

using namespace sigames;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitMismatch = 4;

/// Bad input or flags; reported on stderr with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

/// Strategy file: {"sigma": {id: id}, "tau": {id: id}}, the shape of a solve
/// report. Vertices left out keep their first successor.
void load_init(const ParityGame& game, const std::string& path, PositionalStrategy& sigma,
               PositionalStrategy& tau)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_all(path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("init file: " + std::string(e.what()));
    }
    auto apply = [&](const char* key, PositionalStrategy& s) {
        if (!doc.contains(key)) return;
        for (const auto& [k, w] : doc[key].items()) {
            const unsigned long v = std::stoul(k);
            if (v >= game.size() || game.owner(v) != s.player() || !w.is_number_unsigned() ||
                !game.has_edge(v, w.get<VertexId>()))
                throw UsageError("init file: invalid choice " + k + " -> " + w.dump());
            s.set(v, w.get<VertexId>());
        }
    };
    apply("sigma", sigma);
    apply("tau", tau);
}

ParityGame load_game(const std::string& path, bool normalize)
{
    ParityGame game = parse_pgsolver(read_all(path));
    if (normalize) game = make_colours_unique(game);
    const auto problems = validate(game);
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += p.message() + "\n";
        if (!normalize) msg += "(repeated colours can be fixed with --normalize)\n";
        throw UsageError(msg);
    }
    return game;
}

struct SolveArgs {
    std::string file;
    std::string algo = "symmetric";
    std::string player = "max";
    std::string rule = "switch-all";
    std::uint64_t seed = 0;
    std::string init = "first";
    std::uint64_t max_rounds = 100000;
    bool trace = false;
    bool dump_valuation = false;
    bool normalize = false;
    bool slow_mode = false;
};

int cmd_solve(const SolveArgs& a)
{
    const ParityGame game = load_game(a.file, a.normalize);

    PositionalStrategy sigma = PositionalStrategy::first_successor(game, Owner::Max);
    PositionalStrategy tau = PositionalStrategy::first_successor(game, Owner::Min);
    if (a.init == "random") {
        sigma = PositionalStrategy::random(game, Owner::Max, mix_seed(a.seed, 1, 0));
        tau = PositionalStrategy::random(game, Owner::Min, mix_seed(a.seed, 1, 1));
    } else if (a.init.starts_with("file:")) {
        load_init(game, a.init.substr(5), sigma, tau);
    } else if (a.init != "first") {
        throw UsageError("--init must be first, random or file:<path>");
    }

    const Owner player = a.player == "min" ? Owner::Min : Owner::Max;
    const auto rule = parse_switch_rule(a.rule);
    if (!rule) throw UsageError("unknown rule '" + a.rule + "'");
    const UpdateMode mode = a.slow_mode ? UpdateMode::Slow : UpdateMode::Maximal;
    const PositionalStrategy& own = player == Owner::Max ? sigma : tau;

    SolveReport report;
    if (a.algo == "classic") {
        report = classic_si(game, player, SwitchRule{*rule, a.seed}, own, a.trace);
    } else if (a.algo == "slow") {
        report = slow_si(game, player, own, a.trace);
    } else if (a.algo == "symmetric") {
        report = symmetric_si(game, sigma, tau, mode, a.trace);
    } else if (a.algo == "symmetric-early") {
        report = symmetric_si_early(game, sigma, tau, mode, a.trace);
    } else if (a.algo == "brute") {
        report = brute_force_solve(game);
    } else {
        auto outcome = naive_symmetric(game, sigma, tau, a.max_rounds);
        if (auto* cycle = std::get_if<CycleDetected>(&outcome)) {
            nlohmann::ordered_json out;
            out["cycle"] = {{"first_index", cycle->first_index}, {"period", cycle->period}};
            std::cout << out.dump() << '\n';
            return 0;
        }
        report = std::get<SolveReport>(std::move(outcome));
    }

    std::cout << report_json(report).dump() << '\n';
    if (a.trace) std::cout << trace_json_lines(report.trace);
    if (a.dump_valuation) std::cout << valuation_json_lines(report.value);
    return 0;
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Strategy improvement for parity games"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve a PGSolver game and print a JSON report");
    s->add_option("file", solve.file, "Game file, or - for stdin")->required();
    s->add_option("--algo", solve.algo)
        ->check(CLI::IsMember({"classic", "slow", "naive", "symmetric", "symmetric-early", "brute"}));
    s->add_option("--player", solve.player, "Player improved by classic and slow")
        ->check(CLI::IsMember({"max", "min"}));
    s->add_option("--rule", solve.rule, "Switching rule for classic");
    s->add_option("--seed", solve.seed, "Seed for randomized rules and --init random");
    s->add_option("--init", solve.init, "first, random or file:<path>");
    s->add_option("--max-rounds", solve.max_rounds, "Round limit for naive");
    s->add_flag("--slow-mode", solve.slow_mode, "Symmetric variants take one switch per player");
    s->add_flag("--normalize", solve.normalize, "Make colours unique before solving");
    s->add_flag("--trace", solve.trace, "Append one JSON line per strategy update");
    s->add_flag("--dump-valuation", solve.dump_valuation, "Append one JSON line per vertex valuation");

    auto* g = app.add_subcommand("gen", "Write a generated game in PGSolver format");
    g->require_subcommand(1);
    std::string gen_out;
    RandomGameParams rp{0, 1, 1, 1, 0.5, 0};
    auto* gr = g->add_subcommand("random", "Seeded random game");
    gr->add_option("--n", rp.vertices)->required();
    gr->add_option("--outmin", rp.out_min);
    gr->add_option("--outmax", rp.out_max);
    gr->add_option("--colours", rp.colour_max);
    gr->add_option("--bias", rp.owner_bias, "Probability that a vertex belongs to Max");
    gr->add_option("--seed", rp.seed);
    gr->add_option("--out", gen_out);
    std::uint32_t bits = 1;
    auto* gf = g->add_subcommand("friedmann", "Lower-bound trap for switch-all");
    gf->add_option("--bits", bits)->required();
    gf->add_option("--out", gen_out);

    BenchConfig bc;
    std::string suite = "friedmann", algos = "classic,symmetric", rules = "switch-all", bench_out;
    bool no_timing = false;
    auto* b = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
    b->add_option("--suite", suite)->check(CLI::IsMember({"random", "friedmann"}));
    b->add_option("--algos", algos, "Comma list of classic, slow, symmetric, symmetric-early, brute");
    b->add_option("--rules", rules, "Comma list of switching rules for classic");
    b->add_option("--repeat", bc.repeat);
    b->add_option("--seed-base", bc.seed_base);
    b->add_option("--out", bench_out, "CSV path, stdout if omitted");
    b->add_option("--games", bc.games, "Random suite: number of instances");
    b->add_option("--n", bc.random.vertices);
    b->add_option("--outmin", bc.random.out_min);
    b->add_option("--outmax", bc.random.out_max);
    b->add_option("--colours", bc.random.colour_max);
    b->add_option("--bias", bc.random.owner_bias);
    b->add_option("--bits-max", bc.bits_max, "Friedmann suite: largest bit count");
    b->add_option("--threads", bc.threads, "Worker threads (default: SI_GAMES_THREADS or all cores)");
    b->add_flag("--no-timing", no_timing, "Write 0 in the wall_ms column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*s) return cmd_solve(solve);

        if (*gr) {
            if (auto problem = rp.check(); !problem.empty()) throw UsageError(problem);
            write_output(gen_out, write_pgsolver(gen_random(rp)));
            return 0;
        }
        if (*gf) {
            if (bits < 1) throw UsageError("--bits must be at least 1");
            write_output(gen_out, write_pgsolver(gen_friedmann_trap(bits)));
            return 0;
        }

        bc.suite = suite == "random" ? BenchConfig::Suite::Random : BenchConfig::Suite::Friedmann;
        bc.algorithms = split_list(algos);
        bc.rules.clear();
        for (const auto& name : split_list(rules)) {
            auto kind = parse_switch_rule(name);
            if (!kind) throw UsageError("unknown rule '" + name + "'");
            bc.rules.push_back(*kind);
        }
        bc.timing = !no_timing;
        if (auto problem = bc.check(); !problem.empty()) throw UsageError(problem);
        write_output(bench_out, bench_csv(run_bench(bc)));
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GameError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeGuardExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const WinnerMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
