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

#include "sigames/report.hpp"

namespace sigames {

namespace {

nlohmann::ordered_json strategy_json(const PositionalStrategy& s)
{
    auto out = nlohmann::ordered_json::object();
    for (VertexId v = 0; v < s.size(); ++v)
        if (s[v] != kNoVertex) out[std::to_string(v)] = s[v];
    return out;
}

}  // namespace

nlohmann::ordered_json report_json(const SolveReport& report)
{
    nlohmann::ordered_json out;
    auto winners = nlohmann::ordered_json::object();
    for (VertexId v = 0; v < report.winners.size(); ++v) winners[std::to_string(v)] = to_string(report.winners[v]);
    out["winners"] = std::move(winners);
    out["sigma"] = strategy_json(report.sigma);
    out["tau"] = strategy_json(report.tau);
    out["iterations"] = report.iterations;
    out["evaluations"] = report.evaluations;
    return out;
}

std::string trace_json_lines(const std::vector<TraceEntry>& trace)
{
    std::string out;
    for (const auto& t : trace) {
        nlohmann::ordered_json line;
        line["iter"] = t.iter;
        line["player"] = to_string(t.player);
        auto switched = nlohmann::ordered_json::array();
        for (const auto& e : t.switched) switched.push_back({e.from, e.to});
        line["switched"] = std::move(switched);
        line["prof_size"] = t.prof_size;
        line["value_digest"] = t.value_digest;
        out += line.dump();
        out += '\n';
    }
    return out;
}

}  // namespace sigames
