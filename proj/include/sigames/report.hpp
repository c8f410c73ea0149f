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

#include <string>

#include "json.hpp"
#include "sigames/solvers.hpp"

namespace sigames {

/// {"winners": {id: "max"|"min"}, "sigma": {id: id}, "tau": {id: id},
///  "iterations": N, "evaluations": N}
nlohmann::ordered_json report_json(const SolveReport& report);

/// One line per entry: {"iter","player","switched":[[v,w],...],"prof_size","value_digest"}.
std::string trace_json_lines(const std::vector<TraceEntry>& trace);

}  // namespace sigames
