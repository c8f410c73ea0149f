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

#include <cstddef>
#include <string>
#include <string_view>

#include "sigames/game.hpp"

namespace sigames {

class ParseError : public GameError {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/**
 * Reads the PGSolver text format:
 *
 *     parity <max-id>;
 *     <id> <priority> <owner> <succ>(,<succ>)* ["<label>"];
 *
 * The header is optional. Owner 0 is Max, 1 is Min. Ids must cover 0..max-id
 * exactly once. Successor order is preserved.
 */
ParityGame parse_pgsolver(std::string_view text);

/// Writes the canonical form read by parse_pgsolver (single spaces, `\n`).
std::string write_pgsolver(const ParityGame& game);

}  // namespace sigames
