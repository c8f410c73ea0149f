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
#include <span>
#include <string_view>
#include <vector>

#include "sigames/game.hpp"
#include "sigames/valuation.hpp"

namespace sigames {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::span<const unsigned char> bytes);
std::uint64_t fnv1a64(std::string_view text);

/// FNV-1a over valuation_json_lines(value).
std::uint64_t value_digest(const ValuationVector& value);

/// FNV-1a over one byte per vertex in id order: 0 if Max wins, 1 if Min wins.
std::uint64_t winners_digest(std::span<const Owner> winners);

/// The splitmix64 output function.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-run seed: splitmix64(splitmix64(splitmix64(base) ^ param) ^ repeat).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t param, std::uint64_t repeat);

}  // namespace sigames
