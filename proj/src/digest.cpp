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

#include "sigames/digest.hpp"

namespace sigames {

std::uint64_t fnv1a64(std::span<const unsigned char> bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view text)
{
    return fnv1a64(std::span(reinterpret_cast<const unsigned char*>(text.data()), text.size()));
}

std::uint64_t value_digest(const ValuationVector& value)
{
    return fnv1a64(valuation_json_lines(value));
}

std::uint64_t winners_digest(std::span<const Owner> winners)
{
    std::vector<unsigned char> bits(winners.size());
    for (std::size_t v = 0; v < winners.size(); ++v) bits[v] = winners[v] == Owner::Max ? 0 : 1;
    return fnv1a64(bits);
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t param, std::uint64_t repeat)
{
    return splitmix64(splitmix64(splitmix64(base) ^ param) ^ repeat);
}

}  // namespace sigames
