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

#include "sigames/pgsolver.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace sigames {

namespace {

struct Entry {
    std::size_t line;
    Colour colour;
    Owner owner;
    std::vector<VertexId> successors;
    std::string label;
};

/// Cursor over one statement (the text of a line before its `;`).
class Scanner {
public:
    Scanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool at_end()
    {
        skip_space();
        return pos_ == text_.size();
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::uint64_t number(const char* what)
    {
        skip_space();
        std::uint64_t value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail(std::string("expected ") + what);
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    bool consume(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string quoted()
    {
        if (!consume('"')) fail("expected '\"'");
        const auto close = text_.find('"', pos_);
        if (close == std::string_view::npos) fail("unterminated label");
        std::string label(text_.substr(pos_, close - pos_));
        pos_ = close + 1;
        return label;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : GameError("line " + std::to_string(line) + ": " + what), line_(line)
{
}

ParityGame parse_pgsolver(std::string_view text)
{
    std::vector<std::optional<Entry>> entries;
    std::optional<std::uint64_t> header_max;
    std::size_t line_no = 0;
    bool any_statement = false;

    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const auto raw = strip(text.substr(start, end - start));
        start = end + 1;
        if (raw.empty()) continue;

        if (raw.back() != ';') throw ParseError(line_no, "statement must end with ';'");
        const auto body = raw.substr(0, raw.size() - 1);

        if (body.starts_with("parity")) {
            if (any_statement) throw ParseError(line_no, "header must come first");
            Scanner scan(body.substr(6), line_no);
            header_max = scan.number("maximal vertex id");
            if (!scan.at_end()) scan.fail("trailing characters after header");
            any_statement = true;
            continue;
        }
        any_statement = true;

        Scanner scan(body, line_no);
        const auto id = scan.number("vertex id");
        const auto colour = scan.number("priority");
        const auto owner = scan.number("owner");
        if (owner > 1) scan.fail("owner must be 0 or 1");
        if (colour > std::numeric_limits<Colour>::max()) scan.fail("priority out of range");
        if (id >= kNoVertex) scan.fail("vertex id out of range");

        Entry entry{line_no, static_cast<Colour>(colour), owner == 0 ? Owner::Max : Owner::Min, {}, {}};
        if (scan.at_end() || scan.peek() == '"')
            throw ParseError(line_no, "vertex " + std::to_string(id) + " has an empty successor list");
        do {
            const auto succ = scan.number("successor id");
            if (succ >= kNoVertex) scan.fail("successor id out of range");
            entry.successors.push_back(static_cast<VertexId>(succ));
        } while (scan.consume(','));
        if (scan.peek() == '"') entry.label = scan.quoted();
        if (!scan.at_end()) scan.fail("unexpected characters");

        if (header_max && id > *header_max)
            throw ParseError(line_no, "vertex " + std::to_string(id) + " exceeds the declared maximal id " +
                                          std::to_string(*header_max));
        if (id >= entries.size()) entries.resize(id + 1);
        if (entries[id]) throw ParseError(line_no, "duplicate vertex id " + std::to_string(id));
        entries[id] = std::move(entry);
    }

    if (header_max && entries.size() <= *header_max) entries.resize(*header_max + 1);
    if (entries.empty()) throw ParseError(std::max<std::size_t>(line_no, 1), "no vertices");

    ParityGame game;
    for (std::size_t id = 0; id < entries.size(); ++id) {
        if (!entries[id]) throw ParseError(line_no, "vertex " + std::to_string(id) + " is never defined");
        auto& e = *entries[id];
        for (const VertexId w : e.successors) {
            if (w >= entries.size() || !entries[w])
                throw ParseError(e.line, "vertex " + std::to_string(id) + " has dangling successor " +
                                             std::to_string(w));
        }
        game.add_vertex(e.colour, e.owner, std::move(e.successors), std::move(e.label));
    }
    return game;
}

std::string write_pgsolver(const ParityGame& game)
{
    std::ostringstream out;
    out << "parity " << (game.size() == 0 ? 0 : game.size() - 1) << ";\n";
    for (VertexId v = 0; v < game.size(); ++v) {
        out << v << ' ' << game.colour(v) << ' ' << (game.owner(v) == Owner::Max ? 0 : 1) << ' ';
        const auto succ = game.successors(v);
        for (std::size_t i = 0; i < succ.size(); ++i) {
            if (i) out << ',';
            out << succ[i];
        }
        if (!game.label(v).empty()) out << " \"" << game.label(v) << '"';
        out << ";\n";
    }
    return out.str();
}

}  // namespace sigames
