#include "ordext/io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <unordered_set>

namespace ordext {

namespace {

constexpr std::string_view kSeparator = "---";

struct Line {
    std::size_t number;
    std::string text; // trimmed
};

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Non-blank, non-comment lines, trimmed.
std::vector<Line> content_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto t = trim(raw);
        if (t.empty() || t.front() == '#') continue;
        out.push_back({number, std::string(t)});
    }
    if (in.bad()) throw ParseError(number, "read error");
    return out;
}

ElementId token_at(const Line& line, std::string_view text) {
    auto t = trim(text);
    if (!ElementId::is_valid_token(t))
        throw ParseError(line.number, "invalid element token '" + std::string(t) + "' in '" + line.text + "'");
    return ElementId(std::string(t));
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

RelationFile parse_relation(std::istream& in) {
    const auto lines = content_lines(in);
    std::optional<std::size_t> separator;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].text != kSeparator) continue;
        if (separator) throw ParseError(lines[i].number, "more than one '---' separator");
        separator = i;
    }

    RelationFile file;
    std::unordered_set<ElementId> seen;
    const std::size_t body_start = separator ? *separator + 1 : 0;
    for (std::size_t i = 0; i < body_start; ++i) {
        if (i == separator) continue;
        if (lines[i].text.find('<') != std::string::npos)
            throw ParseError(lines[i].number, "pair in header section: '" + lines[i].text + "'");
        ElementId e = token_at(lines[i], lines[i].text);
        seen.insert(e);
        file.ground.push_back(std::move(e));
    }

    auto note = [&](const ElementId& e) {
        if (seen.insert(e).second) file.ground.push_back(e);
    };
    for (std::size_t i = body_start; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto lt = line.text.find('<');
        if (lt == std::string::npos || line.text.find('<', lt + 1) != std::string::npos)
            throw ParseError(line.number, "expected 'x < y', got '" + line.text + "'");
        std::string_view text = line.text;
        ElementId x = token_at(line, text.substr(0, lt));
        ElementId y = token_at(line, text.substr(lt + 1));
        note(x);
        note(y);
        file.pairs.emplace_back(std::move(x), std::move(y));
    }
    return file;
}

std::vector<ElementId> parse_subset(std::istream& in) {
    std::vector<ElementId> out;
    for (const auto& line : content_lines(in)) {
        if (line.text == kSeparator) throw ParseError(line.number, "unexpected '---' in subset file");
        out.push_back(token_at(line, line.text));
    }
    return out;
}

Partition parse_partition(std::istream& in) {
    const auto lines = content_lines(in);
    Partition p;
    if (lines.empty()) return p;
    p.blocks.emplace_back();
    for (const auto& line : lines) {
        if (line.text == kSeparator) {
            p.blocks.emplace_back();
        } else {
            p.blocks.back().push_back(token_at(line, line.text));
        }
    }
    return p;
}

std::vector<Pair> parse_bijection(std::istream& in) {
    std::vector<Pair> out;
    for (const auto& line : content_lines(in)) {
        const auto arrow = line.text.find("->");
        if (arrow == std::string::npos) throw ParseError(line.number, "expected 'y -> x', got '" + line.text + "'");
        std::string_view text = line.text;
        out.emplace_back(token_at(line, text.substr(0, arrow)), token_at(line, text.substr(arrow + 2)));
    }
    return out;
}

void write_relation(std::ostream& out, const std::vector<ElementId>& ground, const std::vector<Pair>& pairs) {
    for (const auto& e : ground) out << e << '\n';
    out << kSeparator << '\n';
    for (const auto& [x, y] : pairs) out << x << " < " << y << '\n';
}

} // namespace ordext
