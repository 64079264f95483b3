#pragma once

// Internal line/field helpers shared by the file-format readers. Not
// installed.

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "lexforge/corpus_io.hpp"

namespace lexforge::detail {

// getline with CRLF tolerance.
inline bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

inline std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

inline std::vector<std::string_view> split_spaces(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
        if (end > pos) parts.push_back(text.substr(pos, end - pos));
        pos = end;
    }
    return parts;
}

template <class Number>
bool parse_number(std::string_view text, Number& out) {
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

// surface_POS with the split on the last underscore.
inline bool parse_token(std::string_view text, Token& out) {
    const std::size_t underscore = text.rfind('_');
    if (underscore == std::string_view::npos || underscore == 0 ||
        underscore + 1 == text.size()) {
        return false;
    }
    out.surface = std::string(text.substr(0, underscore));
    out.pos = std::string(text.substr(underscore + 1));
    return true;
}

inline bool parse_token_field(std::string_view field, std::vector<Token>& out) {
    for (std::string_view raw : split_spaces(field)) {
        Token token;
        if (!parse_token(raw, token)) return false;
        out.push_back(std::move(token));
    }
    return true;
}

}  // namespace lexforge::detail
