#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "yqc/ast.hpp"
#include "yqc/diagnostics.hpp"

namespace yqc {

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\n' || s[b] == '\r'))
        ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\n' || s[e - 1] == '\r'))
        --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    bool in_quotes = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\\' && i + 1 < text.size()) {
            cur.push_back(c);
            cur.push_back(text[++i]);
            continue;
        }
        if (c == '"')
            in_quotes = !in_quotes;
        if (!in_quotes) {
            if (c == '{' || c == '[' || c == '(')
                ++depth;
            else if (c == '}' || c == ']' || c == ')')
                --depth;
            else if (c == sep && depth == 0) {
                parts.push_back(cur);
                cur.clear();
                continue;
            }
        }
        cur.push_back(c);
    }
    parts.push_back(cur);
    return parts;
}

inline std::size_t find_top_level(std::string_view text, char target) {
    int depth = 0;
    bool in_quotes = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\\') {
            ++i;
            continue;
        }
        if (c == '"')
            in_quotes = !in_quotes;
        if (in_quotes)
            continue;
        if (c == '{' || c == '[' || c == '(')
            ++depth;
        else if (c == '}' || c == ']' || c == ')')
            --depth;
        else if (c == target && depth == 0)
            return i;
    }
    return std::string_view::npos;
}

} // namespace detail

/// Parses the content of a `[...]` block into comma-separated entries:
/// key=value pairs, bare flags, or "quoted" labels. A value wrapped in one
/// layer of braces has that layer removed.
inline std::vector<Attribute> parse_attributes(std::string_view content, SourceSpan span) {
    std::vector<Attribute> out;
    for (const std::string& part : detail::split_top_level(content, ',')) {
        std::string entry = detail::trim(part);
        if (entry.empty())
            continue;
        Attribute attr;
        attr.span = span;
        if (entry.front() == '"' && entry.back() == '"' && entry.size() >= 2) {
            attr.form = AttributeForm::quoted_label;
            attr.value = entry.substr(1, entry.size() - 2);
            out.push_back(std::move(attr));
            continue;
        }
        std::size_t eq = detail::find_top_level(entry, '=');
        if (eq == std::string_view::npos) {
            attr.form = AttributeForm::flag;
            attr.key = entry;
        } else {
            attr.form = AttributeForm::key_value;
            attr.key = detail::trim(std::string_view(entry).substr(0, eq));
            std::string value = detail::trim(std::string_view(entry).substr(eq + 1));
            if (value.size() >= 2 && value.front() == '{' && value.back() == '}')
                value = value.substr(1, value.size() - 2);
            attr.value = std::move(value);
            if (attr.key.empty())
                fail("attribute entry has an empty key", span);
        }
        out.push_back(std::move(attr));
    }
    return out;
}

} // namespace yqc
