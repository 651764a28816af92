#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "yqc/ast.hpp"
#include "yqc/diagnostics.hpp"

namespace yqc {

enum class RunStyle { normal, script, subscript_, superscript_ };

struct TextRun {
    std::string text;
    RunStyle style = RunStyle::normal;
};

struct TextLine {
    std::vector<TextRun> runs;

    std::string plain() const {
        std::string out;
        for (const TextRun& r : runs)
            out += r.text;
        return out;
    }

    std::size_t codepoints() const {
        std::size_t n = 0;
        for (const TextRun& r : runs)
            for (unsigned char c : r.text)
                if ((c & 0xC0) != 0x80)
                    ++n;
        return n;
    }
};

struct RenderedText {
    std::vector<TextLine> lines;

    bool empty() const {
        for (const TextLine& l : lines)
            if (!l.runs.empty())
                return false;
        return true;
    }
};

namespace detail {

class ValueRenderer {
public:
    explicit ValueRenderer(DiagnosticSink* sink) : sink_(sink) {}

    TextLine render_line(std::string_view text) {
        line_ = {};
        scan(text, RunStyle::normal);
        return std::move(line_);
    }

private:
    void scan(std::string_view text, RunStyle style) {
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c == '$') {
                ++i; // math toggles carry no meaning here
                continue;
            }
            if (c == '{') {
                std::size_t end = matching_brace(text, i);
                scan(text.substr(i + 1, end - i - 1), style);
                i = end + 1;
                continue;
            }
            if (c == '}') {
                ++i; // stray closing brace
                continue;
            }
            if (c == '_' || c == '^') {
                RunStyle arg_style = c == '_' ? RunStyle::subscript_ : RunStyle::superscript_;
                std::string_view arg = take_arg(text, ++i);
                scan(arg, arg_style);
                continue;
            }
            if (c == '\\') {
                i = handle_macro(text, i, style);
                continue;
            }
            append(std::string(1, c), style);
            ++i;
        }
    }

    std::size_t handle_macro(std::string_view text, std::size_t backslash, RunStyle style) {
        std::size_t i = backslash + 1;
        if (i >= text.size()) {
            return i;
        }
        if (!is_letter(text[i])) {
            // \% \{ \} etc. are literal; \, \; \: \! are spacing and dropped.
            char c = text[i];
            if (c != ',' && c != ';' && c != ':' && c != '!')
                append(std::string(1, c), style);
            return i + 1;
        }
        std::size_t name_end = i;
        while (name_end < text.size() && is_letter(text[name_end]))
            ++name_end;
        std::string name(text.substr(i, name_end - i));
        if (name == "ket") {
            std::size_t next = name_end;
            std::string_view arg = take_arg(text, next);
            append("|", style);
            scan(arg, style);
            append("⟩", style);
            return next;
        }
        if (name == "bra") {
            std::size_t next = name_end;
            std::string_view arg = take_arg(text, next);
            append("⟨", style);
            scan(arg, style);
            append("|", style);
            return next;
        }
        if (name == "mathcal") {
            std::size_t next = name_end;
            std::string_view arg = take_arg(text, next);
            scan(arg, RunStyle::script);
            return next;
        }
        if (name == "symbol" || name == "numexpr") {
            if (sink_)
                sink_->warn("TeX arithmetic macro '\\" + name + "' is not evaluated");
        }
        // Unknown macro: passes through without the backslash.
        append(name, style);
        return name_end;
    }

    // Argument after _^ or a macro: a braced group, a nested macro, or one char.
    static std::string_view take_arg(std::string_view text, std::size_t& i) {
        while (i < text.size() && text[i] == ' ')
            ++i;
        if (i >= text.size())
            return {};
        if (text[i] == '{') {
            std::size_t end = matching_brace(text, i);
            std::string_view arg = text.substr(i + 1, end - i - 1);
            i = end + 1;
            return arg;
        }
        if (text[i] == '\\') {
            std::size_t end = i + 1;
            if (end < text.size() && is_letter(text[end])) {
                while (end < text.size() && is_letter(text[end]))
                    ++end;
            } else if (end < text.size()) {
                ++end;
            }
            std::string_view arg = text.substr(i, end - i);
            i = end;
            return arg;
        }
        std::string_view arg = text.substr(i, 1);
        i += 1;
        return arg;
    }

    static std::size_t matching_brace(std::string_view text, std::size_t open) {
        int depth = 0;
        for (std::size_t i = open; i < text.size(); ++i) {
            if (text[i] == '\\') {
                ++i;
                continue;
            }
            if (text[i] == '{')
                ++depth;
            else if (text[i] == '}') {
                --depth;
                if (depth == 0)
                    return i;
            }
        }
        return text.size() ? text.size() - 1 : 0;
    }

    static bool is_letter(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }

    void append(const std::string& s, RunStyle style) {
        if (s.empty())
            return;
        if (!line_.runs.empty() && line_.runs.back().style == style) {
            line_.runs.back().text += s;
            return;
        }
        line_.runs.push_back({s, style});
    }

    DiagnosticSink* sink_;
    TextLine line_;
};

} // namespace detail

/// Renders gate/label value text: strips math dollars and braces, substitutes
/// \ket, \bra and \mathcal, turns _{...}/^{...} into sub/superscript runs,
/// splits on \\; unknown macros pass through without their backslash.
inline RenderedText render_value_text(const ValueText& value, DiagnosticSink* sink = nullptr) {
    RenderedText out;
    detail::ValueRenderer renderer(sink);
    for (const std::string& line : value.lines)
        out.lines.push_back(renderer.render_line(line));
    return out;
}

inline RenderedText render_value_text(const std::string& raw, DiagnosticSink* sink = nullptr) {
    return render_value_text(ValueText::from_raw(raw), sink);
}

} // namespace yqc
