#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "yqc/diagnostics.hpp"

namespace yqc {

enum class TokenKind {
    ident,
    integer,
    lbrack,
    rbrack,
    lparen,
    rparen,
    comma,
    semicolon,
    pipe,
    tilde,
    dash,
    equals,
    blob,       // brace-balanced value, text excludes the outer braces
    string_lit, // "quoted", text is the unquoted content
    attr_block, // [ ... ] at statement start, text excludes the brackets
    end
};

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    long value = 0; // for integer tokens
    SourceSpan span;
};

namespace detail {

inline bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}

class Lexer {
public:
    Lexer(std::string_view source, std::size_t base_offset, int base_line, int base_column)
        : src_(source), pos_(0), line_(base_line), column_(base_column), base_(base_offset) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        bool stmt_start = true;
        while (true) {
            skip_blanks();
            if (at_end()) {
                out.push_back(make(TokenKind::end, pos_, pos_, line_, column_));
                return out;
            }
            std::size_t start = pos_;
            int line = line_, col = column_;
            char c = peek();
            if (stmt_start && c == '[') {
                out.push_back(lex_attr_block());
                continue; // several attribute blocks may precede a command
            }
            stmt_start = false;
            if (ident_start(c)) {
                while (!at_end() && ident_char(peek()))
                    advance();
                Token t = make(TokenKind::ident, start, pos_, line, col);
                t.text = std::string(src_.substr(start, pos_ - start));
                out.push_back(t);
                continue;
            }
            if (c >= '0' && c <= '9') {
                while (!at_end() && peek() >= '0' && peek() <= '9')
                    advance();
                Token t = make(TokenKind::integer, start, pos_, line, col);
                t.text = std::string(src_.substr(start, pos_ - start));
                t.value = std::stol(t.text);
                out.push_back(t);
                continue;
            }
            switch (c) {
            case '{':
                out.push_back(lex_blob());
                continue;
            case '"':
                out.push_back(lex_string());
                continue;
            case '[': out.push_back(punct(TokenKind::lbrack)); continue;
            case ']': out.push_back(punct(TokenKind::rbrack)); continue;
            case '(': out.push_back(punct(TokenKind::lparen)); continue;
            case ')': out.push_back(punct(TokenKind::rparen)); continue;
            case ',': out.push_back(punct(TokenKind::comma)); continue;
            case ';':
                out.push_back(punct(TokenKind::semicolon));
                stmt_start = true;
                continue;
            case '|': out.push_back(punct(TokenKind::pipe)); continue;
            case '~': out.push_back(punct(TokenKind::tilde)); continue;
            case '-': out.push_back(punct(TokenKind::dash)); continue;
            case '=': out.push_back(punct(TokenKind::equals)); continue;
            default:
                fail("illegal character '" + std::string(1, c) + "'", here(1));
            }
        }
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    SourceSpan here(std::size_t len) const {
        return {base_ + pos_, base_ + pos_ + len, line_, column_};
    }

    Token make(TokenKind kind, std::size_t start, std::size_t end, int line, int col) const {
        Token t;
        t.kind = kind;
        t.span = {base_ + start, base_ + end, line, col};
        return t;
    }

    Token punct(TokenKind kind) {
        std::size_t start = pos_;
        int line = line_, col = column_;
        advance();
        return make(kind, start, pos_, line, col);
    }

    // % comments run to end of line, TeX style. They apply outside quoted
    // strings, including inside value blobs and attribute blocks.
    void skip_blanks() {
        while (!at_end()) {
            char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n')
                    advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                return;
            }
        }
    }

    // Scans from an opening brace to its balanced closing brace. A backslash
    // escapes the next character, so \{ \} \% stay literal.
    Token lex_blob() {
        std::size_t start = pos_;
        int line = line_, col = column_;
        advance(); // '{'
        std::string text;
        int depth = 1;
        while (!at_end()) {
            char c = peek();
            if (c == '\\') {
                text.push_back(c);
                advance();
                if (!at_end()) {
                    text.push_back(peek());
                    advance();
                }
                continue;
            }
            if (c == '%') {
                while (!at_end() && peek() != '\n')
                    advance();
                continue;
            }
            if (c == '{')
                ++depth;
            if (c == '}') {
                --depth;
                if (depth == 0) {
                    advance();
                    Token t = make(TokenKind::blob, start, pos_, line, col);
                    t.text = std::move(text);
                    return t;
                }
            }
            text.push_back(c);
            advance();
        }
        fail("unterminated '{' value", {base_ + start, base_ + start + 1, line, col});
    }

    Token lex_string() {
        std::size_t start = pos_;
        int line = line_, col = column_;
        advance(); // '"'
        std::string text;
        while (!at_end() && peek() != '"' && peek() != '\n') {
            text.push_back(peek());
            advance();
        }
        if (at_end() || peek() != '"')
            fail("unterminated string", {base_ + start, base_ + start + 1, line, col});
        advance();
        Token t = make(TokenKind::string_lit, start, pos_, line, col);
        t.text = std::move(text);
        return t;
    }

    // Raw capture of a statement-leading [ ... ] group; nested braces and
    // quoted strings are skipped opaquely.
    Token lex_attr_block() {
        std::size_t start = pos_;
        int line = line_, col = column_;
        advance(); // '['
        std::string text;
        int depth = 1;
        while (!at_end()) {
            char c = peek();
            if (c == '\\') {
                text.push_back(c);
                advance();
                if (!at_end()) {
                    text.push_back(peek());
                    advance();
                }
                continue;
            }
            if (c == '%') {
                while (!at_end() && peek() != '\n')
                    advance();
                continue;
            }
            if (c == '"') {
                text.push_back(c);
                advance();
                while (!at_end() && peek() != '"' && peek() != '\n') {
                    text.push_back(peek());
                    advance();
                }
                if (at_end() || peek() != '"')
                    fail("unterminated string in attributes", {base_ + start, base_ + start + 1, line, col});
                text.push_back('"');
                advance();
                continue;
            }
            if (c == '{') {
                ++depth;
            } else if (c == '}') {
                --depth; // brace groups inside attribute values
            } else if (c == '[') {
                ++depth;
            } else if (c == ']') {
                --depth;
                if (depth == 0) {
                    advance();
                    Token t = make(TokenKind::attr_block, start, pos_, line, col);
                    t.text = std::move(text);
                    return t;
                }
            }
            text.push_back(c);
            advance();
        }
        fail("unterminated '[' attribute block", {base_ + start, base_ + start + 1, line, col});
    }

    std::string_view src_;
    std::size_t pos_;
    int line_;
    int column_;
    std::size_t base_;
};

} // namespace detail

/// Tokenizes yquant source text. `base_*` locate the text inside an enclosing
/// file when lexing nested subcircuit bodies.
inline std::vector<Token> tokenize(std::string_view source, std::size_t base_offset = 0,
                                   int base_line = 1, int base_column = 1) {
    return detail::Lexer(source, base_offset, base_line, base_column).run();
}

} // namespace yqc
