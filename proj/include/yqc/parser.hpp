#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "yqc/ast.hpp"
#include "yqc/attributes.hpp"
#include "yqc/lexer.hpp"

namespace yqc {

namespace detail {

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline bool is_declaration_name(std::string_view name) {
    return name == "qubit" || name == "cbit" || name == "qubits" || name == "nobit";
}

class Parser {
public:
    Parser(std::string_view source, std::size_t base_offset, int base_line, int base_column)
        : source_(source), base_offset_(base_offset) {
        tokens_ = tokenize(source, base_offset, base_line, base_column);
    }

    Program parse() {
        Program program;
        while (!check(TokenKind::end))
            program.statements.push_back(parse_statement());
        return program;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool check(TokenKind kind) const { return peek().kind == kind; }
    const Token& advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    const Token& expect(TokenKind kind, const char* what) {
        if (!check(kind))
            fail(std::string("expected ") + what, peek().span);
        return advance();
    }

    Statement parse_statement() {
        Statement stmt;
        SourceSpan start_span = peek().span;
        while (check(TokenKind::attr_block)) {
            const Token& block = advance();
            auto attrs = parse_attributes(block.text, block.span);
            stmt.attrs.insert(stmt.attrs.end(), attrs.begin(), attrs.end());
        }
        if (!check(TokenKind::ident))
            fail("expected a command name", peek().span);
        const Token& name_tok = advance();
        stmt.name = to_lower(name_tok.text);

        if (is_declaration_name(stmt.name))
            parse_declaration_tail(stmt);
        else
            parse_gate_tail(stmt, name_tok);

        const Token& semi = expect(TokenKind::semicolon, "';' at end of command");
        stmt.span = join_spans(start_span, semi.span);
        return stmt;
    }

    void parse_declaration_tail(Statement& stmt) {
        stmt.kind = StatementKind::declaration;
        if (check(TokenKind::blob))
            stmt.value = ValueText::from_raw(advance().text);
        const Token& reg = expect(TokenKind::ident, "register name");
        stmt.decl_name = reg.text;
        if (check(TokenKind::lbrack)) {
            advance();
            const Token& len = expect(TokenKind::integer, "register length");
            stmt.decl_length = static_cast<int>(len.value);
            expect(TokenKind::rbrack, "']'");
        }
    }

    void parse_gate_tail(Statement& stmt, const Token& name_tok) {
        stmt.kind = StatementKind::gate;
        if (check(TokenKind::blob)) {
            const Token& blob = advance();
            stmt.value = ValueText::from_raw(blob.text);
            if (stmt.name == "subcircuit")
                stmt.sub_program = std::make_shared<Program>(parse_nested(blob));
        } else if (stmt.name == "subcircuit") {
            fail("subcircuit requires a braced body", name_tok.span);
        }
        if (check(TokenKind::semicolon))
            fail("gate '" + stmt.name + "' requires at least one target", name_tok.span);
        stmt.targets = parse_ref_list();
        if (check(TokenKind::pipe)) {
            advance();
            stmt.controls = parse_ref_list();
        }
        if (check(TokenKind::tilde)) {
            advance();
            stmt.neg_controls = parse_ref_list();
        }
        if (check(TokenKind::pipe))
            fail("control section must come before negative controls", peek().span);
    }

    // Re-lexes the blob from the original source slice so nested statements
    // carry spans into the enclosing file.
    Program parse_nested(const Token& blob) {
        std::size_t inner_begin = blob.span.byte_start - base_offset_ + 1;
        std::size_t inner_len = (blob.span.byte_end - blob.span.byte_start) - 2;
        std::string_view body = source_.substr(inner_begin, inner_len);
        Parser nested(body, blob.span.byte_start + 1, blob.span.line, blob.span.column + 1);
        return nested.parse();
    }

    std::vector<RegRefExpr> parse_ref_list() {
        std::vector<RegRefExpr> refs;
        refs.push_back(parse_ref_expr());
        while (check(TokenKind::comma)) {
            advance();
            refs.push_back(parse_ref_expr());
        }
        return refs;
    }

    RegRefExpr parse_ref_expr() {
        RegRefExpr expr;
        SourceSpan start = peek().span;
        if (check(TokenKind::lparen)) {
            advance();
            expr.joint_outer = true;
            expr.items.push_back(parse_ref_item());
            while (check(TokenKind::comma)) {
                advance();
                expr.items.push_back(parse_ref_item());
            }
            const Token& close = expect(TokenKind::rparen, "')'");
            expr.span = join_spans(start, close.span);
            return expr;
        }
        expr.items.push_back(parse_ref_item());
        expr.span = join_spans(start, expr.items.back().span);
        return expr;
    }

    RefItem parse_ref_item() {
        RefItem item;
        SourceSpan start = peek().span;
        if (check(TokenKind::dash)) {
            advance();
            item.is_range_to = true;
            if (check(TokenKind::ident))
                parse_endpoint(item.end_name, item.end_index);
        } else {
            parse_endpoint(item.start_name, item.start_index);
            if (check(TokenKind::dash)) {
                advance();
                item.is_range_to = true;
                if (check(TokenKind::ident))
                    parse_endpoint(item.end_name, item.end_index);
            }
        }
        item.span = join_spans(start, tokens_[pos_ > 0 ? pos_ - 1 : 0].span);
        return item;
    }

    void parse_endpoint(std::optional<std::string>& name, std::optional<IndexSpec>& index) {
        const Token& tok = expect(TokenKind::ident, "register name");
        name = tok.text;
        if (check(TokenKind::lbrack))
            index = parse_index_spec();
    }

    IndexSpec parse_index_spec() {
        IndexSpec spec;
        expect(TokenKind::lbrack, "'['");
        if (check(TokenKind::lparen)) {
            advance();
            spec.joint_inner = true;
            parse_index_entries(spec);
            expect(TokenKind::rparen, "')'");
        } else {
            parse_index_entries(spec);
        }
        expect(TokenKind::rbrack, "']'");
        return spec;
    }

    void parse_index_entries(IndexSpec& spec) {
        spec.entries.push_back(parse_index_entry());
        while (check(TokenKind::comma)) {
            advance();
            spec.entries.push_back(parse_index_entry());
        }
    }

    IndexEntry parse_index_entry() {
        IndexEntry entry;
        if (check(TokenKind::dash)) {
            advance();
            entry.is_range = true;
            if (check(TokenKind::integer))
                entry.hi = static_cast<int>(advance().value);
            return entry;
        }
        const Token& lo = expect(TokenKind::integer, "index");
        entry.lo = static_cast<int>(lo.value);
        if (check(TokenKind::dash)) {
            advance();
            entry.is_range = true;
            if (check(TokenKind::integer))
                entry.hi = static_cast<int>(advance().value);
        }
        if (entry.is_range && entry.lo && entry.hi && *entry.lo > *entry.hi)
            fail("index range lower bound exceeds upper bound", peek().span);
        return entry;
    }

    std::string_view source_;
    std::size_t base_offset_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Program parse_program(std::string_view source) {
    return detail::Parser(source, 0, 1, 1).parse();
}

/// Parses text that sits at a known position inside a larger file, so spans
/// and diagnostics point into the enclosing document.
inline Program parse_program_at(std::string_view source, std::size_t byte_offset, int line) {
    return detail::Parser(source, byte_offset, line, 1).parse();
}

/// Parses a subcircuit body (or any statement list) held in a ValueText.
inline Program parse_subcircuit_value(const ValueText& value) {
    return parse_program(value.raw);
}

} // namespace yqc
