#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "yqc/ast.hpp"
#include "yqc/attributes.hpp"
#include "yqc/diagnostics.hpp"

namespace yqc {

namespace detail {

inline RegRefExpr scalar_ref(const std::string& name, SourceSpan span) {
    RegRefExpr expr;
    RefItem item;
    item.start_name = name;
    item.span = span;
    expr.items.push_back(std::move(item));
    expr.span = span;
    return expr;
}

class QasmParser {
public:
    explicit QasmParser(std::string_view source) : source_(source) {}

    Program run() {
        std::size_t pos = 0;
        int line_no = 1;
        while (pos <= source_.size()) {
            std::size_t eol = source_.find('\n', pos);
            std::size_t len = (eol == std::string_view::npos ? source_.size() : eol) - pos;
            parse_line(source_.substr(pos, len), pos, line_no);
            if (eol == std::string_view::npos)
                break;
            pos = eol + 1;
            ++line_no;
        }
        return std::move(program_);
    }

private:
    void parse_line(std::string_view raw, std::size_t offset, int line_no) {
        SourceSpan span{offset, offset + raw.size(), line_no, 1};
        std::string text(raw);
        std::size_t hash = text.find('#');
        if (hash != std::string::npos)
            text.resize(hash);
        text = trim(text);
        if (text.empty())
            return;

        std::size_t cut = text.find_first_of(" \t");
        std::string opcode = to_lower_ascii(text.substr(0, cut));
        std::vector<std::string> args;
        if (cut != std::string::npos) {
            for (const std::string& part : split_args(text.substr(cut + 1)))
                args.push_back(part);
        }
        dispatch(opcode, args, span);
    }

    static std::string to_lower_ascii(std::string s) {
        for (char& c : s)
            if (c >= 'A' && c <= 'Z')
                c = static_cast<char>(c - 'A' + 'a');
        return s;
    }

    static std::vector<std::string> split_args(const std::string& rest) {
        std::vector<std::string> args;
        std::string cur;
        for (char c : rest) {
            if (c == ',') {
                args.push_back(trim(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        std::string last = trim(cur);
        if (!last.empty() || !args.empty())
            args.push_back(last);
        return args;
    }

    void dispatch(const std::string& opcode, const std::vector<std::string>& args,
                  SourceSpan span) {
        auto require = [&](std::size_t n) {
            if (args.size() != n)
                fail("qasm opcode '" + opcode + "' expects " + std::to_string(n) +
                         " register(s), got " + std::to_string(args.size()),
                     span);
            for (const std::string& a : args)
                if (a.empty())
                    fail("empty register name in qasm line", span);
        };
        if (opcode == "qubit" || opcode == "cbit") {
            require(1);
            declare(args[0], opcode == "qubit" ? "qubit" : "cbit", span, /*explicit_decl=*/true);
            return;
        }
        if (opcode == "h" || opcode == "x" || opcode == "y" || opcode == "z") {
            require(1);
            push_gate(opcode, {}, args[0], {}, span);
            return;
        }
        if (opcode == "s" || opcode == "t") {
            // No native glyph; drawn as a box with the letter.
            require(1);
            push_gate("box", std::string("$") + static_cast<char>(opcode[0] - 'a' + 'A') + "$",
                      args[0], {}, span);
            return;
        }
        if (opcode == "cnot") {
            require(2);
            push_gate("not", {}, args[1], args[0], span);
            return;
        }
        if (opcode == "c-x") {
            require(2);
            push_gate("x", {}, args[1], args[0], span);
            return;
        }
        if (opcode == "c-z") {
            require(2);
            push_gate("z", {}, args[1], args[0], span);
            return;
        }
        if (opcode == "measure") {
            require(1);
            push_gate("measure", {}, args[0], {}, span);
            return;
        }
        if (opcode == "nop") {
            require(1);
            push_gate("nop", {}, args[0], {}, span);
            return;
        }
        fail("unsupported qasm opcode '" + opcode + "'", span);
    }

    void declare(const std::string& name, const std::string& type, SourceSpan span,
                 bool explicit_decl) {
        if (declared_.count(name)) {
            if (explicit_decl)
                fail("duplicate declaration of register '" + name + "'", span);
            return;
        }
        declared_.insert(name);
        Statement stmt;
        stmt.kind = StatementKind::declaration;
        stmt.name = type;
        stmt.decl_name = name;
        stmt.value = ValueText::from_raw("$\\ket{" + name + "}$");
        stmt.span = span;
        program_.statements.push_back(std::move(stmt));
    }

    void push_gate(const std::string& name, std::optional<std::string> value,
                   const std::string& target, std::optional<std::string> control,
                   SourceSpan span) {
        // Registers spring into being on first mention, in order of use.
        if (control)
            declare(*control, "qubit", span, false);
        declare(target, "qubit", span, false);
        Statement stmt;
        stmt.kind = StatementKind::gate;
        stmt.name = name;
        if (value)
            stmt.value = ValueText::from_raw(*value);
        stmt.targets.push_back(scalar_ref(target, span));
        if (control)
            stmt.controls.push_back(scalar_ref(*control, span));
        stmt.span = span;
        program_.statements.push_back(std::move(stmt));
    }

    std::string_view source_;
    Program program_;
    std::set<std::string> declared_;
};

} // namespace detail

/// Parses the line-oriented qasm dialect: one opcode per line, comma-separated
/// registers, '#' comments. Unknown registers are declared on first mention.
inline Program parse_qasm(std::string_view source) {
    return detail::QasmParser(source).run();
}

} // namespace yqc
