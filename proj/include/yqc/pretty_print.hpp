#pragma once

#include <sstream>
#include <string>

#include "yqc/ast.hpp"

namespace yqc {

namespace detail {

inline bool value_needs_braces(const std::string& v) {
    if (v.empty())
        return true;
    if (v.front() == ' ' || v.back() == ' ')
        return true;
    return v.find_first_of(",]{}\"=") != std::string::npos;
}

inline void print_attr(std::ostream& os, const Attribute& attr) {
    switch (attr.form) {
    case AttributeForm::quoted_label: os << '"' << attr.value << '"'; break;
    case AttributeForm::flag: os << attr.key; break;
    case AttributeForm::key_value:
        os << attr.key << '=';
        if (value_needs_braces(attr.value))
            os << '{' << attr.value << '}';
        else
            os << attr.value;
        break;
    }
}

inline void print_index_entry(std::ostream& os, const IndexEntry& e) {
    if (!e.is_range) {
        os << *e.lo;
        return;
    }
    if (e.lo)
        os << *e.lo;
    os << '-';
    if (e.hi)
        os << *e.hi;
}

inline void print_index_spec(std::ostream& os, const IndexSpec& spec) {
    os << '[';
    if (spec.joint_inner)
        os << '(';
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        if (i)
            os << ", ";
        print_index_entry(os, spec.entries[i]);
    }
    if (spec.joint_inner)
        os << ')';
    os << ']';
}

inline void print_ref_item(std::ostream& os, const RefItem& item) {
    if (item.start_name) {
        os << *item.start_name;
        if (item.start_index)
            print_index_spec(os, *item.start_index);
    }
    if (item.is_range_to) {
        os << '-';
        if (item.end_name) {
            os << *item.end_name;
            if (item.end_index)
                print_index_spec(os, *item.end_index);
        }
    }
}

inline void print_ref_expr(std::ostream& os, const RegRefExpr& expr) {
    if (expr.joint_outer)
        os << '(';
    for (std::size_t i = 0; i < expr.items.size(); ++i) {
        if (i)
            os << ", ";
        print_ref_item(os, expr.items[i]);
    }
    if (expr.joint_outer)
        os << ')';
}

inline void print_ref_list(std::ostream& os, const std::vector<RegRefExpr>& refs) {
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (i)
            os << ", ";
        print_ref_expr(os, refs[i]);
    }
}

inline void print_program(std::ostream& os, const Program& p, int indent);

inline void print_statement(std::ostream& os, const Statement& stmt, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (!stmt.attrs.empty()) {
        os << pad << '[';
        for (std::size_t i = 0; i < stmt.attrs.size(); ++i) {
            if (i)
                os << ", ";
            print_attr(os, stmt.attrs[i]);
        }
        os << "]\n";
    }
    os << pad << stmt.name;
    if (stmt.kind == StatementKind::declaration) {
        if (stmt.value)
            os << " {" << stmt.value->raw << '}';
        os << ' ' << stmt.decl_name;
        if (stmt.decl_length)
            os << '[' << *stmt.decl_length << ']';
        os << ";\n";
        return;
    }
    if (stmt.sub_program) {
        os << " {\n";
        print_program(os, *stmt.sub_program, indent + 1);
        os << pad << '}';
    } else if (stmt.value) {
        os << " {" << stmt.value->raw << '}';
    }
    os << ' ';
    print_ref_list(os, stmt.targets);
    if (!stmt.controls.empty()) {
        os << " | ";
        print_ref_list(os, stmt.controls);
    }
    if (!stmt.neg_controls.empty()) {
        os << " ~ ";
        print_ref_list(os, stmt.neg_controls);
    }
    os << ";\n";
}

inline void print_program(std::ostream& os, const Program& p, int indent) {
    for (const Statement& stmt : p.statements)
        print_statement(os, stmt, indent);
}

} // namespace detail

/// Canonical one-statement-per-line text that reparses to the same structure.
inline std::string pretty_print(const Program& program) {
    std::ostringstream os;
    detail::print_program(os, program, 0);
    return os.str();
}

} // namespace yqc
