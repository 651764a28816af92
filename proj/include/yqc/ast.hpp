#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "yqc/diagnostics.hpp"

namespace yqc {

/// Brace-delimited gate value. `raw` is the blob content with the outer braces
/// stripped; `lines` is `raw` split on the two-character sequence `\\`.
struct ValueText {
    std::string raw;
    std::vector<std::string> lines;

    static ValueText from_raw(std::string raw_text) {
        ValueText v;
        v.raw = std::move(raw_text);
        std::size_t pos = 0;
        while (true) {
            std::size_t cut = v.raw.find("\\\\", pos);
            if (cut == std::string::npos) {
                v.lines.push_back(v.raw.substr(pos));
                break;
            }
            v.lines.push_back(v.raw.substr(pos, cut - pos));
            pos = cut + 2;
        }
        return v;
    }
};

enum class AttributeForm { key_value, flag, quoted_label };

/// One entry of a `[...]` attribute block.
struct Attribute {
    AttributeForm form = AttributeForm::flag;
    std::string key;   // flag name or key of key=value; empty for quoted labels
    std::string value; // value of key=value or the unquoted label text
    SourceSpan span;
};

/// One entry inside index brackets: a single index or an (half-)open index range.
struct IndexEntry {
    std::optional<int> lo;
    std::optional<int> hi;
    bool is_range = false; // false: single index, hi unused
};

struct IndexSpec {
    std::vector<IndexEntry> entries;
    bool joint_inner = false; // parentheses inside the brackets: a[(0, 1)]
};

/// One comma-separated element of a register reference: a plain register
/// (optionally indexed) or a range between two endpoints. Open endpoints
/// (`-a[2]`, `a[5]-`, bare `-`) leave the corresponding name absent.
struct RefItem {
    std::optional<std::string> start_name;
    std::optional<IndexSpec> start_index;
    bool is_range_to = false;
    std::optional<std::string> end_name;
    std::optional<IndexSpec> end_index;
    SourceSpan span;
};

struct RegRefExpr {
    std::vector<RefItem> items;
    bool joint_outer = false; // whole expression parenthesized
    SourceSpan span;
};

struct Program;

enum class StatementKind { declaration, gate };

struct Statement {
    StatementKind kind = StatementKind::gate;
    std::vector<Attribute> attrs;
    std::string name; // command/gate name, stored lowercase
    std::optional<ValueText> value;
    std::vector<RegRefExpr> targets;
    std::vector<RegRefExpr> controls;
    std::vector<RegRefExpr> neg_controls;
    std::shared_ptr<Program> sub_program; // set iff name == "subcircuit"
    // Declaration statements only:
    std::string decl_name;
    std::optional<int> decl_length;
    SourceSpan span;
};

struct Program {
    std::vector<Statement> statements;
};

// -- Structural equality (ignores source spans) ------------------------------

inline bool same_structure(const Program& a, const Program& b);

inline bool same_structure(const IndexSpec& a, const IndexSpec& b) {
    if (a.joint_inner != b.joint_inner || a.entries.size() != b.entries.size())
        return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const IndexEntry &x = a.entries[i], &y = b.entries[i];
        if (x.lo != y.lo || x.hi != y.hi || x.is_range != y.is_range)
            return false;
    }
    return true;
}

inline bool same_structure(const std::optional<IndexSpec>& a, const std::optional<IndexSpec>& b) {
    if (a.has_value() != b.has_value())
        return false;
    return !a || same_structure(*a, *b);
}

inline bool same_structure(const RefItem& a, const RefItem& b) {
    return a.start_name == b.start_name && same_structure(a.start_index, b.start_index) &&
           a.is_range_to == b.is_range_to && a.end_name == b.end_name &&
           same_structure(a.end_index, b.end_index);
}

inline bool same_structure(const RegRefExpr& a, const RegRefExpr& b) {
    if (a.joint_outer != b.joint_outer || a.items.size() != b.items.size())
        return false;
    for (std::size_t i = 0; i < a.items.size(); ++i)
        if (!same_structure(a.items[i], b.items[i]))
            return false;
    return true;
}

inline bool same_structure(const std::vector<RegRefExpr>& a, const std::vector<RegRefExpr>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_structure(a[i], b[i]))
            return false;
    return true;
}

inline bool same_structure(const Statement& a, const Statement& b) {
    if (a.kind != b.kind || a.name != b.name)
        return false;
    if (a.attrs.size() != b.attrs.size())
        return false;
    for (std::size_t i = 0; i < a.attrs.size(); ++i) {
        const Attribute &x = a.attrs[i], &y = b.attrs[i];
        if (x.form != y.form || x.key != y.key || x.value != y.value)
            return false;
    }
    if (a.value.has_value() != b.value.has_value())
        return false;
    // Subcircuit bodies are compared via the parsed program; their raw text
    // is a print artifact.
    if (a.value && !a.sub_program && a.value->raw != b.value->raw)
        return false;
    if (!same_structure(a.targets, b.targets) || !same_structure(a.controls, b.controls) ||
        !same_structure(a.neg_controls, b.neg_controls))
        return false;
    if ((a.sub_program != nullptr) != (b.sub_program != nullptr))
        return false;
    if (a.sub_program && !same_structure(*a.sub_program, *b.sub_program))
        return false;
    return a.decl_name == b.decl_name && a.decl_length == b.decl_length;
}

inline bool same_structure(const Program& a, const Program& b) {
    if (a.statements.size() != b.statements.size())
        return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
        if (!same_structure(a.statements[i], b.statements[i]))
            return false;
    return true;
}

} // namespace yqc
