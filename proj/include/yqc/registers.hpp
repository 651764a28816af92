#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yqc/ast.hpp"
#include "yqc/diagnostics.hpp"

namespace yqc {

enum class RegisterType { qubit, cbit, qubits, nobit };

inline const char* register_type_name(RegisterType t) {
    switch (t) {
    case RegisterType::qubit: return "qubit";
    case RegisterType::cbit: return "cbit";
    case RegisterType::qubits: return "qubits";
    case RegisterType::nobit: return "nobit";
    }
    return "?";
}

inline std::optional<RegisterType> register_type_from_name(std::string_view name) {
    if (name == "qubit")
        return RegisterType::qubit;
    if (name == "cbit")
        return RegisterType::cbit;
    if (name == "qubits")
        return RegisterType::qubits;
    if (name == "nobit")
        return RegisterType::nobit;
    return std::nullopt;
}

using WireIndex = int;

struct Register {
    std::string name;
    RegisterType type = RegisterType::qubit;
    int length = 1;
    std::optional<std::string> label_template;
    WireIndex first_wire = 0;
};

/// Wires addressed together. A joint group renders as one multi-wire gate;
/// joint groups are only legal as targets.
struct WireGroup {
    std::vector<WireIndex> wires;
    bool joint = false;
};

enum class RefRole { target, control, neg_control };

inline const char* ref_role_name(RefRole r) {
    switch (r) {
    case RefRole::target: return "target";
    case RefRole::control: return "control";
    case RefRole::neg_control: return "negative control";
    }
    return "?";
}

class RegisterTable {
public:
    explicit RegisterTable(bool auto_declare = false) : auto_declare_(auto_declare) {}

    bool auto_declare() const { return auto_declare_; }
    const std::vector<Register>& registers() const { return registers_; }
    int wire_count() const { return wire_count_; }

    const Register* find(const std::string& name) const {
        auto it = by_name_.find(name);
        return it == by_name_.end() ? nullptr : &registers_[it->second];
    }

    const Register& declare(const std::string& name, RegisterType type, int length,
                            std::optional<std::string> label, SourceSpan span = {}) {
        if (by_name_.count(name))
            fail("register '" + name + "' is already declared", span);
        if (length < 1)
            fail("register '" + name + "' declared with length " + std::to_string(length), span);
        Register reg;
        reg.name = name;
        reg.type = type;
        reg.length = length;
        reg.label_template = std::move(label);
        reg.first_wire = wire_count_;
        by_name_[name] = registers_.size();
        registers_.push_back(std::move(reg));
        wire_count_ += length;
        return registers_.back();
    }

    /// In starred mode, unknown names become scalar qubit registers with an
    /// empty label. No-op for known names.
    const Register& auto_declare_if_needed(const std::string& name, SourceSpan span = {}) {
        if (const Register* reg = find(name))
            return *reg;
        if (!auto_declare_)
            fail("unknown register '" + name + "'", span);
        return declare(name, RegisterType::qubit, 1, std::string(), span);
    }

    /// Register and element index owning a global wire.
    std::pair<const Register*, int> locate(WireIndex wire) const {
        for (const Register& reg : registers_)
            if (wire >= reg.first_wire && wire < reg.first_wire + reg.length)
                return {&reg, wire - reg.first_wire};
        return {nullptr, 0};
    }

    std::vector<WireGroup> resolve(const RegRefExpr& expr, RefRole role) {
        if (expr.joint_outer && role != RefRole::target)
            fail("multi-qubit groups can only be used as targets, not as a " +
                     std::string(ref_role_name(role)),
                 expr.span);
        std::vector<WireGroup> groups;
        for (const RefItem& item : expr.items) {
            std::vector<WireGroup> part = resolve_item(item);
            groups.insert(groups.end(), part.begin(), part.end());
        }
        if (expr.joint_outer) {
            WireGroup merged;
            merged.joint = true;
            for (const WireGroup& g : groups)
                merged.wires.insert(merged.wires.end(), g.wires.begin(), g.wires.end());
            groups.clear();
            groups.push_back(std::move(merged));
        }
        if (role != RefRole::target)
            for (const WireGroup& g : groups)
                if (g.joint)
                    fail("multi-qubit groups can only be used as targets, not as a " +
                             std::string(ref_role_name(role)),
                         expr.span);
        if (groups.empty() || (groups.size() == 1 && groups[0].wires.empty()))
            fail("register reference resolves to no wires", expr.span);
        return groups;
    }

private:
    std::vector<WireGroup> resolve_item(const RefItem& item) {
        if (item.is_range_to) {
            // Range between full names, expanding over the global wire order.
            // An omitted start means the circuit's first wire; an omitted end
            // means its last wire at the time of use.
            if (wire_count_ == 0)
                fail("register reference resolves to no wires", item.span);
            WireIndex lo = 0;
            if (item.start_name)
                lo = endpoint_wire(*item.start_name, item.start_index, /*is_start=*/true, item.span);
            WireIndex hi = wire_count_ - 1;
            if (item.end_name)
                hi = endpoint_wire(*item.end_name, item.end_index, /*is_start=*/false, item.span);
            if (lo > hi)
                fail("range endpoints are in reverse wire order", item.span);
            return singles(lo, hi);
        }
        // Plain item: name with optional index spec; a bare name means the
        // full open index range.
        const Register& reg = lookup(*item.start_name, item.span);
        return expand_indices(reg, item.start_index ? *item.start_index : full_open_spec(),
                              item.span);
    }

    static IndexSpec full_open_spec() {
        IndexSpec spec;
        IndexEntry open;
        open.is_range = true;
        spec.entries.push_back(open);
        return spec;
    }

    std::vector<WireGroup> expand_indices(const Register& reg, const IndexSpec& spec,
                                          SourceSpan span) {
        std::vector<WireIndex> wires;
        for (const IndexEntry& e : spec.entries) {
            if (!e.is_range) {
                wires.push_back(element_wire(reg, *e.lo, span));
                continue;
            }
            int lo = e.lo.value_or(0);
            int hi = e.hi.value_or(reg.length - 1);
            if (lo > hi)
                fail("index range lower bound exceeds upper bound", span);
            for (int i = lo; i <= hi; ++i)
                wires.push_back(element_wire(reg, i, span));
        }
        std::vector<WireGroup> groups;
        if (spec.joint_inner) {
            WireGroup g;
            g.joint = true;
            g.wires = std::move(wires);
            groups.push_back(std::move(g));
        } else {
            for (WireIndex w : wires)
                groups.push_back(WireGroup{{w}, false});
        }
        return groups;
    }

    // A range endpoint is a name plus at most one plain index; a bare name
    // means that register's first (start) or last (end) element.
    WireIndex endpoint_wire(const std::string& name, const std::optional<IndexSpec>& index,
                            bool is_start, SourceSpan span) {
        const Register& reg = lookup(name, span);
        if (!index)
            return is_start ? reg.first_wire : reg.first_wire + reg.length - 1;
        if (index->entries.size() != 1 || index->entries[0].is_range || index->joint_inner)
            fail("range endpoint must use a single index", span);
        return element_wire(reg, *index->entries[0].lo, span);
    }

    WireIndex element_wire(const Register& reg, int idx, SourceSpan span) const {
        if (idx < 0 || idx >= reg.length)
            fail("index " + std::to_string(idx) + " out of range for register '" + reg.name +
                     "' of length " + std::to_string(reg.length),
                 span);
        return reg.first_wire + idx;
    }

    const Register& lookup(const std::string& name, SourceSpan span) {
        if (const Register* reg = find(name))
            return *reg;
        return auto_declare_if_needed(name, span);
    }

    static std::vector<WireGroup> singles(WireIndex lo, WireIndex hi) {
        std::vector<WireGroup> groups;
        for (WireIndex w = lo; w <= hi; ++w)
            groups.push_back(WireGroup{{w}, false});
        return groups;
    }

    bool auto_declare_ = false;
    std::vector<Register> registers_;
    std::map<std::string, std::size_t> by_name_;
    int wire_count_ = 0;
};

} // namespace yqc
