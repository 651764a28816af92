#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "yqc/ast.hpp"
#include "yqc/attributes.hpp"
#include "yqc/config.hpp"
#include "yqc/diagnostics.hpp"
#include "yqc/registers.hpp"

namespace yqc {

enum class GateGlyph {
    boxed_text, // rectangle with centered value text
    symbol,     // fixed drawing (oplus, dots, meter, ...)
    pseudo,     // layout/state effect only, nothing drawn
    init_final, // init/output labels
    subcircuit, // nested circuit in a box
};

enum class TypeEffect { none, to_classical, to_nobit, set_type, reinitialize };

enum class ValueRule { forbidden, optional, required };

struct GateKind {
    const char* name = "";
    GateGlyph glyph = GateGlyph::symbol;
    bool allows_joint = false;
    bool joint_required = false; // swap/xx/zz/correlate act on one group
    bool gaps_allowed = false;   // joint group may span nonadjacent wires
    bool allows_controls = false;
    bool joins_targets = false; // barrier/align treat all targets as one unit
    ValueRule value_rule = ValueRule::forbidden;
    TypeEffect type_effect = TypeEffect::none;
    const char* fixed_letter = ""; // implicit box text for h/x/y/z
};

namespace detail {

inline const std::vector<GateKind>& gate_catalog() {
    static const std::vector<GateKind> catalog = [] {
        std::vector<GateKind> t;
        auto add = [&t](GateKind k) { t.push_back(k); };
        // name, glyph, joint, joint_req, gaps, controls, joins, value, effect, letter
        add({"box", GateGlyph::boxed_text, true, false, true, true, false, ValueRule::required,
             TypeEffect::none, ""});
        add({"h", GateGlyph::boxed_text, false, false, false, true, false, ValueRule::forbidden,
             TypeEffect::none, "H"});
        add({"x", GateGlyph::boxed_text, false, false, false, true, false, ValueRule::forbidden,
             TypeEffect::none, "X"});
        add({"y", GateGlyph::boxed_text, false, false, false, true, false, ValueRule::forbidden,
             TypeEffect::none, "Y"});
        add({"z", GateGlyph::boxed_text, false, false, false, true, false, ValueRule::forbidden,
             TypeEffect::none, "Z"});
        add({"not", GateGlyph::symbol, false, false, false, true, false, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"phase", GateGlyph::symbol, false, false, false, true, false, ValueRule::optional,
             TypeEffect::none, ""});
        add({"swap", GateGlyph::symbol, true, true, false, true, false, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"xx", GateGlyph::symbol, true, true, false, true, false, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"zz", GateGlyph::symbol, true, true, false, true, false, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"correlate", GateGlyph::symbol, true, true, false, true, false, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"measure", GateGlyph::symbol, false, false, false, false, false, ValueRule::forbidden,
             TypeEffect::to_classical, ""});
        add({"dmeter", GateGlyph::symbol, false, false, false, false, false, ValueRule::optional,
             TypeEffect::to_classical, ""});
        add({"slash", GateGlyph::symbol, false, false, false, false, false, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"inspect", GateGlyph::boxed_text, false, false, false, false, false,
             ValueRule::required, TypeEffect::none, ""});
        add({"barrier", GateGlyph::symbol, false, false, false, false, true, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"subcircuit", GateGlyph::subcircuit, true, true, false, true, false,
             ValueRule::required, TypeEffect::none, ""});
        add({"align", GateGlyph::pseudo, false, false, false, false, true, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"hspace", GateGlyph::pseudo, false, false, false, false, false, ValueRule::required,
             TypeEffect::none, ""});
        add({"nop", GateGlyph::pseudo, false, false, false, false, false, ValueRule::forbidden,
             TypeEffect::none, ""});
        add({"discard", GateGlyph::pseudo, false, false, false, false, false, ValueRule::forbidden,
             TypeEffect::to_nobit, ""});
        add({"settype", GateGlyph::pseudo, false, false, false, false, false, ValueRule::required,
             TypeEffect::set_type, ""});
        add({"addstyle", GateGlyph::pseudo, false, false, false, false, false, ValueRule::required,
             TypeEffect::none, ""});
        add({"setstyle", GateGlyph::pseudo, false, false, false, false, false, ValueRule::required,
             TypeEffect::none, ""});
        add({"init", GateGlyph::init_final, true, false, true, false, false, ValueRule::required,
             TypeEffect::reinitialize, ""});
        add({"output", GateGlyph::init_final, true, false, true, false, false, ValueRule::required,
             TypeEffect::none, ""});
        // Register declarations; the parser handles these as statements, the
        // entries exist so every command name resolves through the catalog.
        for (const char* decl : {"qubit", "cbit", "qubits", "nobit"})
            add({decl, GateGlyph::init_final, false, false, false, false, false,
                 ValueRule::optional, TypeEffect::none, ""});
        return t;
    }();
    return catalog;
}

} // namespace detail

inline const GateKind* catalog_find(std::string_view name) {
    if (name == "cnot")
        name = "not"; // cnot is not with conventional controls
    for (const GateKind& kind : detail::gate_catalog())
        if (name == kind.name)
            return &kind;
    return nullptr;
}

inline const GateKind& catalog_lookup(std::string_view name, SourceSpan span = {}) {
    if (const GateKind* kind = catalog_find(name))
        return *kind;
    fail("unknown gate '" + std::string(name) + "'", span);
}

/// Replaces \idx and \reg tokens in a declaration label template.
inline std::string substitute_label(const std::string& templ, const std::string& reg_name,
                                    int idx) {
    auto is_letter = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    std::string out;
    std::size_t i = 0;
    while (i < templ.size()) {
        if (templ[i] == '\\') {
            auto token_is = [&](std::string_view token) {
                if (templ.compare(i + 1, token.size(), token.data(), token.size()) != 0)
                    return false;
                std::size_t after = i + 1 + token.size();
                return after >= templ.size() || !is_letter(templ[after]);
            };
            if (token_is("idx")) {
                out += std::to_string(idx);
                i += 4;
                continue;
            }
            if (token_is("reg")) {
                out += reg_name;
                i += 4;
                continue;
            }
            out.push_back(templ[i]);
            ++i;
            if (i < templ.size()) {
                out.push_back(templ[i]);
                ++i;
            }
            continue;
        }
        out.push_back(templ[i]);
        ++i;
    }
    return out;
}

/// Wire-line styling accumulated by addstyle/setstyle.
struct WireStyle {
    std::string color;         // empty: default stroke
    std::vector<double> dash;  // empty: solid
    double line_width = 0.0;   // 0: default width

    bool operator==(const WireStyle& o) const {
        return color == o.color && dash == o.dash && line_width == o.line_width;
    }
};

struct StyleDelta {
    std::optional<std::string> color;
    std::optional<std::vector<double>> dash;
    std::optional<double> line_width;
    bool replace = false; // setstyle replaces, addstyle amends
};

namespace detail {

inline bool known_color(const std::string& name) {
    static const char* names[] = {"black", "white",  "red",    "green", "blue",   "cyan",
                                  "magenta", "yellow", "orange", "gray",  "purple", "brown"};
    for (const char* n : names)
        if (name == n)
            return true;
    return false;
}

inline StyleDelta parse_style_delta(const std::string& text, bool replace, SourceSpan span,
                                    DiagnosticSink& sink) {
    StyleDelta delta;
    delta.replace = replace;
    for (const Attribute& attr : parse_attributes(text, span)) {
        if (attr.form == AttributeForm::flag) {
            if (attr.key == "dashed")
                delta.dash = std::vector<double>{1.2, 0.8};
            else if (attr.key == "dotted")
                delta.dash = std::vector<double>{0.3, 0.7};
            else if (attr.key == "solid")
                delta.dash = std::vector<double>{};
            else if (known_color(attr.key))
                delta.color = attr.key;
            else
                sink.warn("ignoring unknown style key '" + attr.key + "'", span);
            continue;
        }
        if (attr.form == AttributeForm::key_value) {
            if (attr.key == "color" && known_color(attr.value))
                delta.color = attr.value;
            else if (attr.key == "line width")
                delta.line_width = parse_length(attr.value, span);
            else
                sink.warn("ignoring unknown style key '" + attr.key + "'", span);
            continue;
        }
        sink.warn("ignoring quoted text in style list", span);
    }
    return delta;
}

inline void apply_style_delta(WireStyle& style, const StyleDelta& delta) {
    if (delta.replace)
        style = WireStyle{};
    if (delta.color)
        style.color = *delta.color;
    if (delta.dash)
        style.dash = *delta.dash;
    if (delta.line_width)
        style.line_width = *delta.line_width;
}

} // namespace detail

struct GateInstance;

/// Inner circuit of a subcircuit gate, elaborated against its own table.
struct SubcircuitElab {
    RegisterTable table{false};
    std::vector<GateInstance> instances;
    std::vector<bool> register_is_out;          // per inner register
    std::vector<std::string> wire_labels;       // per inner wire (out registers only)
    std::vector<RegisterType> initial_types;    // per inner wire
    std::vector<RegisterType> final_types;      // per inner wire, after all instances
    std::vector<bool> wire_is_out;              // per inner wire
};

struct GateInstance {
    const GateKind* kind = nullptr;
    std::optional<ValueText> value;
    std::vector<WireGroup> targets;
    std::vector<WireIndex> controls;
    std::vector<WireIndex> neg_controls;
    std::vector<Attribute> attrs;
    SourceSpan span;

    // Derived during elaboration:
    std::string element_id;                // name= attribute
    std::optional<std::string> label_above; // "quoted" attribute
    std::optional<std::string> fill_color;
    bool dashed = false;
    bool solid = false;
    bool invisible = false;
    double hspace_mm = 0.0;
    std::optional<RegisterType> settype_to;
    std::optional<StyleDelta> style_delta;
    std::shared_ptr<SubcircuitElab> sub;
    std::vector<std::pair<WireIndex, RegisterType>> type_changes;

    WireIndex wire_lo() const {
        WireIndex lo = std::numeric_limits<int>::max();
        for (const WireGroup& g : targets)
            for (WireIndex w : g.wires)
                lo = std::min(lo, w);
        for (WireIndex w : controls)
            lo = std::min(lo, w);
        for (WireIndex w : neg_controls)
            lo = std::min(lo, w);
        return lo;
    }
    WireIndex wire_hi() const {
        WireIndex hi = std::numeric_limits<int>::min();
        for (const WireGroup& g : targets)
            for (WireIndex w : g.wires)
                hi = std::max(hi, w);
        for (WireIndex w : controls)
            hi = std::max(hi, w);
        for (WireIndex w : neg_controls)
            hi = std::max(hi, w);
        return hi;
    }
    bool has_connector() const { return !controls.empty() || !neg_controls.empty(); }
};

/// Everything elaboration produces for one circuit.
struct Elaboration {
    RegisterTable table{false};
    std::vector<GateInstance> instances;
    std::vector<std::string> wire_labels;    // substituted label text per wire
    std::vector<RegisterType> declared_types; // per wire
    std::vector<RegisterType> final_types;    // per wire, after all instances
};

namespace detail {

class Elaborator {
public:
    Elaborator(const LayoutConfig& cfg, DiagnosticSink& sink, bool star, bool in_subcircuit)
        : cfg_(cfg), sink_(sink), in_subcircuit_(in_subcircuit) {
        result_.table = RegisterTable(star);
    }

    Elaboration run(const Program& program) {
        for (const Statement& stmt : program.statements)
            elaborate_statement(stmt);
        result_.final_types = current_types_;
        return std::move(result_);
    }

    const std::vector<bool>& register_out_flags() const { return register_out_flags_; }

private:
    void elaborate_statement(const Statement& stmt) {
        if (stmt.kind == StatementKind::declaration) {
            elaborate_declaration(stmt);
            return;
        }
        elaborate_gate(stmt);
    }

    void elaborate_declaration(const Statement& stmt) {
        RegisterType type = *register_type_from_name(stmt.name);
        std::optional<std::string> label;
        if (stmt.value)
            label = stmt.value->raw;
        int length = stmt.decl_length.value_or(1);
        const Register& reg =
            result_.table.declare(stmt.decl_name, type, length, label, stmt.span);
        bool is_out = false;
        for (const Attribute& attr : stmt.attrs) {
            if (attr.form == AttributeForm::flag && attr.key == "out") {
                if (!in_subcircuit_)
                    sink_.warn("'out' has no effect outside a subcircuit", stmt.span);
                is_out = true;
            } else {
                sink_.warn("ignoring attribute on register declaration", attr.span);
            }
        }
        register_out_flags_.push_back(is_out);
        for (int i = 0; i < length; ++i) {
            result_.wire_labels.push_back(
                label ? substitute_label(*label, reg.name, i) : std::string());
            result_.declared_types.push_back(type);
            current_types_.push_back(type);
            wire_is_out_.push_back(is_out);
        }
    }

    void elaborate_gate(const Statement& stmt) {
        const GateKind& kind = catalog_lookup(stmt.name, stmt.span);

        switch (kind.value_rule) {
        case ValueRule::required:
            if (!stmt.value)
                fail("gate '" + stmt.name + "' requires a value", stmt.span);
            break;
        case ValueRule::forbidden:
            if (stmt.value && kind.glyph != GateGlyph::subcircuit)
                fail("gate '" + stmt.name + "' does not take a value", stmt.span);
            break;
        case ValueRule::optional: break;
        }

        std::vector<WireGroup> groups;
        for (const RegRefExpr& expr : stmt.targets)
            for (WireGroup& g : result_.table.resolve(expr, RefRole::target))
                groups.push_back(std::move(g));

        std::vector<WireIndex> controls = resolve_condition(stmt.controls, RefRole::control);
        std::vector<WireIndex> neg_controls =
            resolve_condition(stmt.neg_controls, RefRole::neg_control);
        sync_auto_declared();
        if (!kind.allows_controls && (!controls.empty() || !neg_controls.empty()))
            fail("gate '" + stmt.name + "' cannot be controlled", stmt.span);

        validate_groups(kind, stmt, groups);

        // Duplicates are checked across the whole statement, before any
        // expansion into independent placements.
        {
            std::set<WireIndex> seen;
            auto add = [&](WireIndex w) {
                if (!seen.insert(w).second)
                    fail("wire used twice in one command", stmt.span);
            };
            for (const WireGroup& g : groups)
                for (WireIndex w : g.wires)
                    add(w);
            for (WireIndex w : controls)
                add(w);
            for (WireIndex w : neg_controls)
                add(w);
        }

        bool conditioned = !controls.empty() || !neg_controls.empty();
        if (kind.joins_targets) {
            // barrier/align act on all their targets as one unit
            WireGroup merged;
            for (const WireGroup& g : groups)
                merged.wires.insert(merged.wires.end(), g.wires.begin(), g.wires.end());
            groups.clear();
            groups.push_back(std::move(merged));
        }

        if (conditioned || groups.size() == 1) {
            emit_instance(kind, stmt, std::move(groups), std::move(controls),
                          std::move(neg_controls));
        } else {
            // Unconditioned gates place every target group independently.
            for (WireGroup& g : groups)
                emit_instance(kind, stmt, {std::move(g)}, {}, {});
        }
    }

    // Starred-mode resolution may have created registers; catch the per-wire
    // bookkeeping up with the table.
    void sync_auto_declared() {
        while (current_types_.size() < static_cast<std::size_t>(result_.table.wire_count())) {
            auto [reg, idx] = result_.table.locate(static_cast<WireIndex>(current_types_.size()));
            result_.wire_labels.push_back(
                reg->label_template ? substitute_label(*reg->label_template, reg->name, idx)
                                    : std::string());
            result_.declared_types.push_back(reg->type);
            current_types_.push_back(reg->type);
            wire_is_out_.push_back(false);
        }
        while (register_out_flags_.size() < result_.table.registers().size())
            register_out_flags_.push_back(false);
    }

    std::vector<WireIndex> resolve_condition(const std::vector<RegRefExpr>& refs, RefRole role) {
        std::vector<WireIndex> wires;
        for (const RegRefExpr& expr : refs)
            for (const WireGroup& g : result_.table.resolve(expr, role))
                wires.insert(wires.end(), g.wires.begin(), g.wires.end());
        return wires;
    }

    void validate_groups(const GateKind& kind, const Statement& stmt,
                         const std::vector<WireGroup>& groups) {
        for (const WireGroup& g : groups) {
            if (g.joint && !kind.allows_joint)
                fail("gate '" + stmt.name + "' does not accept multi-qubit targets", stmt.span);
            if (kind.joint_required && !g.joint)
                fail("gate '" + stmt.name + "' requires a parenthesized multi-qubit target",
                     stmt.span);
            if (std::string_view(kind.name) == "swap" && g.wires.size() != 2)
                fail("swap needs exactly two wires per target", stmt.span);
            if (kind.joint_required && kind.glyph != GateGlyph::subcircuit && g.wires.size() < 2)
                fail("gate '" + stmt.name + "' needs at least two wires per target", stmt.span);
            if (g.joint && !kind.gaps_allowed && kind.glyph != GateGlyph::subcircuit) {
                std::vector<WireIndex> sorted = g.wires;
                std::sort(sorted.begin(), sorted.end());
                for (std::size_t i = 1; i < sorted.size(); ++i)
                    if (sorted[i] != sorted[i - 1] + 1)
                        fail("gate '" + stmt.name + "' requires adjacent wires", stmt.span);
            }
        }
    }

    void emit_instance(const GateKind& kind, const Statement& stmt, std::vector<WireGroup> groups,
                       std::vector<WireIndex> controls, std::vector<WireIndex> neg_controls) {
        GateInstance inst;
        inst.kind = &kind;
        inst.value = stmt.value;
        inst.targets = std::move(groups);
        inst.controls = std::move(controls);
        inst.neg_controls = std::move(neg_controls);
        inst.attrs = stmt.attrs;
        inst.span = stmt.span;
        apply_attributes(inst);
        check_wire_types(inst, stmt);
        elaborate_payload(inst, stmt);
        apply_type_effects(inst);
        result_.instances.push_back(std::move(inst));
    }

    void apply_attributes(GateInstance& inst) {
        std::vector<Attribute> attrs = inst.attrs;
        // TikZ-style "... box style={...}" values carry nested entries.
        for (std::size_t i = 0; i < attrs.size(); ++i) {
            const Attribute& attr = attrs[i];
            if (attr.form == AttributeForm::key_value && attr.key.size() >= 9 &&
                attr.key.compare(attr.key.size() - 9, 9, "box style") == 0) {
                auto nested = parse_attributes(attr.value, attr.span);
                attrs.insert(attrs.end(), nested.begin(), nested.end());
            }
        }
        for (const Attribute& attr : attrs) {
            switch (attr.form) {
            case AttributeForm::quoted_label: inst.label_above = attr.value; break;
            case AttributeForm::flag:
                if (attr.key == "dashed")
                    inst.dashed = true;
                else if (attr.key == "solid")
                    inst.solid = true;
                else if (attr.key == "invisible")
                    inst.invisible = true;
                else if (detail::known_color(attr.key))
                    inst.fill_color = attr.key;
                else
                    sink_.warn("ignoring unknown attribute '" + attr.key + "'", attr.span);
                break;
            case AttributeForm::key_value:
                if (attr.key == "name") {
                    inst.element_id = attr.value;
                } else if (attr.key == "fill") {
                    if (detail::known_color(attr.value))
                        inst.fill_color = attr.value;
                    else
                        sink_.warn("ignoring unknown fill color '" + attr.value + "'", attr.span);
                } else if (attr.key.size() >= 9 &&
                           attr.key.compare(attr.key.size() - 9, 9, "box style") == 0) {
                    // expanded above
                } else {
                    sink_.warn("ignoring unknown attribute '" + attr.key + "'", attr.span);
                }
                break;
            }
        }
    }

    void check_wire_types(const GateInstance& inst, const Statement& stmt) {
        for (WireIndex w : inst.controls)
            if (current_types_[static_cast<std::size_t>(w)] == RegisterType::nobit)
                fail("control on a discarded (nobit) wire", stmt.span);
        for (WireIndex w : inst.neg_controls)
            if (current_types_[static_cast<std::size_t>(w)] == RegisterType::nobit)
                fail("negative control on a discarded (nobit) wire", stmt.span);
        bool draws_on_wire = (inst.kind->glyph == GateGlyph::boxed_text ||
                              inst.kind->glyph == GateGlyph::symbol) &&
                             std::string_view(inst.kind->name) != "slash" &&
                             std::string_view(inst.kind->name) != "barrier";
        if (draws_on_wire)
            for (const WireGroup& g : inst.targets)
                for (WireIndex w : g.wires)
                    if (current_types_[static_cast<std::size_t>(w)] == RegisterType::nobit)
                        fail("gate '" + std::string(inst.kind->name) +
                                 "' on a discarded (nobit) wire",
                             stmt.span);
    }

    void elaborate_payload(GateInstance& inst, const Statement& stmt) {
        std::string_view name = inst.kind->name;
        if (name == "hspace") {
            double amount = parse_length(inst.value->raw, stmt.span);
            if (amount < 0)
                fail("hspace amount must not be negative", stmt.span);
            inst.hspace_mm = amount;
        } else if (name == "nop") {
            inst.hspace_mm = cfg_.nop_width_or_default();
        } else if (name == "settype") {
            auto type = register_type_from_name(detail::trim(inst.value->raw));
            if (!type)
                fail("settype expects qubit, cbit, qubits, or nobit", stmt.span);
            inst.settype_to = *type;
        } else if (name == "addstyle" || name == "setstyle") {
            inst.style_delta =
                detail::parse_style_delta(inst.value->raw, name == "setstyle", stmt.span, sink_);
        } else if (name == "subcircuit") {
            elaborate_subcircuit(inst, stmt);
        }
    }

    void elaborate_subcircuit(GateInstance& inst, const Statement& stmt) {
        auto sub = std::make_shared<SubcircuitElab>();
        Elaborator inner(cfg_, sink_, false, true);
        Elaboration elab = inner.run(*stmt.sub_program);
        sub->register_is_out = inner.register_out_flags();
        sub->table = std::move(elab.table);
        sub->instances = std::move(elab.instances);
        sub->wire_labels = std::move(elab.wire_labels);
        sub->initial_types = std::move(elab.declared_types);
        sub->final_types = std::move(elab.final_types);
        sub->wire_is_out = inner.wire_is_out_;

        std::vector<WireIndex> outer;
        for (const WireGroup& g : inst.targets)
            outer.insert(outer.end(), g.wires.begin(), g.wires.end());
        // An empty body degenerates to a bare box over the target wires.
        if (sub->table.wire_count() != 0 &&
            static_cast<int>(outer.size()) != sub->table.wire_count())
            fail("subcircuit has " + std::to_string(sub->table.wire_count()) +
                     " inner wires but is applied to " + std::to_string(outer.size()),
                 stmt.span);
        std::vector<WireIndex> sorted = outer;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] != sorted[i - 1] + 1)
                fail("subcircuit target wires must be adjacent", stmt.span);
        for (std::size_t i = 0; i < outer.size() && i < sub->wire_is_out.size(); ++i) {
            RegisterType outer_type = current_types_[static_cast<std::size_t>(outer[i])];
            if (sub->wire_is_out[i]) {
                if (outer_type != RegisterType::nobit)
                    sink_.warn("subcircuit 'out' register shadows a live wire", stmt.span);
            } else if (outer_type != sub->initial_types[i]) {
                sink_.warn("wire type entering subcircuit does not match inner declaration",
                           stmt.span);
            }
        }
        inst.sub = std::move(sub);
    }

    void apply_type_effects(GateInstance& inst) {
        auto set_type = [&](WireIndex w, RegisterType t) {
            if (current_types_[static_cast<std::size_t>(w)] != t) {
                inst.type_changes.push_back({w, t});
                current_types_[static_cast<std::size_t>(w)] = t;
            }
        };
        switch (inst.kind->type_effect) {
        case TypeEffect::none: break;
        case TypeEffect::to_classical:
            for (const WireGroup& g : inst.targets)
                for (WireIndex w : g.wires)
                    set_type(w, RegisterType::cbit);
            break;
        case TypeEffect::to_nobit:
            for (const WireGroup& g : inst.targets)
                for (WireIndex w : g.wires)
                    set_type(w, RegisterType::nobit);
            break;
        case TypeEffect::set_type:
            for (const WireGroup& g : inst.targets)
                for (WireIndex w : g.wires)
                    set_type(w, *inst.settype_to);
            break;
        case TypeEffect::reinitialize:
            for (const WireGroup& g : inst.targets)
                for (WireIndex w : g.wires)
                    set_type(w, result_.declared_types[static_cast<std::size_t>(w)]);
            break;
        }
        if (inst.sub && !inst.sub->final_types.empty()) {
            // Inner measurements and discards persist past the box.
            std::vector<WireIndex> outer;
            for (const WireGroup& g : inst.targets)
                outer.insert(outer.end(), g.wires.begin(), g.wires.end());
            for (std::size_t i = 0; i < outer.size(); ++i)
                set_type(outer[i], inst.sub->final_types[i]);
        }
    }

    const LayoutConfig& cfg_;
    DiagnosticSink& sink_;
    bool in_subcircuit_ = false;
    Elaboration result_;
    std::vector<RegisterType> current_types_;
    std::vector<bool> register_out_flags_;
    std::vector<bool> wire_is_out_;
};

} // namespace detail

/// Resolves every register reference and expands statements into placement
/// units. Statements without controls place each target group independently;
/// controlled statements form a single connected column.
inline Elaboration elaborate(const Program& program, const LayoutConfig& cfg,
                             DiagnosticSink& sink, bool star_mode = false) {
    detail::Elaborator el(cfg, sink, star_mode, false);
    return el.run(program);
}

} // namespace yqc
