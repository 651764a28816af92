#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "yqc/config.hpp"
#include "yqc/gates.hpp"
#include "yqc/render_text.hpp"

namespace yqc {

struct WireSegment {
    double x0 = 0.0;
    double x1 = 0.0;
    RegisterType type = RegisterType::qubit;
    WireStyle style;
};

struct WireTimeline {
    std::vector<WireSegment> segments;

    RegisterType type_at(double x) const {
        for (const WireSegment& s : segments)
            if (x >= s.x0 && x < s.x1)
                return s.type;
        return segments.empty() ? RegisterType::nobit : segments.back().type;
    }
};

struct Layout;

struct Placement {
    std::size_t instance = 0; // index into Layout::instances
    double x_center = 0.0;
    double half_width = 0.0;
    WireIndex wire_lo = 0;
    WireIndex wire_hi = 0;
    RenderedText value_text;
    RenderedText label_above;
    std::unique_ptr<Layout> sub; // subcircuit interior
};

struct OutputLabel {
    std::vector<WireIndex> wires;
    bool joint = false;
    RenderedText text;
};

struct Layout {
    LayoutConfig cfg;
    std::vector<GateInstance> instances;
    std::vector<Placement> placements;
    std::vector<WireTimeline> timelines;
    std::vector<RenderedText> wire_labels;
    std::vector<bool> label_visible;
    std::vector<RegisterType> declared_types;
    std::vector<std::pair<std::string, int>> wire_names; // register name + element index
    std::vector<OutputLabel> outputs;
    int wire_count = 0;
    double content_end = 0.0; // max cursor after the last instance
    double end_x = 0.0;       // where wire lines stop

    double wire_y(WireIndex w) const { return w * cfg.wire_gap; }

    double label_extent() const {
        double extent = 0.0;
        for (std::size_t w = 0; w < wire_labels.size(); ++w) {
            if (!label_visible[w] || wire_labels[w].empty())
                continue;
            extent = std::max(extent, text_width(wire_labels[w]) + cfg.text_padding);
        }
        return extent;
    }

    double text_width(const RenderedText& text) const {
        double width = 0.0;
        for (const TextLine& line : text.lines)
            width = std::max(width, static_cast<double>(line.codepoints()) *
                                        cfg.char_width_factor * cfg.font_size);
        return width;
    }
};

/// Sets every listed cursor to the common maximum.
inline void apply_align(std::vector<double>& cursors, const std::vector<WireIndex>& wires) {
    double common = 0.0;
    bool first = true;
    for (WireIndex w : wires) {
        double c = cursors[static_cast<std::size_t>(w)];
        common = first ? c : std::max(common, c);
        first = false;
    }
    for (WireIndex w : wires)
        cursors[static_cast<std::size_t>(w)] = common;
}

inline void apply_hspace(double& cursor, double amount) {
    if (amount < 0)
        fail("hspace amount must not be negative");
    cursor += amount;
}

namespace detail {

class Placer {
public:
    Placer(Elaboration elab, const LayoutConfig& cfg, DiagnosticSink* sink,
           std::vector<bool> label_visible)
        : cfg_(cfg), sink_(sink) {
        layout_.cfg = cfg;
        layout_.instances = std::move(elab.instances);
        layout_.declared_types = std::move(elab.declared_types);
        layout_.wire_count = elab.table.wire_count();
        for (const Register& reg : elab.table.registers())
            for (int i = 0; i < reg.length; ++i)
                layout_.wire_names.push_back({reg.name, i});
        for (const std::string& label : elab.wire_labels)
            layout_.wire_labels.push_back(render_value_text(label, sink));
        layout_.label_visible = label_visible.empty()
                                    ? std::vector<bool>(layout_.wire_labels.size(), true)
                                    : std::move(label_visible);
        cursors_.assign(static_cast<std::size_t>(layout_.wire_count), 0.0);
        for (WireIndex w = 0; w < layout_.wire_count; ++w) {
            Tracker t;
            t.type = layout_.declared_types[static_cast<std::size_t>(w)];
            trackers_.push_back(std::move(t));
        }
    }

    Layout run() {
        for (std::size_t i = 0; i < layout_.instances.size(); ++i)
            place_instance(i);
        layout_.content_end = 0.0;
        for (double c : cursors_)
            layout_.content_end = std::max(layout_.content_end, c);
        layout_.end_x = layout_.content_end + cfg_.column_gap;
        finish_outputs();
        for (WireIndex w = 0; w < layout_.wire_count; ++w)
            layout_.timelines.push_back(close_tracker(w));
        return std::move(layout_);
    }

private:
    struct Tracker {
        double seg_start = 0.0;
        RegisterType type = RegisterType::qubit;
        WireStyle style;
        std::vector<WireSegment> segments;
    };

    void place_instance(std::size_t index) {
        GateInstance& inst = layout_.instances[index];
        Placement p;
        p.instance = index;
        p.wire_lo = inst.wire_lo();
        p.wire_hi = inst.wire_hi();
        if (inst.value && std::string_view(inst.kind->name) != "subcircuit")
            p.value_text = render_value_text(*inst.value, sink_);
        else if (*inst.kind->fixed_letter)
            p.value_text = render_value_text(std::string(inst.kind->fixed_letter), sink_);
        if (inst.label_above)
            p.label_above = render_value_text(*inst.label_above, sink_);

        std::string_view name = inst.kind->name;
        if (inst.kind->glyph == GateGlyph::pseudo) {
            place_pseudo(inst, p);
        } else if (name == "output") {
            // Deferred: output labels sit past the global end of the circuit.
            deferred_outputs_.push_back(index);
            p.x_center = 0.0;
            p.half_width = 0.0;
        } else {
            place_column(inst, p);
        }
        layout_.placements.push_back(std::move(p));
    }

    void place_pseudo(GateInstance& inst, Placement& p) {
        std::string_view name = inst.kind->name;
        std::vector<WireIndex> wires;
        for (const WireGroup& g : inst.targets)
            wires.insert(wires.end(), g.wires.begin(), g.wires.end());
        if (name == "align") {
            apply_align(cursors_, wires);
            p.x_center = cursors_[static_cast<std::size_t>(wires.front())];
            p.half_width = 0.0;
            return;
        }
        if (name == "hspace" || name == "nop") {
            double amount = inst.hspace_mm;
            WireIndex w = wires.front();
            double before = cursors_[static_cast<std::size_t>(w)];
            apply_hspace(cursors_[static_cast<std::size_t>(w)], amount);
            p.x_center = before + amount / 2.0;
            p.half_width = amount / 2.0;
            return;
        }
        // discard / settype / addstyle / setstyle: zero width at the cursor.
        WireIndex w = wires.front();
        double x = cursors_[static_cast<std::size_t>(w)];
        p.x_center = x;
        p.half_width = 0.0;
        for (const auto& [wire, type] : inst.type_changes)
            change_type(wire, x, type);
        if (inst.style_delta)
            change_style(w, x, *inst.style_delta);
    }

    void place_column(GateInstance& inst, Placement& p) {
        double width = instance_width(inst, p);
        WireIndex lo = p.wire_lo, hi = p.wire_hi;
        double x_left = 0.0;
        for (WireIndex w = lo; w <= hi; ++w)
            x_left = std::max(x_left, cursors_[static_cast<std::size_t>(w)]);
        x_left += cfg_.column_gap;
        double x_right = x_left + width;
        for (WireIndex w = lo; w <= hi; ++w)
            cursors_[static_cast<std::size_t>(w)] = x_right;
        p.x_center = x_left + width / 2.0;
        p.half_width = width / 2.0;
        if (inst.sub && !inst.sub->final_types.empty()) {
            // The box interior is drawn by the nested layout: blank the outer
            // wire across it and resume with the propagated type.
            std::size_t i = 0;
            for (const WireGroup& g : inst.targets)
                for (WireIndex w : g.wires) {
                    change_type(w, x_left, RegisterType::nobit);
                    change_type(w, x_right, inst.sub->final_types[i]);
                    ++i;
                }
            return;
        }
        for (const auto& [wire, type] : inst.type_changes)
            change_type(wire, x_right, type);
    }

    double instance_width(GateInstance& inst, Placement& p) {
        std::string_view name = inst.kind->name;
        if (name == "barrier")
            return 0.0;
        if (name == "measure")
            return cfg_.measure_width;
        if (name == "dmeter")
            return std::max(cfg_.min_op_width,
                            layout_.text_width(p.value_text) + 2.0 * cfg_.text_padding);
        if (name == "not")
            return 2.0 * cfg_.oplus_radius;
        if (name == "swap" || name == "xx" || name == "slash")
            return 2.0 * cfg_.oplus_radius;
        if (name == "zz" || name == "correlate")
            return 2.0 * cfg_.dot_radius;
        if (name == "phase")
            return 2.0 * cfg_.dot_radius + layout_.text_width(p.value_text);
        if (name == "inspect")
            return layout_.text_width(p.value_text);
        if (name == "subcircuit") {
            p.sub = lay_out_subcircuit(*inst.sub);
            double inner = p.sub->label_extent() + p.sub->end_x;
            return inner + 2.0 * cfg_.text_padding;
        }
        // box, h/x/y/z, init
        return std::max(cfg_.min_op_width,
                        layout_.text_width(p.value_text) + 2.0 * cfg_.text_padding);
    }

    std::unique_ptr<Layout> lay_out_subcircuit(const SubcircuitElab& sub) {
        Elaboration inner;
        inner.table = sub.table;
        inner.instances = sub.instances;
        inner.wire_labels = sub.wire_labels;
        inner.declared_types = sub.initial_types;
        inner.final_types = sub.final_types;
        std::vector<bool> visible = sub.wire_is_out; // labels only for out registers
        Placer placer(std::move(inner), cfg_, sink_, std::move(visible));
        return std::make_unique<Layout>(placer.run());
    }

    void finish_outputs() {
        for (std::size_t index : deferred_outputs_) {
            GateInstance& inst = layout_.instances[index];
            Placement& p = layout_.placements[index];
            double width = layout_.text_width(p.value_text);
            p.x_center = layout_.end_x + cfg_.text_padding + width / 2.0;
            p.half_width = width / 2.0;
            for (const WireGroup& g : inst.targets) {
                OutputLabel label;
                label.wires = g.wires;
                label.joint = g.joint;
                label.text = p.value_text;
                layout_.outputs.push_back(std::move(label));
            }
        }
    }

    void change_type(WireIndex w, double x, RegisterType type) {
        Tracker& t = trackers_[static_cast<std::size_t>(w)];
        if (t.type == type)
            return;
        if (x > t.seg_start)
            t.segments.push_back({t.seg_start, x, t.type, t.style});
        t.seg_start = x;
        t.type = type;
    }

    void change_style(WireIndex w, double x, const StyleDelta& delta) {
        Tracker& t = trackers_[static_cast<std::size_t>(w)];
        WireStyle next = t.style;
        detail::apply_style_delta(next, delta);
        if (next == t.style)
            return;
        if (x > t.seg_start)
            t.segments.push_back({t.seg_start, x, t.type, t.style});
        t.seg_start = x;
        t.style = next;
    }

    WireTimeline close_tracker(WireIndex w) {
        Tracker& t = trackers_[static_cast<std::size_t>(w)];
        if (layout_.end_x > t.seg_start)
            t.segments.push_back({t.seg_start, layout_.end_x, t.type, t.style});
        WireTimeline timeline;
        timeline.segments = std::move(t.segments);
        return timeline;
    }

    LayoutConfig cfg_;
    DiagnosticSink* sink_;
    Layout layout_;
    std::vector<double> cursors_;
    std::vector<Tracker> trackers_;
    std::vector<std::size_t> deferred_outputs_;
};

} // namespace detail

/// Assigns x-positions with the per-wire cursor model: each placement claims
/// the first free column across the contiguous wire interval it touches, and
/// wires not involved keep packing gates independently.
inline Layout place(Elaboration elab, const LayoutConfig& cfg, DiagnosticSink* sink = nullptr) {
    detail::Placer placer(std::move(elab), cfg, sink, {});
    return placer.run();
}

} // namespace yqc
