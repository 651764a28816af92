#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "yqc/layout.hpp"
#include "yqc/scene.hpp"

namespace yqc {

namespace render_geometry {
constexpr double kDefaultStrokeMm = 0.2;
constexpr double kDoubleLineGap = 0.5;  // spread of classical double lines
constexpr double kBraceDepth = 1.2;
constexpr double kBarrierOverhang = 2.0;
constexpr double kLineHeight = 1.2;     // text line pitch, times font size
constexpr double kSmallTextScale = 0.7; // phase exponents, sub/superscripts
constexpr double kSeparatorPad = 3.0;   // space around group separators
} // namespace render_geometry

namespace detail {

inline std::vector<double> stroke_offsets(RegisterType type) {
    using G = std::vector<double>;
    switch (type) {
    case RegisterType::qubit: return G{0.0};
    case RegisterType::cbit:
        return G{-render_geometry::kDoubleLineGap / 2.0, render_geometry::kDoubleLineGap / 2.0};
    case RegisterType::qubits: return G{-render_geometry::kDoubleLineGap, 0.0,
                                        render_geometry::kDoubleLineGap};
    case RegisterType::nobit: return G{};
    }
    return {};
}

class SceneBuilder {
public:
    SceneBuilder(Scene& scene, DiagnosticSink* sink) : scene_(scene), sink_(sink) {}

    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool any_ = false;

    void grow(double x, double y) {
        if (!any_) {
            min_x = max_x = x;
            min_y = max_y = y;
            any_ = true;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }

    void add(Primitive p, const LayoutConfig& cfg) {
        switch (p.kind) {
        case Primitive::Kind::line:
        case Primitive::Kind::polyline:
            for (const ScenePoint& pt : p.pts)
                grow(pt.x, pt.y);
            break;
        case Primitive::Kind::rect:
            grow(p.x, p.y);
            grow(p.x + p.w, p.y + p.h);
            break;
        case Primitive::Kind::circle:
        case Primitive::Kind::arc:
            grow(p.cx - p.rx, p.cy - p.ry);
            grow(p.cx + p.rx, p.cy + p.ry);
            break;
        case Primitive::Kind::path:
            for (const PathCmd& c : p.cmds)
                for (std::size_t i = 0; i + 1 < c.args.size(); i += 2)
                    grow(c.args[i], c.args[i + 1]);
            break;
        case Primitive::Kind::text: {
            double font = p.font_mm;
            double width = 0;
            for (const TextLine& l : p.text.lines)
                width = std::max(width,
                                 static_cast<double>(l.codepoints()) * cfg.char_width_factor * font);
            double x0 = p.x, x1 = p.x;
            if (p.anchor == TextAnchor::start) {
                x1 = p.x + width;
            } else if (p.anchor == TextAnchor::middle) {
                x0 = p.x - width / 2;
                x1 = p.x + width / 2;
            } else {
                x0 = p.x - width;
            }
            grow(x0, p.y - font * 0.8);
            grow(x1, p.y + (static_cast<double>(p.text.lines.size()) - 1.0) *
                              render_geometry::kLineHeight * font +
                         font * 0.3);
            break;
        }
        }
        scene_.prims.push_back(std::move(p));
    }

    void append_layout(const Layout& lay, double ox, double oy);
    void append_outputs(const Layout& lay, double ox, double oy);

    Scene& scene_;
    DiagnosticSink* sink_;

private:
    void draw_wires(const Layout& lay, double ox, double oy);
    void draw_labels(const Layout& lay, double ox, double oy);
    void draw_placement(const Layout& lay, const Placement& p, double ox, double oy);
    void draw_boxed(const Layout& lay, const GateInstance& inst, const Placement& p, double ox,
                    double oy);
    void draw_symbol(const Layout& lay, const GateInstance& inst, const Placement& p, double ox,
                     double oy);
    void draw_init(const Layout& lay, const GateInstance& inst, const Placement& p, double ox,
                   double oy);
    void draw_subcircuit(const Layout& lay, const GateInstance& inst, const Placement& p,
                         double ox, double oy);

public:
    void draw_multiline_text(double x, double y_center, const RenderedText& text, double font,
                             TextAnchor anchor, std::string cls, const LayoutConfig& cfg,
                             std::string id = {});
    void draw_brace(double x, double y0, double y1, bool opens_right, const LayoutConfig& cfg);
};

inline double box_height(const RenderedText& text, const LayoutConfig& cfg) {
    std::size_t lines = std::max<std::size_t>(1, text.lines.size());
    double content = lines == 1 ? cfg.font_size
                                : static_cast<double>(lines) * render_geometry::kLineHeight *
                                      cfg.font_size;
    return content + 2.0 * cfg.text_padding;
}

inline void SceneBuilder::draw_multiline_text(double x, double y_center, const RenderedText& text,
                                              double font, TextAnchor anchor, std::string cls,
                                              const LayoutConfig& cfg, std::string id) {
    if (text.empty())
        return;
    double lh = render_geometry::kLineHeight * font;
    double n = static_cast<double>(text.lines.size());
    // Baseline of the first line so the block is vertically centered.
    double baseline = y_center - (n - 1.0) * lh / 2.0 + 0.35 * font;
    Primitive p = make_text(x, baseline, text, anchor, font, std::move(cls));
    p.id = std::move(id);
    add(std::move(p), cfg);
}

inline void SceneBuilder::draw_wires(const Layout& lay, double ox, double oy) {
    for (WireIndex w = 0; w < lay.wire_count; ++w) {
        double y = oy + lay.wire_y(w);
        for (const WireSegment& seg : lay.timelines[static_cast<std::size_t>(w)].segments) {
            for (double off : stroke_offsets(seg.type)) {
                Primitive line = make_line(ox + seg.x0, y + off, ox + seg.x1, y + off, "wire");
                if (!seg.style.color.empty())
                    line.stroke = seg.style.color;
                if (seg.style.line_width > 0)
                    line.stroke_width = seg.style.line_width;
                line.dash = seg.style.dash;
                add(std::move(line), lay.cfg);
            }
        }
    }
}

inline void SceneBuilder::draw_labels(const Layout& lay, double ox, double oy) {
    for (WireIndex w = 0; w < lay.wire_count; ++w) {
        std::size_t i = static_cast<std::size_t>(w);
        if (!lay.label_visible[i] || lay.wire_labels[i].empty())
            continue;
        draw_multiline_text(ox - lay.cfg.text_padding, oy + lay.wire_y(w), lay.wire_labels[i],
                            lay.cfg.font_size, TextAnchor::end, "label", lay.cfg);
    }
}

inline void SceneBuilder::append_layout(const Layout& lay, double ox, double oy) {
    draw_wires(lay, ox, oy);
    draw_labels(lay, ox, oy);
    for (const Placement& p : lay.placements)
        draw_placement(lay, p, ox, oy);
    append_outputs(lay, ox, oy);
}

inline void SceneBuilder::append_outputs(const Layout& lay, double ox, double oy) {
    const LayoutConfig& cfg = lay.cfg;
    for (const OutputLabel& out : lay.outputs) {
        WireIndex lo = *std::min_element(out.wires.begin(), out.wires.end());
        WireIndex hi = *std::max_element(out.wires.begin(), out.wires.end());
        double y_mid = oy + (lay.wire_y(lo) + lay.wire_y(hi)) / 2.0;
        double x = ox + lay.end_x + 0.4;
        if (out.joint && out.wires.size() > 1) {
            draw_brace(x, oy + lay.wire_y(lo) - 1.0, oy + lay.wire_y(hi) + 1.0,
                       /*opens_right=*/false, cfg);
            x += render_geometry::kBraceDepth + cfg.text_padding;
        } else {
            x += cfg.text_padding;
        }
        draw_multiline_text(x, y_mid, out.text, cfg.font_size, TextAnchor::start, "output", cfg);
    }
}

inline void SceneBuilder::draw_placement(const Layout& lay, const Placement& p, double ox,
                                         double oy) {
    const GateInstance& inst = lay.instances[p.instance];
    if (inst.invisible)
        return;
    std::string_view name = inst.kind->name;
    const LayoutConfig& cfg = lay.cfg;

    if (inst.kind->glyph == GateGlyph::pseudo)
        return;
    if (name == "output")
        return; // drawn via append_outputs

    double xc = ox + p.x_center;

    // Vertical connector spanning all touched wires, drawn under the glyphs.
    bool spans = p.wire_hi > p.wire_lo;
    if (name == "barrier") {
        Primitive line = make_line(xc, oy + lay.wire_y(p.wire_lo) - render_geometry::kBarrierOverhang,
                                   xc, oy + lay.wire_y(p.wire_hi) + render_geometry::kBarrierOverhang,
                                   "barrier");
        if (!inst.solid)
            line.dash = {1.0, 1.0};
        add(std::move(line), cfg);
        return;
    }
    // Correlate groups connect through their zigzag instead.
    bool straight_connector = spans && !(name == "correlate" && !inst.has_connector());
    if (straight_connector)
        add(make_line(xc, oy + lay.wire_y(p.wire_lo), xc, oy + lay.wire_y(p.wire_hi), "connector"),
            cfg);

    switch (inst.kind->glyph) {
    case GateGlyph::boxed_text: draw_boxed(lay, inst, p, ox, oy); break;
    case GateGlyph::symbol: draw_symbol(lay, inst, p, ox, oy); break;
    case GateGlyph::init_final: draw_init(lay, inst, p, ox, oy); break;
    case GateGlyph::subcircuit: draw_subcircuit(lay, inst, p, ox, oy); break;
    case GateGlyph::pseudo: break;
    }

    // Control dots sit on their wires at the column center.
    for (WireIndex w : inst.controls) {
        Primitive dot = make_circle(xc, oy + lay.wire_y(w), cfg.dot_radius, "control");
        dot.fill = "black";
        add(std::move(dot), cfg);
    }
    for (WireIndex w : inst.neg_controls) {
        Primitive dot = make_circle(xc, oy + lay.wire_y(w), cfg.dot_radius, "neg-control");
        dot.fill = "white";
        add(std::move(dot), cfg);
    }

    if (!p.label_above.empty()) {
        double top = oy + lay.wire_y(p.wire_lo) - box_height(p.value_text, cfg) / 2.0;
        draw_multiline_text(xc, top - 0.6 * cfg.font_size, p.label_above, cfg.font_size,
                            TextAnchor::middle, "gate-label", cfg);
    }
}

inline void SceneBuilder::draw_boxed(const Layout& lay, const GateInstance& inst,
                                     const Placement& p, double ox, double oy) {
    const LayoutConfig& cfg = lay.cfg;
    double xc = ox + p.x_center;
    bool unboxed = std::string_view(inst.kind->name) == "inspect";
    double h = box_height(p.value_text, cfg);
    bool first_group = true;
    for (const WireGroup& g : inst.targets) {
        WireIndex lo = *std::min_element(g.wires.begin(), g.wires.end());
        WireIndex hi = *std::max_element(g.wires.begin(), g.wires.end());
        double y0 = oy + lay.wire_y(lo);
        double y1 = oy + lay.wire_y(hi);
        if (!unboxed) {
            Primitive rect = make_rect(xc - p.half_width, y0 - h / 2.0, 2.0 * p.half_width,
                                       (y1 - y0) + h, "gate-box");
            rect.fill = inst.fill_color.value_or("white");
            if (inst.dashed)
                rect.dash = {1.0, 1.0};
            if (first_group && !inst.element_id.empty())
                rect.id = inst.element_id;
            add(std::move(rect), cfg);
        }
        draw_multiline_text(xc, (y0 + y1) / 2.0, p.value_text, cfg.font_size, TextAnchor::middle,
                            unboxed ? "inspect" : "gate-text", cfg,
                            unboxed && first_group ? inst.element_id : std::string());
        first_group = false;
    }
}

inline void SceneBuilder::draw_symbol(const Layout& lay, const GateInstance& inst,
                                      const Placement& p, double ox, double oy) {
    const LayoutConfig& cfg = lay.cfg;
    double xc = ox + p.x_center;
    std::string_view name = inst.kind->name;
    bool first = true;
    for (const WireGroup& g : inst.targets) {
        for (std::size_t gi = 0; gi < g.wires.size(); ++gi) {
            WireIndex w = g.wires[gi];
            double y = oy + lay.wire_y(w);
            std::string id = first && !inst.element_id.empty() ? inst.element_id : std::string();
            first = false;
            if (name == "not") {
                Primitive circle = make_circle(xc, y, cfg.oplus_radius, "oplus");
                circle.id = id;
                add(std::move(circle), cfg);
                add(make_line(xc, y - cfg.oplus_radius, xc, y + cfg.oplus_radius, "oplus-cross"),
                    cfg);
                add(make_line(xc - cfg.oplus_radius, y, xc + cfg.oplus_radius, y, "oplus-cross"),
                    cfg);
            } else if (name == "phase") {
                Primitive dot = make_circle(xc, y, cfg.dot_radius, "phase");
                dot.fill = "black";
                dot.id = id;
                add(std::move(dot), cfg);
                if (!p.value_text.empty())
                    draw_multiline_text(xc + cfg.dot_radius + 0.3,
                                        y - cfg.dot_radius - 0.5 * cfg.font_size, p.value_text,
                                        render_geometry::kSmallTextScale * cfg.font_size,
                                        TextAnchor::start, "phase-text", cfg);
            } else if (name == "measure") {
                double wdt = cfg.measure_width;
                double h = box_height({}, cfg);
                Primitive rect = make_rect(xc - wdt / 2.0, y - h / 2.0, wdt, h, "measure");
                rect.fill = "white";
                rect.id = id;
                add(std::move(rect), cfg);
                Primitive gauge;
                gauge.kind = Primitive::Kind::arc;
                gauge.cx = xc;
                gauge.cy = y + 0.22 * h;
                gauge.rx = gauge.ry = 0.28 * wdt;
                gauge.angle0 = 180;
                gauge.angle1 = 360;
                gauge.cls = "measure-arc";
                add(std::move(gauge), cfg);
                add(make_line(xc, y + 0.22 * h, xc + 0.22 * wdt, y - 0.28 * h, "measure-needle"),
                    cfg);
            } else if (name == "dmeter") {
                double wdt = 2.0 * p.half_width;
                double h = box_height({}, cfg);
                Primitive d;
                d.kind = Primitive::Kind::path;
                double x0 = xc - wdt / 2.0;
                // Flat left edge, rounded right side (two cubics).
                double k = 0.5523; // circle-from-Bezier constant
                double bulge = std::min(wdt, h);
                double ryy = h / 2.0;
                d.cmds.push_back({'M', {x0, y - ryy}});
                d.cmds.push_back({'L', {x0, y + ryy}});
                d.cmds.push_back({'L', {x0 + wdt - bulge, y + ryy}});
                d.cmds.push_back(
                    {'C', {x0 + wdt - bulge + k * bulge, y + ryy, x0 + wdt, y + k * ryy, x0 + wdt, y}});
                d.cmds.push_back(
                    {'C', {x0 + wdt, y - k * ryy, x0 + wdt - bulge + k * bulge, y - ryy,
                           x0 + wdt - bulge, y - ryy}});
                d.cmds.push_back({'Z', {}});
                d.cls = "dmeter";
                d.fill = "white";
                d.id = id;
                add(std::move(d), cfg);
                if (!p.value_text.empty())
                    draw_multiline_text(xc - bulge / 4.0, y, p.value_text, cfg.font_size,
                                        TextAnchor::middle, "dmeter-text", cfg);
            } else if (name == "slash") {
                double r = cfg.oplus_radius;
                Primitive line = make_line(xc - 0.8 * r, y + 1.1 * r, xc + 0.8 * r, y - 1.1 * r,
                                           "slash");
                line.id = id;
                add(std::move(line), cfg);
            } else if (name == "swap" || name == "xx") {
                double s = cfg.oplus_radius * 0.8;
                Primitive a = make_line(xc - s, y - s, xc + s, y + s, std::string(name));
                a.id = id;
                add(std::move(a), cfg);
                add(make_line(xc - s, y + s, xc + s, y - s, std::string(name)), cfg);
            } else if (name == "zz") {
                Primitive dot = make_circle(xc, y, cfg.dot_radius, "zz");
                dot.fill = "black";
                dot.id = id;
                add(std::move(dot), cfg);
            } else if (name == "correlate") {
                if (gi == 0 && g.wires.size() > 1) {
                    double y_end = oy + lay.wire_y(*std::max_element(g.wires.begin(),
                                                                     g.wires.end()));
                    Primitive zig;
                    zig.kind = Primitive::Kind::polyline;
                    zig.cls = "correlate-zigzag";
                    double span = y_end - y;
                    int steps = std::max(2, static_cast<int>(span / 1.2));
                    for (int si = 0; si <= steps; ++si) {
                        double t = static_cast<double>(si) / steps;
                        double dx = si == 0 || si == steps ? 0.0 : (si % 2 ? 0.5 : -0.5);
                        zig.pts.push_back({xc + dx, y + t * span});
                    }
                    add(std::move(zig), cfg);
                }
                Primitive dot = make_circle(xc, y, cfg.dot_radius, "correlate");
                dot.fill = "white";
                dot.id = id;
                add(std::move(dot), cfg);
            }
        }
    }
}

inline void SceneBuilder::draw_init(const Layout& lay, const GateInstance& inst,
                                    const Placement& p, double ox, double oy) {
    const LayoutConfig& cfg = lay.cfg;
    double xc = ox + p.x_center;
    for (const WireGroup& g : inst.targets) {
        WireIndex lo = *std::min_element(g.wires.begin(), g.wires.end());
        WireIndex hi = *std::max_element(g.wires.begin(), g.wires.end());
        double y_mid = oy + (lay.wire_y(lo) + lay.wire_y(hi)) / 2.0;
        bool braced = g.joint && g.wires.size() > 1;
        double text_x = braced ? xc - render_geometry::kBraceDepth / 2.0 - cfg.text_padding / 2.0
                               : xc;
        draw_multiline_text(text_x, y_mid, p.value_text, cfg.font_size, TextAnchor::middle, "init",
                            cfg, inst.element_id);
        if (braced)
            draw_brace(ox + p.x_center + p.half_width - render_geometry::kBraceDepth - 0.2,
                       oy + lay.wire_y(lo) - 1.0, oy + lay.wire_y(hi) + 1.0, /*opens_right=*/true,
                       cfg);
    }
}

inline void SceneBuilder::draw_brace(double x, double y0, double y1, bool opens_right,
                                     const LayoutConfig& cfg) {
    // Curly brace between y0 and y1; the cusp points away from the opening.
    double d = render_geometry::kBraceDepth * (opens_right ? 1.0 : -1.0);
    double ym = (y0 + y1) / 2.0;
    Primitive brace;
    brace.kind = Primitive::Kind::path;
    brace.cls = "brace";
    brace.cmds.push_back({'M', {x + d, y0}});
    brace.cmds.push_back({'C', {x, y0, x, y0, x, (y0 + ym) / 2.0}});
    brace.cmds.push_back({'L', {x, ym - std::abs(d) / 2.0}});
    brace.cmds.push_back({'C', {x, ym, x - d, ym, x - d, ym}});
    brace.cmds.push_back({'C', {x, ym, x, ym, x, ym + std::abs(d) / 2.0}});
    brace.cmds.push_back({'L', {x, (ym + y1) / 2.0}});
    brace.cmds.push_back({'C', {x, y1, x, y1, x + d, y1}});
    add(std::move(brace), cfg);
}

inline void SceneBuilder::draw_subcircuit(const Layout& lay, const GateInstance& inst,
                                          const Placement& p, double ox, double oy) {
    const LayoutConfig& cfg = lay.cfg;
    const Layout& inner = *p.sub;
    double x0 = ox + p.x_center - p.half_width;
    double x1 = ox + p.x_center + p.half_width;
    double y0 = oy + lay.wire_y(p.wire_lo) - cfg.wire_gap / 2.0;
    double y1 = oy + lay.wire_y(p.wire_hi) + cfg.wire_gap / 2.0;

    std::vector<WireIndex> outer_wires;
    for (const WireGroup& g : inst.targets)
        outer_wires.insert(outer_wires.end(), g.wires.begin(), g.wires.end());
    WireIndex outer_lo = *std::min_element(outer_wires.begin(), outer_wires.end());

    Primitive box = make_rect(x0, y0, x1 - x0, y1 - y0, "subcircuit-box");
    if (inst.dashed)
        box.dash = {1.0, 1.0};
    if (!inst.element_id.empty())
        box.id = inst.element_id;
    add(std::move(box), cfg);

    double inner_ox = x0 + cfg.text_padding + inner.label_extent();
    double inner_oy = oy + lay.wire_y(outer_lo);

    // Wire stubs bridge the box border and the inner frame.
    for (std::size_t i = 0; i < outer_wires.size(); ++i) {
        double y = oy + lay.wire_y(outer_wires[i]);
        if (!inner.declared_types.empty()) {
            RegisterType in_type = inner.declared_types[i];
            bool is_out = !inner.label_visible.empty() && inner.label_visible[i];
            if (!is_out)
                for (double off : stroke_offsets(in_type))
                    add(make_line(x0, y + off, inner_ox, y + off, "wire"), cfg);
            RegisterType out_type = inner.timelines[i].segments.empty()
                                        ? in_type
                                        : inner.timelines[i].segments.back().type;
            for (double off : stroke_offsets(out_type))
                add(make_line(inner_ox + inner.end_x, y + off, x1, y + off, "wire"), cfg);
        }
    }

    append_layout(inner, inner_ox, inner_oy);
}

} // namespace detail

/// Lays a finished Layout into renderer-neutral primitives. Coordinates are
/// shifted so everything is non-negative, with a uniform margin.
inline void finalize_scene(Scene& scene, detail::SceneBuilder& builder, const LayoutConfig& cfg,
                           double margin = 1.5) {
    double dx = margin - (builder.any_ ? builder.min_x : 0.0);
    double dy = margin - (builder.any_ ? builder.min_y : 0.0);
    for (Primitive& p : scene.prims) {
        for (ScenePoint& pt : p.pts) {
            pt.x += dx;
            pt.y += dy;
        }
        p.x += dx;
        p.y += dy;
        p.cx += dx;
        p.cy += dy;
        for (PathCmd& c : p.cmds)
            for (std::size_t i = 0; i + 1 < c.args.size(); i += 2) {
                c.args[i] += dx;
                c.args[i + 1] += dy;
            }
    }
    scene.width = (builder.any_ ? builder.max_x - builder.min_x : 0.0) + 2.0 * margin;
    scene.height = (builder.any_ ? builder.max_y - builder.min_y : 0.0) + 2.0 * margin;
    scene.origin_x = dx;
    scene.origin_y = dy;
    scene.font_family = cfg.font_family;
    scene.font_mm = cfg.font_size;
}

inline Scene build_scene(const Layout& layout, DiagnosticSink* sink = nullptr) {
    Scene scene;
    detail::SceneBuilder builder(scene, sink);
    builder.append_layout(layout, 0.0, 0.0);
    finalize_scene(scene, builder, layout.cfg);
    return scene;
}

/// Composes several independently laid out circuits left to right with
/// separator text (circuit equations).
inline Scene compose_group(const std::vector<Layout>& members,
                           const std::vector<std::string>& separators, const LayoutConfig& cfg,
                           DiagnosticSink* sink = nullptr) {
    Scene scene;
    detail::SceneBuilder builder(scene, sink);
    double ox = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Layout& member = members[i];
        double left = member.label_extent();
        builder.append_layout(member, ox + left, 0.0);
        double outputs_extent = 0.0;
        for (const OutputLabel& out : member.outputs)
            outputs_extent = std::max(outputs_extent,
                                      member.text_width(out.text) + 2.0 * cfg.text_padding);
        ox += left + member.end_x + outputs_extent;
        if (i + 1 < members.size()) {
            std::string sep = i < separators.size() ? separators[i] : "=";
            RenderedText sep_text = render_value_text(sep, sink);
            double sep_w = member.text_width(sep_text);
            double y_mid = member.wire_count > 1
                               ? member.wire_y(member.wire_count - 1) / 2.0
                               : 0.0;
            builder.draw_multiline_text(ox + render_geometry::kSeparatorPad + sep_w / 2.0, y_mid,
                                        sep_text, cfg.font_size, TextAnchor::middle, "separator",
                                        cfg);
            ox += 2.0 * render_geometry::kSeparatorPad + sep_w;
        }
    }
    finalize_scene(scene, builder, cfg);
    return scene;
}

} // namespace yqc
