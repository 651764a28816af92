#pragma once

#include <string>
#include <vector>

#include "yqc/render_text.hpp"

namespace yqc {

struct ScenePoint {
    double x = 0.0;
    double y = 0.0;
};

struct PathCmd {
    char op = 'M'; // M, L, C, Z
    std::vector<double> args;
};

enum class TextAnchor { start, middle, end };

/// One drawable element. `kind` selects which geometry fields apply; shared
/// style fields follow SVG semantics (empty fill means none, stroke_width 0
/// means the document default).
struct Primitive {
    enum class Kind { line, polyline, rect, circle, arc, path, text } kind = Kind::line;

    std::vector<ScenePoint> pts; // line (2 points) / polyline
    double x = 0, y = 0, w = 0, h = 0;                  // rect
    double cx = 0, cy = 0, rx = 0, ry = 0;              // circle / arc
    double angle0 = 0, angle1 = 0;                      // arc, degrees
    std::vector<PathCmd> cmds;                          // path
    RenderedText text;                                  // text
    TextAnchor anchor = TextAnchor::middle;
    double font_mm = 0;

    std::string cls;
    std::string id;
    std::string stroke = "black";
    double stroke_width = 0;
    std::vector<double> dash;
    std::string fill;
};

struct Scene {
    double width = 0;
    double height = 0;
    // Translation applied when normalizing coordinates; maps layout frame
    // coordinates into the scene: scene = layout + origin.
    double origin_x = 0;
    double origin_y = 0;
    std::string font_family;
    double font_mm = 0; // document default text size
    std::vector<Primitive> prims;
};

namespace detail {

inline Primitive make_line(double x1, double y1, double x2, double y2, std::string cls) {
    Primitive p;
    p.kind = Primitive::Kind::line;
    p.pts = {{x1, y1}, {x2, y2}};
    p.cls = std::move(cls);
    return p;
}

inline Primitive make_rect(double x, double y, double w, double h, std::string cls) {
    Primitive p;
    p.kind = Primitive::Kind::rect;
    p.x = x;
    p.y = y;
    p.w = w;
    p.h = h;
    p.cls = std::move(cls);
    return p;
}

inline Primitive make_circle(double cx, double cy, double r, std::string cls) {
    Primitive p;
    p.kind = Primitive::Kind::circle;
    p.cx = cx;
    p.cy = cy;
    p.rx = r;
    p.ry = r;
    p.cls = std::move(cls);
    return p;
}

inline Primitive make_text(double x, double y, RenderedText text, TextAnchor anchor, double font_mm,
                           std::string cls) {
    Primitive p;
    p.kind = Primitive::Kind::text;
    p.x = x;
    p.y = y;
    p.text = std::move(text);
    p.anchor = anchor;
    p.font_mm = font_mm;
    p.cls = std::move(cls);
    p.stroke = "";
    p.fill = "black";
    return p;
}

} // namespace detail

} // namespace yqc
