#pragma once

#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "yqc/diagnostics.hpp"
#include "yqc/render.hpp"
#include "yqc/scene.hpp"

namespace yqc {

namespace detail {

/// Fixed four-decimal formatting with trailing zeros trimmed; keeps output
/// byte-stable across runs.
inline std::string fmt_num(double v) {
    if (v == 0.0)
        v = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    std::string s(buf);
    std::size_t dot = s.find('.');
    std::size_t last = s.find_last_not_of('0');
    if (last == dot)
        --last;
    s.resize(last + 1);
    if (s == "-0")
        s = "0";
    return s;
}

inline std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

inline void write_style(std::ostream& os, const Primitive& p, bool default_fill_none) {
    if (p.stroke.empty())
        os << " stroke=\"none\"";
    else if (p.stroke != "black")
        os << " stroke=\"" << p.stroke << "\"";
    if (p.stroke_width > 0)
        os << " stroke-width=\"" << fmt_num(p.stroke_width) << "\"";
    if (!p.dash.empty()) {
        os << " stroke-dasharray=\"";
        for (std::size_t i = 0; i < p.dash.size(); ++i)
            os << (i ? " " : "") << fmt_num(p.dash[i]);
        os << "\"";
    }
    if (p.fill.empty()) {
        if (!default_fill_none)
            os << " fill=\"none\"";
    } else {
        os << " fill=\"" << p.fill << "\"";
    }
}

inline void write_common(std::ostream& os, const Primitive& p) {
    if (!p.cls.empty())
        os << " class=\"" << xml_escape(p.cls) << "\"";
    if (!p.id.empty())
        os << " id=\"" << xml_escape(p.id) << "\"";
}

inline void write_text(std::ostream& os, const Primitive& p) {
    const char* anchor = p.anchor == TextAnchor::start
                             ? "start"
                             : (p.anchor == TextAnchor::middle ? "middle" : "end");
    double lh = render_geometry::kLineHeight * p.font_mm;
    for (std::size_t li = 0; li < p.text.lines.size(); ++li) {
        const TextLine& line = p.text.lines[li];
        if (line.runs.empty())
            continue;
        os << "<text x=\"" << fmt_num(p.x) << "\" y=\""
           << fmt_num(p.y + static_cast<double>(li) * lh) << "\" text-anchor=\"" << anchor
           << "\" font-size=\"" << fmt_num(p.font_mm) << "\"";
        write_common(os, p);
        os << " fill=\"black\" stroke=\"none\">";
        double shift = 0.0; // current baseline offset from sub/superscripts
        for (const TextRun& run : line.runs) {
            double want = 0.0;
            double scale = 1.0;
            if (run.style == RunStyle::subscript_) {
                want = 0.3 * p.font_mm;
                scale = render_geometry::kSmallTextScale;
            } else if (run.style == RunStyle::superscript_) {
                want = -0.45 * p.font_mm;
                scale = render_geometry::kSmallTextScale;
            }
            bool plain = run.style == RunStyle::normal && shift == 0.0;
            if (plain) {
                os << xml_escape(run.text);
                continue;
            }
            os << "<tspan";
            if (want != shift)
                os << " dy=\"" << fmt_num(want - shift) << "\"";
            shift = want;
            if (scale != 1.0)
                os << " font-size=\"" << fmt_num(scale * p.font_mm) << "\"";
            if (run.style == RunStyle::script)
                os << " font-style=\"italic\"";
            os << ">" << xml_escape(run.text) << "</tspan>";
        }
        os << "</text>\n";
    }
}

inline void write_primitive(std::ostream& os, const Primitive& p) {
    switch (p.kind) {
    case Primitive::Kind::line:
        os << "<line x1=\"" << fmt_num(p.pts[0].x) << "\" y1=\"" << fmt_num(p.pts[0].y)
           << "\" x2=\"" << fmt_num(p.pts[1].x) << "\" y2=\"" << fmt_num(p.pts[1].y) << "\"";
        write_common(os, p);
        write_style(os, p, true);
        os << "/>\n";
        break;
    case Primitive::Kind::polyline: {
        os << "<polyline points=\"";
        for (std::size_t i = 0; i < p.pts.size(); ++i)
            os << (i ? " " : "") << fmt_num(p.pts[i].x) << "," << fmt_num(p.pts[i].y);
        os << "\"";
        write_common(os, p);
        write_style(os, p, false);
        os << "/>\n";
        break;
    }
    case Primitive::Kind::rect:
        os << "<rect x=\"" << fmt_num(p.x) << "\" y=\"" << fmt_num(p.y) << "\" width=\""
           << fmt_num(p.w) << "\" height=\"" << fmt_num(p.h) << "\"";
        write_common(os, p);
        write_style(os, p, false);
        os << "/>\n";
        break;
    case Primitive::Kind::circle:
        os << "<circle cx=\"" << fmt_num(p.cx) << "\" cy=\"" << fmt_num(p.cy) << "\" r=\""
           << fmt_num(p.rx) << "\"";
        write_common(os, p);
        write_style(os, p, false);
        os << "/>\n";
        break;
    case Primitive::Kind::arc: {
        constexpr double kPi = 3.14159265358979323846;
        double a0 = p.angle0 * kPi / 180.0, a1 = p.angle1 * kPi / 180.0;
        double x0 = p.cx + p.rx * std::cos(a0), y0 = p.cy + p.ry * std::sin(a0);
        double x1 = p.cx + p.rx * std::cos(a1), y1 = p.cy + p.ry * std::sin(a1);
        int large = std::abs(p.angle1 - p.angle0) > 180.0 ? 1 : 0;
        int sweep = p.angle1 > p.angle0 ? 1 : 0;
        os << "<path d=\"M " << fmt_num(x0) << " " << fmt_num(y0) << " A " << fmt_num(p.rx) << " "
           << fmt_num(p.ry) << " 0 " << large << " " << sweep << " " << fmt_num(x1) << " "
           << fmt_num(y1) << "\"";
        write_common(os, p);
        write_style(os, p, false);
        os << "/>\n";
        break;
    }
    case Primitive::Kind::path: {
        os << "<path d=\"";
        bool first = true;
        for (const PathCmd& c : p.cmds) {
            if (!first)
                os << " ";
            first = false;
            os << c.op;
            for (double a : c.args)
                os << " " << fmt_num(a);
        }
        os << "\"";
        write_common(os, p);
        write_style(os, p, false);
        os << "/>\n";
        break;
    }
    case Primitive::Kind::text: write_text(os, p); break;
    }
}

} // namespace detail

/// Serializes a Scene as a standalone SVG 1.1 document in millimeter units.
/// The same scene always produces identical bytes.
inline std::string emit_svg(const Scene& scene, double scale = 1.0) {
    std::set<std::string> seen_ids;
    for (const Primitive& p : scene.prims)
        if (!p.id.empty() && !seen_ids.insert(p.id).second)
            fail("duplicate element name '" + p.id + "'");

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
       << detail::fmt_num(scene.width * scale) << "mm\" height=\""
       << detail::fmt_num(scene.height * scale) << "mm\" viewBox=\"0 0 "
       << detail::fmt_num(scene.width) << " " << detail::fmt_num(scene.height) << "\">\n";
    if (!scene.prims.empty()) {
        os << "<g stroke=\"black\" stroke-width=\""
           << detail::fmt_num(render_geometry::kDefaultStrokeMm) << "\" stroke-linecap=\"round\""
           << " font-family=\"" << detail::xml_escape(scene.font_family) << "\">\n";
        for (const Primitive& p : scene.prims)
            detail::write_primitive(os, p);
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace yqc
