#pragma once

#include <sstream>
#include <string>

#include "yqc/scene.hpp"
#include "yqc/svg.hpp"

namespace yqc {

namespace detail {

inline std::string tikz_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "\\&"; break;
        case '%': out += "\\%"; break;
        case '#': out += "\\#"; break;
        case '_': out += "\\_"; break;
        case '^': out += "\\^{}"; break;
        case '$': out += "\\$"; break;
        case '{': out += "\\{"; break;
        case '}': out += "\\}"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

inline void tikz_options(std::ostream& os, const Primitive& p, bool filled_shape) {
    std::string opts;
    auto push = [&opts](const std::string& o) {
        if (!opts.empty())
            opts += ", ";
        opts += o;
    };
    if (p.stroke.empty())
        push("draw=none");
    else if (p.stroke != "black")
        push("draw=" + p.stroke);
    if (p.stroke_width > 0)
        push("line width=" + fmt_num(p.stroke_width) + "mm");
    if (!p.dash.empty())
        push("dashed");
    if (filled_shape && !p.fill.empty())
        push("fill=" + p.fill);
    if (!opts.empty())
        os << "[" << opts << "]";
}

inline std::string tikz_run_text(const TextLine& line) {
    std::string out;
    for (const TextRun& run : line.runs) {
        std::string body = tikz_escape(run.text);
        switch (run.style) {
        case RunStyle::normal: out += body; break;
        case RunStyle::script: out += "\\textit{" + body + "}"; break;
        case RunStyle::subscript_: out += "\\textsubscript{" + body + "}"; break;
        case RunStyle::superscript_: out += "\\textsuperscript{" + body + "}"; break;
        }
    }
    return out;
}

} // namespace detail

/// Draws the same primitives as the SVG backend in a TikZ picture; the y axis
/// is flipped so coordinates match visually.
inline std::string emit_tikz(const Scene& scene) {
    using detail::fmt_num;
    std::ostringstream os;
    os << "\\begin{tikzpicture}[x=1mm, y=-1mm, line width="
       << fmt_num(render_geometry::kDefaultStrokeMm) << "mm]\n";
    for (const Primitive& p : scene.prims) {
        switch (p.kind) {
        case Primitive::Kind::line:
            os << "\\draw";
            detail::tikz_options(os, p, false);
            os << " (" << fmt_num(p.pts[0].x) << ", " << fmt_num(p.pts[0].y) << ") -- ("
               << fmt_num(p.pts[1].x) << ", " << fmt_num(p.pts[1].y) << ");\n";
            break;
        case Primitive::Kind::polyline: {
            os << "\\draw";
            detail::tikz_options(os, p, false);
            for (std::size_t i = 0; i < p.pts.size(); ++i)
                os << (i ? " -- (" : " (") << fmt_num(p.pts[i].x) << ", " << fmt_num(p.pts[i].y)
                   << ")";
            os << ";\n";
            break;
        }
        case Primitive::Kind::rect:
            os << "\\draw";
            detail::tikz_options(os, p, true);
            os << " (" << fmt_num(p.x) << ", " << fmt_num(p.y) << ") rectangle ("
               << fmt_num(p.x + p.w) << ", " << fmt_num(p.y + p.h) << ");\n";
            break;
        case Primitive::Kind::circle:
            os << "\\draw";
            detail::tikz_options(os, p, true);
            os << " (" << fmt_num(p.cx) << ", " << fmt_num(p.cy) << ") circle [radius="
               << fmt_num(p.rx) << "];\n";
            break;
        case Primitive::Kind::arc: {
            // Angles are measured in the y-down frame; TikZ with y=-1mm sees
            // the same picture with negated angles.
            constexpr double kPi = 3.14159265358979323846;
            double a0 = p.angle0 * kPi / 180.0;
            double x0 = p.cx + p.rx * std::cos(a0), y0 = p.cy + p.ry * std::sin(a0);
            os << "\\draw";
            detail::tikz_options(os, p, false);
            os << " (" << fmt_num(x0) << ", " << fmt_num(y0) << ") arc [start angle="
               << fmt_num(-p.angle0) << ", end angle=" << fmt_num(-p.angle1)
               << ", x radius=" << fmt_num(p.rx) << ", y radius=" << fmt_num(p.ry) << "];\n";
            break;
        }
        case Primitive::Kind::path: {
            os << "\\draw";
            detail::tikz_options(os, p, true);
            for (const PathCmd& c : p.cmds) {
                switch (c.op) {
                case 'M':
                    os << " (" << fmt_num(c.args[0]) << ", " << fmt_num(c.args[1]) << ")";
                    break;
                case 'L':
                    os << " -- (" << fmt_num(c.args[0]) << ", " << fmt_num(c.args[1]) << ")";
                    break;
                case 'C':
                    os << " .. controls (" << fmt_num(c.args[0]) << ", " << fmt_num(c.args[1])
                       << ") and (" << fmt_num(c.args[2]) << ", " << fmt_num(c.args[3]) << ") .. ("
                       << fmt_num(c.args[4]) << ", " << fmt_num(c.args[5]) << ")";
                    break;
                case 'Z': os << " -- cycle"; break;
                default: break;
                }
            }
            os << ";\n";
            break;
        }
        case Primitive::Kind::text: {
            const char* anchor = p.anchor == TextAnchor::start
                                     ? "west"
                                     : (p.anchor == TextAnchor::middle ? "center" : "east");
            double lh = render_geometry::kLineHeight * p.font_mm;
            for (std::size_t li = 0; li < p.text.lines.size(); ++li) {
                if (p.text.lines[li].runs.empty())
                    continue;
                os << "\\node[anchor=" << anchor << ", inner sep=0] at (" << fmt_num(p.x) << ", "
                   << fmt_num(p.y - 0.35 * p.font_mm + static_cast<double>(li) * lh) << ") {"
                   << detail::tikz_run_text(p.text.lines[li]) << "};\n";
            }
            break;
        }
        }
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

} // namespace yqc
