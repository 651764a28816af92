#pragma once

// Straightforward greedy cursor simulator used to cross-check the layout
// engine. Deliberately written as a single flat loop over instances with its
// own width table.

#include <algorithm>
#include <string>
#include <vector>

#include "yqc/gates.hpp"
#include "yqc/render_text.hpp"

namespace yqc_test {

struct OraclePlacement {
    double x_center = 0;
    double half_width = 0;
};

inline double oracle_text_width(const yqc::GateInstance& inst, const yqc::LayoutConfig& cfg) {
    std::string raw;
    if (inst.value)
        raw = inst.value->raw;
    else if (*inst.kind->fixed_letter)
        raw = inst.kind->fixed_letter;
    else
        return 0.0;
    yqc::RenderedText rt = yqc::render_value_text(raw);
    double w = 0;
    for (const yqc::TextLine& line : rt.lines)
        w = std::max(w, static_cast<double>(line.codepoints()) * cfg.char_width_factor *
                            cfg.font_size);
    return w;
}

inline double oracle_width(const yqc::GateInstance& inst, const yqc::LayoutConfig& cfg) {
    std::string name = inst.kind->name;
    if (name == "barrier")
        return 0.0;
    if (name == "measure")
        return cfg.measure_width;
    if (name == "dmeter")
        return std::max(cfg.min_op_width, oracle_text_width(inst, cfg) + 2.0 * cfg.text_padding);
    if (name == "not" || name == "swap" || name == "xx" || name == "slash")
        return 2.0 * cfg.oplus_radius;
    if (name == "zz" || name == "correlate")
        return 2.0 * cfg.dot_radius;
    if (name == "phase")
        return 2.0 * cfg.dot_radius + oracle_text_width(inst, cfg);
    if (name == "inspect")
        return oracle_text_width(inst, cfg);
    return std::max(cfg.min_op_width, oracle_text_width(inst, cfg) + 2.0 * cfg.text_padding);
}

inline std::vector<OraclePlacement> oracle_place(const std::vector<yqc::GateInstance>& instances,
                                                 int wires, const yqc::LayoutConfig& cfg,
                                                 std::vector<double>* cursors_out = nullptr) {
    std::vector<double> cursors(static_cast<std::size_t>(wires), 0.0);
    std::vector<OraclePlacement> placements;
    for (const yqc::GateInstance& inst : instances) {
        std::string name = inst.kind->name;
        OraclePlacement p;
        if (inst.kind->glyph == yqc::GateGlyph::pseudo) {
            std::vector<int> touched;
            for (const yqc::WireGroup& g : inst.targets)
                for (int w : g.wires)
                    touched.push_back(w);
            if (name == "align") {
                double m = cursors[static_cast<std::size_t>(touched[0])];
                for (int w : touched)
                    m = std::max(m, cursors[static_cast<std::size_t>(w)]);
                for (int w : touched)
                    cursors[static_cast<std::size_t>(w)] = m;
                p.x_center = m;
            } else if (name == "hspace" || name == "nop") {
                double before = cursors[static_cast<std::size_t>(touched[0])];
                cursors[static_cast<std::size_t>(touched[0])] = before + inst.hspace_mm;
                p.x_center = before + inst.hspace_mm / 2.0;
                p.half_width = inst.hspace_mm / 2.0;
            } else {
                p.x_center = cursors[static_cast<std::size_t>(touched[0])];
            }
            placements.push_back(p);
            continue;
        }
        int lo = inst.wire_lo(), hi = inst.wire_hi();
        double width = oracle_width(inst, cfg);
        double left = 0;
        for (int w = lo; w <= hi; ++w)
            left = std::max(left, cursors[static_cast<std::size_t>(w)]);
        left += cfg.column_gap;
        for (int w = lo; w <= hi; ++w)
            cursors[static_cast<std::size_t>(w)] = left + width;
        p.x_center = left + width / 2.0;
        p.half_width = width / 2.0;
        placements.push_back(p);
    }
    if (cursors_out)
        *cursors_out = cursors;
    return placements;
}

} // namespace yqc_test
