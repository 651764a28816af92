#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "yqc/attributes.hpp"
#include "yqc/diagnostics.hpp"

namespace yqc {

constexpr double kMmPerPoint = 25.4 / 72.0;

/// All geometry in millimeters. min_op_width is chosen so that a default
/// single-letter box column (column_gap + box width) equals measure_width.
struct LayoutConfig {
    double column_gap = 1.5;
    double wire_gap = 6.0;
    double min_op_width = 5.5;
    double measure_width = 7.0;
    double dot_radius = 0.9;
    double oplus_radius = 1.6;
    double text_padding = 1.0;
    double char_width_factor = 0.6;
    double font_size = 10.0 * kMmPerPoint;
    std::optional<double> nop_width; // unset: follows min_op_width
    std::string font_family = "Helvetica, Arial, sans-serif";

    double nop_width_or_default() const { return nop_width.value_or(min_op_width); }
};

/// Parses "5mm", "3.5pt", or a bare number (millimeters).
inline double parse_length(const std::string& text, SourceSpan span = {}) {
    std::string t = detail::trim(text);
    double factor = 1.0;
    if (t.size() > 2 && t.compare(t.size() - 2, 2, "mm") == 0) {
        t = detail::trim(t.substr(0, t.size() - 2));
    } else if (t.size() > 2 && t.compare(t.size() - 2, 2, "pt") == 0) {
        t = detail::trim(t.substr(0, t.size() - 2));
        factor = kMmPerPoint;
    }
    try {
        std::size_t used = 0;
        double value = std::stod(t, &used);
        if (used != t.size())
            fail("bad length '" + text + "'", span);
        return value * factor;
    } catch (const std::logic_error&) {
        fail("bad length '" + text + "'", span);
    }
}

/// key = value lines; '#' comments. Lengths take mm or pt suffixes.
inline void apply_config_line(LayoutConfig& cfg, const std::string& key, const std::string& value,
                              DiagnosticSink& sink) {
    auto set_length = [&](double& field) {
        double parsed = parse_length(value);
        if (parsed <= 0)
            fail("config key '" + key + "' must be positive");
        field = parsed;
    };
    if (key == "column_gap")
        set_length(cfg.column_gap);
    else if (key == "wire_gap")
        set_length(cfg.wire_gap);
    else if (key == "min_op_width")
        set_length(cfg.min_op_width);
    else if (key == "measure_width")
        set_length(cfg.measure_width);
    else if (key == "dot_radius")
        set_length(cfg.dot_radius);
    else if (key == "oplus_radius")
        set_length(cfg.oplus_radius);
    else if (key == "text_padding")
        set_length(cfg.text_padding);
    else if (key == "font_size")
        set_length(cfg.font_size);
    else if (key == "nop_width") {
        double parsed = parse_length(value);
        if (parsed < 0)
            fail("config key 'nop_width' must not be negative");
        cfg.nop_width = parsed;
    } else if (key == "char_width_factor") {
        double parsed = parse_length(value); // unitless ratio
        if (parsed <= 0)
            fail("config key 'char_width_factor' must be positive");
        cfg.char_width_factor = parsed;
    }
    else if (key == "font_family")
        cfg.font_family = value;
    else
        sink.warn("unknown config key '" + key + "'");
}

inline void load_config_text(LayoutConfig& cfg, const std::string& text, DiagnosticSink& sink) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::string entry = detail::trim(line);
        if (entry.empty())
            continue;
        std::size_t eq = entry.find('=');
        if (eq == std::string::npos) {
            sink.warn("config line without '=': " + entry);
            continue;
        }
        apply_config_line(cfg, detail::trim(entry.substr(0, eq)), detail::trim(entry.substr(eq + 1)),
                          sink);
    }
}

inline void load_config_file(LayoutConfig& cfg, const std::string& path, DiagnosticSink& sink) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    load_config_text(cfg, buf.str(), sink);
}

/// Honors the YQC_CONFIG environment variable when set and non-empty.
inline void load_env_config(LayoutConfig& cfg, DiagnosticSink& sink) {
    const char* path = std::getenv("YQC_CONFIG");
    if (path && *path)
        load_config_file(cfg, path, sink);
}

} // namespace yqc
