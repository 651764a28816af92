#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "yqc/gates.hpp"
#include "yqc/layout.hpp"
#include "yqc/parser.hpp"
#include "yqc/qasm.hpp"
#include "yqc/render.hpp"

namespace yqc {

enum class Frontend { auto_detect, yquant, qasm };

/// A group source: shared register prelude plus member circuits rendered side
/// by side, split on `=== registers ===` / `=== circuit ===` / `=== equals ===`
/// marker lines.
struct GroupSections {
    struct Section {
        std::string text;
        std::size_t byte_offset = 0;
        int line = 1;
    };
    Section registers;
    std::vector<Section> circuits;
    std::vector<std::string> separators; // size = circuits - 1
};

inline bool is_group_source(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::size_t len = (eol == std::string_view::npos ? text.size() : eol) - pos;
        std::string line = detail::trim(text.substr(pos, len));
        if (line.size() >= 6 && line.compare(0, 3, "===") == 0 &&
            line.compare(line.size() - 3, 3, "===") == 0)
            return true;
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    return false;
}

inline GroupSections split_group_source(std::string_view text) {
    GroupSections group;
    GroupSections::Section* current = nullptr;
    std::optional<std::string> pending_separator;
    bool seen_circuit = false;

    std::size_t pos = 0;
    int line_no = 1;
    auto open_section = [&](GroupSections::Section* section, std::size_t offset, int line) {
        current = section;
        current->byte_offset = offset;
        current->line = line;
    };
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::size_t len = (eol == std::string_view::npos ? text.size() : eol) - pos;
        std::string_view raw = text.substr(pos, len);
        std::string line = detail::trim(raw);
        bool is_marker = line.size() >= 6 && line.compare(0, 3, "===") == 0 &&
                         line.compare(line.size() - 3, 3, "===") == 0;
        std::size_t next = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (is_marker) {
            std::string inner = detail::trim(line.substr(3, line.size() - 6));
            SourceSpan span{pos, pos + raw.size(), line_no, 1};
            if (inner == "registers") {
                if (seen_circuit)
                    fail("'=== registers ===' must come before the first circuit", span);
                open_section(&group.registers, next, line_no + 1);
            } else if (inner == "circuit") {
                if (seen_circuit)
                    group.separators.push_back(pending_separator.value_or("="));
                pending_separator.reset();
                seen_circuit = true;
                group.circuits.emplace_back();
                open_section(&group.circuits.back(), next, line_no + 1);
            } else if (inner == "equals" || inner.rfind("equals ", 0) == 0) {
                if (!seen_circuit)
                    fail("'=== equals ===' needs a preceding circuit", span);
                std::string sep = detail::trim(inner.substr(6));
                pending_separator = sep.empty() ? "=" : sep;
                current = nullptr;
            } else {
                fail("unknown group section '" + inner + "'", span);
            }
        } else if (current) {
            current->text.append(raw);
            current->text.push_back('\n');
        } else if (!line.empty() && line[0] != '%') {
            fail("text outside of group sections",
                 SourceSpan{pos, pos + raw.size(), line_no, 1});
        }
        if (eol == std::string_view::npos)
            break;
        pos = next;
        ++line_no;
    }
    if (group.circuits.empty())
        fail("group source contains no '=== circuit ===' section");
    return group;
}

/// Elaborates and lays out each member circuit against a fresh copy of the
/// shared register prelude, then composes them with separator text.
inline Scene render_group(const Program& shared_registers, const std::vector<Program>& circuits,
                          const std::vector<std::string>& separators, const LayoutConfig& cfg,
                          DiagnosticSink& sink, bool star = false,
                          std::vector<Layout>* layouts_out = nullptr) {
    std::vector<Layout> layouts;
    for (const Program& circuit : circuits) {
        Program member;
        member.statements = shared_registers.statements;
        member.statements.insert(member.statements.end(), circuit.statements.begin(),
                                 circuit.statements.end());
        Elaboration elab = elaborate(member, cfg, sink, star);
        layouts.push_back(place(std::move(elab), cfg, &sink));
    }
    Scene scene = compose_group(layouts, separators, cfg, &sink);
    if (layouts_out)
        *layouts_out = std::move(layouts);
    return scene;
}

struct CompileResult {
    bool is_group = false;
    std::vector<Layout> layouts; // one per circuit
    Scene scene;
};

/// Full pipeline for one source text: parse, elaborate, lay out, build scene.
inline CompileResult compile_source(std::string_view text, Frontend frontend,
                                    const LayoutConfig& cfg, DiagnosticSink& sink,
                                    bool star = false) {
    if (frontend == Frontend::auto_detect)
        fail("frontend must be resolved before compiling");
    CompileResult result;
    if (frontend == Frontend::qasm) {
        Program program = parse_qasm(text);
        Elaboration elab = elaborate(program, cfg, sink, star);
        result.layouts.push_back(place(std::move(elab), cfg, &sink));
        result.scene = build_scene(result.layouts[0], &sink);
        return result;
    }
    if (is_group_source(text)) {
        GroupSections group = split_group_source(text);
        Program registers =
            parse_program_at(group.registers.text, group.registers.byte_offset,
                             group.registers.line);
        std::vector<Program> circuits;
        for (const GroupSections::Section& section : group.circuits)
            circuits.push_back(parse_program_at(section.text, section.byte_offset, section.line));
        result.is_group = true;
        result.scene = render_group(registers, circuits, group.separators, cfg, sink, star,
                                    &result.layouts);
        return result;
    }
    Program program = parse_program(text);
    Elaboration elab = elaborate(program, cfg, sink, star);
    result.layouts.push_back(place(std::move(elab), cfg, &sink));
    result.scene = build_scene(result.layouts[0], &sink);
    return result;
}

/// .yq selects the yquant frontend, .qasm the qasm dialect.
inline Frontend frontend_from_path(std::string_view path) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".yq") || ends_with(".yquant"))
        return Frontend::yquant;
    if (ends_with(".qasm"))
        return Frontend::qasm;
    return Frontend::auto_detect;
}

} // namespace yqc
