// yqc: compiles yquant/qasm circuit descriptions to SVG, TikZ, or IR JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "yqc/yqc.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            yqc::fail("cannot read input file '" + path + "'");
        buf << in.rdbuf();
    }
    std::string text = buf.str();
    // Normalize line endings so spans and output are platform-independent.
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
            continue;
        out.push_back(text[i]);
    }
    return out;
}

// Whole-file or nothing: writes to a temporary and renames over the target.
void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            yqc::fail("cannot write output file '" + tmp + "'");
        out << data;
        if (!out)
            yqc::fail("failed writing output file '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        yqc::fail("cannot move output into place at '" + path + "'");
    }
}

void print_diagnostic(const std::string& file, const yqc::Diagnostic& diag) {
    const char* severity = diag.severity == yqc::Severity::warning ? "warning" : "error";
    std::cerr << file << ":" << diag.span.line << ":" << diag.span.column << ": " << severity
              << ": " << diag.message << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"yqc - quantum circuit diagram compiler"};
    app.get_formatter()->column_width(28);

    std::string input = "-";
    std::string output = "-";
    std::string frontend_name = "auto";
    std::string format = "svg";
    std::string nop_width;
    double scale = 1.0;
    bool strict = false;
    bool star = false;

    app.add_option("input", input, "input file (.yq or .qasm), '-' for stdin");
    app.add_option("-o,--output", output, "output file, '-' for stdout (default)");
    app.add_option("--frontend", frontend_name, "input language: auto, yquant, qasm")
        ->check(CLI::IsMember({"auto", "yquant", "qasm"}));
    app.add_option("-f,--format", format, "output format: svg, tikz, ir_json")
        ->check(CLI::IsMember({"svg", "tikz", "ir_json"}));
    app.add_option("--nop-width", nop_width, "width reserved by the qasm nop gate (e.g. 6mm)");
    app.add_option("--scale", scale, "output scale factor")->check(CLI::PositiveNumber);
    app.add_flag("--strict", strict, "treat warnings as errors");
    app.add_flag("--star", star, "declare unknown registers on first use");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string display_name = input == "-" ? "<stdin>" : input;
    yqc::DiagnosticSink sink;
    try {
        yqc::LayoutConfig cfg;
        yqc::load_env_config(cfg, sink);
        if (!nop_width.empty())
            cfg.nop_width = yqc::parse_length(nop_width);

        yqc::Frontend frontend = yqc::Frontend::auto_detect;
        if (frontend_name == "yquant")
            frontend = yqc::Frontend::yquant;
        else if (frontend_name == "qasm")
            frontend = yqc::Frontend::qasm;
        else
            frontend = yqc::frontend_from_path(input);
        if (frontend == yqc::Frontend::auto_detect) {
            std::cerr << "yqc: cannot infer the frontend for '" << display_name
                      << "'; pass --frontend yquant or --frontend qasm\n";
            return 2;
        }

        std::string text = read_input(input);
        yqc::CompileResult result = yqc::compile_source(text, frontend, cfg, sink, star);

        for (const yqc::Diagnostic& diag : sink.entries())
            print_diagnostic(display_name, diag);
        if (strict && !sink.empty()) {
            std::cerr << display_name << ": error: warnings treated as errors\n";
            return 1;
        }

        std::string data;
        if (format == "svg") {
            data = yqc::emit_svg(result.scene, scale);
        } else if (format == "tikz") {
            data = yqc::emit_tikz(result.scene);
        } else {
            data = result.is_group ? yqc::dump_ir_group(result.layouts)
                                   : yqc::dump_ir(result.layouts[0]);
        }
        write_output(output, data);
        return 0;
    } catch (const yqc::CompileError& e) {
        print_diagnostic(display_name, e.diagnostic());
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "yqc: error: " << e.what() << "\n";
        return 1;
    }
}
