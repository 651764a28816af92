#include <doctest.h>

#include "yqc/ir_json.hpp"
#include "yqc/parser.hpp"
#include "yqc/pipeline.hpp"
#include "yqc/svg.hpp"
#include "yqc/tikz.hpp"

#include "test_support.hpp"

using namespace yqc;

namespace {

Layout lay_text(const std::string& text, LayoutConfig cfg = {}) {
    DiagnosticSink sink;
    return place(elaborate(parse_program(text), cfg, sink), cfg, &sink);
}

int count_cls(const Scene& scene, std::string_view cls) {
    int n = 0;
    for (const Primitive& p : scene.prims)
        if (p.cls == cls)
            ++n;
    return n;
}

} // namespace

TEST_CASE("a measure glyph is one rect, one arc, one needle") {
    Scene scene = build_scene(lay_text("qubit a;\nmeasure a;"));
    CHECK(count_cls(scene, "measure") == 1);
    CHECK(count_cls(scene, "measure-arc") == 1);
    CHECK(count_cls(scene, "measure-needle") == 1);
    // quantum before, classical (two strokes) after
    CHECK(count_cls(scene, "wire") == 3);
}

TEST_CASE("nobit wires draw nothing") {
    Scene scene = build_scene(lay_text("nobit a[2];\nqubit b;"));
    CHECK(count_cls(scene, "wire") == 1);
}

TEST_CASE("wire stroke counts follow the type map") {
    Scene scene = build_scene(lay_text("qubits bundle;\ncbit c;"));
    CHECK(count_cls(scene, "wire") == 5); // triple + double
}

TEST_CASE("quoted attribute draws a label above the gate") {
    Scene scene = build_scene(lay_text("qubit q[2];\n[\"Recovery\"]\nbox {$\\mathcal R$} (q);"));
    CHECK(count_cls(scene, "gate-box") == 1);
    CHECK(count_cls(scene, "gate-label") == 1);
}

TEST_CASE("teleportation scene golden element counts") {
    Scene scene = build_scene(lay_text(yqc_test::read_corpus("teleport.yq")));
    CHECK(count_cls(scene, "gate-box") == 4);  // h, h, z, x
    CHECK(count_cls(scene, "oplus") == 2);     // two cnot targets
    CHECK(count_cls(scene, "measure") == 2);
    CHECK(count_cls(scene, "connector") == 4); // 2 cnot + controlled z and x
    CHECK(count_cls(scene, "control") == 4);
    CHECK(count_cls(scene, "label") == 3);
    // q0, q1 turn classical after measure: 3 + 3 + 1 wire strokes
    CHECK(count_cls(scene, "wire") == 7);
}

TEST_CASE("emit_svg is deterministic and well-formed") {
    Layout lay = lay_text(yqc_test::read_corpus("phase_estimation.yq"));
    Scene scene = build_scene(lay);
    std::string a = emit_svg(scene);
    std::string b = emit_svg(scene);
    CHECK(a == b);
    CHECK(a.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(a.rfind("</svg>\n") == a.size() - 7);
    // rebuilt from scratch it is still byte-identical
    std::string c = emit_svg(build_scene(lay_text(yqc_test::read_corpus("phase_estimation.yq"))));
    CHECK(a == c);
}

TEST_CASE("empty scene is a bare svg document") {
    Scene scene = build_scene(lay_text(""));
    std::string svg = emit_svg(scene);
    CHECK(svg.find("<g") == std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("element names become svg ids exactly once") {
    Scene scene = build_scene(lay_text("qubit a[2];\n[name=gate1]\nswap (a);\n[name=gate2]\nh a[0];"));
    std::string svg = emit_svg(scene);
    CHECK(svg.find("id=\"gate1\"") != std::string::npos);
    CHECK(svg.find("id=\"gate2\"") != std::string::npos);
    CHECK(svg.find("id=\"gate1\"") == svg.rfind("id=\"gate1\""));

    // duplicate names are refused
    Scene dup = build_scene(lay_text("qubit a[2];\n[name=g]\nh a[0];\n[name=g]\nh a[1];"));
    CHECK_THROWS_AS((void)emit_svg(dup), CompileError);
}

TEST_CASE("scene coordinates never go negative") {
    Scene scene = build_scene(lay_text(yqc_test::read_corpus("ft_correction.yq")));
    for (const Primitive& p : scene.prims) {
        for (const ScenePoint& pt : p.pts) {
            CHECK(pt.x >= 0);
            CHECK(pt.y >= 0);
        }
        if (p.kind == Primitive::Kind::rect) {
            CHECK(p.x >= 0);
            CHECK(p.y >= 0);
        }
        if (p.kind == Primitive::Kind::circle) {
            CHECK(p.cx - p.rx >= 0);
            CHECK(p.cy - p.ry >= 0);
        }
    }
    CHECK(scene.width > 0);
    CHECK(scene.height > 0);
}

TEST_CASE("fill attribute colors a box") {
    Scene scene = build_scene(lay_text("qubit a;\n[fill=yellow]\nbox {v} a;"));
    bool found = false;
    for (const Primitive& p : scene.prims)
        if (p.cls == "gate-box" && p.fill == "yellow")
            found = true;
    CHECK(found);
}

TEST_CASE("type change stroke counts for the FT listing") {
    Layout lay = lay_text(yqc_test::read_corpus("ft_correction.yq"));
    // wire s0 is index 3: quantum, classical, gone, quantum again, classical
    const WireTimeline& t = lay.timelines[3];
    REQUIRE(t.segments.size() == 5);
    CHECK(t.segments[0].type == RegisterType::qubit);
    CHECK(t.segments[1].type == RegisterType::cbit);
    CHECK(t.segments[2].type == RegisterType::nobit);
    CHECK(t.segments[3].type == RegisterType::qubit);
    CHECK(t.segments[4].type == RegisterType::cbit);
}

TEST_CASE("tikz output mirrors the scene one command per drawn element") {
    Layout lay = lay_text(yqc_test::read_corpus("teleport.yq"));
    Scene scene = build_scene(lay);
    std::string tikz = emit_tikz(scene);
    CHECK(emit_tikz(scene) == tikz);
    std::size_t commands = 0;
    for (std::size_t pos = 0; (pos = tikz.find('\n', pos)) != std::string::npos; ++pos)
        ++commands;
    commands -= 2; // begin/end lines
    std::size_t expected = 0;
    for (const Primitive& p : scene.prims) {
        if (p.kind == Primitive::Kind::text) {
            for (const TextLine& l : p.text.lines)
                if (!l.runs.empty())
                    ++expected;
        } else {
            ++expected;
        }
    }
    CHECK(commands == expected);
    CHECK(tikz.rfind("\\end{tikzpicture}\n") != std::string::npos);
}

TEST_CASE("empty scene gives an empty picture") {
    std::string tikz = emit_tikz(build_scene(lay_text("")));
    CHECK(tikz == "\\begin{tikzpicture}[x=1mm, y=-1mm, line width=0.2mm]\n\\end{tikzpicture}\n");
}

TEST_CASE("one filled dot maps to one circle command") {
    std::string tikz = emit_tikz(build_scene(lay_text("qubit a;\nphase a;")));
    CHECK(tikz.find("circle [radius=0.9]") != std::string::npos);
    CHECK(tikz.find("fill=black") != std::string::npos);
}

TEST_CASE("group scenes put separators between members") {
    DiagnosticSink sink;
    LayoutConfig cfg;
    CompileResult res =
        compile_source(yqc_test::read_corpus("group.yq"), Frontend::yquant, cfg, sink);
    CHECK(res.is_group);
    REQUIRE(res.layouts.size() == 2);
    CHECK(res.layouts[0].instances.size() == 5); // h -, cnot, h -
    CHECK(res.layouts[1].instances.size() == 1);
    CHECK(count_cls(res.scene, "separator") == 1);
    // the separator sits between the two circuits
    double sep_x = 0, first_end = 0, second_start = 1e9;
    for (const Primitive& p : res.scene.prims) {
        if (p.cls == "separator")
            sep_x = p.x;
        if (p.cls == "wire") {
            first_end = std::max(first_end, p.pts[0].x);
            second_start = std::min(second_start, p.pts[1].x);
        }
    }
    CHECK(sep_x > 0);

    // a single circuit with no separators renders like the plain pipeline
    std::vector<Layout> members;
    Program regs = parse_program("qubit {} q[2];");
    Program only = parse_program("cnot q[0] | q[1];");
    Scene one = render_group(regs, {only}, {}, cfg, sink);
    CHECK(count_cls(one, "separator") == 0);
    std::string direct =
        emit_svg(build_scene(lay_text("qubit {} q[2];\ncnot q[0] | q[1];")));
    CHECK(emit_svg(one) == direct);
}

TEST_CASE("three member group uses two separators") {
    DiagnosticSink sink;
    LayoutConfig cfg;
    Program regs = parse_program("qubit {} q[2];");
    Program m = parse_program("h -;");
    Scene scene = render_group(regs, {m, m, m}, {"=", "="}, cfg, sink);
    CHECK(count_cls(scene, "separator") == 2);
}

TEST_CASE("ir dump is stable and counts the teleportation pieces") {
    Layout lay = lay_text(yqc_test::read_corpus("teleport.yq"));
    std::string ir = dump_ir(lay);
    CHECK(ir == dump_ir(lay));
    CHECK(ir.find("\"version\": 1") != std::string::npos);
    auto j = nlohmann::json::parse(ir);
    CHECK(j["registers"].size() == 3);
    CHECK(j["instances"].size() == 8);
    CHECK(j["placements"].size() == 8);

    std::string empty_ir = dump_ir(lay_text(""));
    auto je = nlohmann::json::parse(empty_ir);
    CHECK(je["registers"].empty());
    CHECK(je["instances"].empty());
}

TEST_CASE("symbol glyph inventory") {
    Scene scene = build_scene(lay_text("qubit a[2];\nswap (a);\nxx (a);\nzz (a);\ncorrelate (a);\n"
                                       "phase {$t$} a[0];\nslash a[1];\nbarrier a;"));
    CHECK(count_cls(scene, "swap") == 4); // two crossing lines per end
    CHECK(count_cls(scene, "xx") == 4);
    CHECK(count_cls(scene, "zz") == 2);
    CHECK(count_cls(scene, "correlate") == 2);
    CHECK(count_cls(scene, "correlate-zigzag") == 1);
    CHECK(count_cls(scene, "phase") == 1);
    CHECK(count_cls(scene, "phase-text") == 1);
    CHECK(count_cls(scene, "slash") == 1);
    CHECK(count_cls(scene, "barrier") == 1);
}

TEST_CASE("barrier styling flags") {
    Scene dashed = build_scene(lay_text("qubit a;\nbarrier a;"));
    bool is_dashed = false;
    for (const Primitive& p : dashed.prims)
        if (p.cls == "barrier")
            is_dashed = !p.dash.empty();
    CHECK(is_dashed);

    Scene solid = build_scene(lay_text("qubit a;\n[solid]\nbarrier a;"));
    for (const Primitive& p : solid.prims)
        if (p.cls == "barrier")
            CHECK(p.dash.empty());

    Scene hidden = build_scene(lay_text("qubit a;\n[invisible]\nbarrier a;"));
    CHECK(count_cls(hidden, "barrier") == 0);
}

TEST_CASE("inspect renders bare text sized to its value") {
    Layout lay = lay_text("qubit a;\ninspect {$\\ket0$} a;");
    Scene scene = build_scene(lay);
    CHECK(count_cls(scene, "inspect") == 1);
    CHECK(count_cls(scene, "gate-box") == 0);
    // cursor advances by exactly the text width
    CHECK(lay.placements[0].half_width * 2.0 ==
          doctest::Approx(3.0 * lay.cfg.char_width_factor * lay.cfg.font_size));
}

TEST_CASE("joint output gets a brace, scalar output plain text") {
    Scene joint = build_scene(lay_text("qubit a[2];\nh a;\noutput {$\\ket\\phi$} (a);"));
    CHECK(count_cls(joint, "brace") == 1);
    CHECK(count_cls(joint, "output") == 1);
    Scene scalar = build_scene(lay_text("qubit a;\nh a;\noutput {$1$} a;"));
    CHECK(count_cls(scalar, "brace") == 0);
    CHECK(count_cls(scalar, "output") == 1);
}

TEST_CASE("joint init draws a brace next to the label") {
    Scene scene = build_scene(lay_text("qubit a[2];\ndiscard a;\ninit {$\\ket{00}$} (a);"));
    CHECK(count_cls(scene, "brace") == 1);
    CHECK(count_cls(scene, "init") == 1);
}

TEST_CASE("settype to a bundle draws three strokes") {
    Layout lay = lay_text("qubit a;\nh a;\nsettype {qubits} a;\nhspace {4mm} a;");
    Scene scene = build_scene(lay);
    REQUIRE(lay.timelines[0].segments.size() == 2);
    CHECK(lay.timelines[0].segments[1].type == RegisterType::qubits);
    CHECK(count_cls(scene, "wire") == 4); // one single + three bundle strokes
}

TEST_CASE("subcircuits can be controlled") {
    Layout lay = lay_text("qubit a;\nqubit b;\nsubcircuit { qubit q; h q; } (a) | b;");
    Scene scene = build_scene(lay);
    CHECK(count_cls(scene, "subcircuit-box") == 1);
    CHECK(count_cls(scene, "control") == 1);
    CHECK(count_cls(scene, "connector") == 1);
}

TEST_CASE("stroke counts match the timeline type everywhere") {
    for (const char* name : {"teleport.yq", "phase_estimation.yq", "ft_correction.yq",
                             "register_usage.yq"}) {
        CAPTURE(name);
        Layout lay = lay_text(yqc_test::read_corpus(name));
        Scene scene = build_scene(lay);
        for (int w = 0; w < lay.wire_count; ++w) {
            for (const WireSegment& seg : lay.timelines[w].segments) {
                double probe_x = scene.origin_x + seg.x0 + 0.2;
                double y = scene.origin_y + lay.wire_y(w);
                int strokes = 0;
                for (const Primitive& p : scene.prims)
                    if (p.cls == "wire" && p.kind == Primitive::Kind::line &&
                        p.pts[0].x <= probe_x && probe_x <= p.pts[1].x &&
                        std::abs(p.pts[0].y - y) <= 0.8)
                        ++strokes;
                std::size_t expected = 0;
                switch (seg.type) {
                case RegisterType::qubit: expected = 1; break;
                case RegisterType::cbit: expected = 2; break;
                case RegisterType::qubits: expected = 3; break;
                case RegisterType::nobit: expected = 0; break;
                }
                CHECK(strokes == static_cast<int>(expected));
            }
        }
    }
}
