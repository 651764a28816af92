#include <doctest.h>

#include <random>

#include "yqc/parser.hpp"
#include "yqc/pretty_print.hpp"

#include "test_support.hpp"

using namespace yqc;

TEST_CASE("controlled gate statement") {
    Program p = parse_program("cnot q[2] | q[1];");
    REQUIRE(p.statements.size() == 1);
    const Statement& s = p.statements[0];
    CHECK(s.kind == StatementKind::gate);
    CHECK(s.name == "cnot");
    REQUIRE(s.targets.size() == 1);
    CHECK(s.targets[0].items[0].start_name == "q");
    CHECK(s.targets[0].items[0].start_index->entries[0].lo == 2);
    REQUIRE(s.controls.size() == 1);
    CHECK(s.controls[0].items[0].start_index->entries[0].lo == 1);
    CHECK(s.neg_controls.empty());
}

TEST_CASE("declaration with label and length") {
    Program p = parse_program("qubit {$\\ket{j_{\\idx}} = \\ket0$} j[3];");
    REQUIRE(p.statements.size() == 1);
    const Statement& s = p.statements[0];
    CHECK(s.kind == StatementKind::declaration);
    CHECK(s.name == "qubit");
    CHECK(s.decl_name == "j");
    CHECK(s.decl_length == 3);
    CHECK(s.value->raw == "$\\ket{j_{\\idx}} = \\ket0$");
}

TEST_CASE("joint target with several controls") {
    Program p = parse_program("box {$\\mathcal R$} (q) | s, c;");
    const Statement& s = p.statements[0];
    CHECK(s.name == "box");
    REQUIRE(s.targets.size() == 1);
    CHECK(s.targets[0].joint_outer);
    CHECK(s.controls.size() == 2);
}

TEST_CASE("gate names are case-insensitive, register names are not") {
    Program upper = parse_program("H Q[0];");
    CHECK(upper.statements[0].name == "h");
    CHECK(upper.statements[0].targets[0].items[0].start_name == "Q");
}

TEST_CASE("multiline value splits on backslash pairs") {
    Program p = parse_program("box {Process\\\\Syndrome} (s);");
    const ValueText& v = *p.statements[0].value;
    CHECK(v.raw == "Process\\\\Syndrome");
    REQUIRE(v.lines.size() == 2);
    CHECK(v.lines[0] == "Process");
    CHECK(v.lines[1] == "Syndrome");
}

TEST_CASE("open ranges and index lists parse") {
    Program p = parse_program("box {x} a[1, 3-6], -a[2], a[5]-, (a[(0-1)]), -;");
    const Statement& s = p.statements[0];
    REQUIRE(s.targets.size() == 5);
    CHECK(s.targets[0].items[0].start_index->entries.size() == 2);
    CHECK(s.targets[0].items[0].start_index->entries[1].is_range);
    CHECK_FALSE(s.targets[1].items[0].start_name.has_value());
    CHECK(s.targets[1].items[0].end_name == "a");
    CHECK(s.targets[2].items[0].start_name == "a");
    CHECK_FALSE(s.targets[2].items[0].end_name.has_value());
    CHECK(s.targets[3].joint_outer);
    CHECK(s.targets[3].items[0].start_index->joint_inner);
    CHECK(s.targets[4].items[0].is_range_to);
    CHECK_FALSE(s.targets[4].items[0].start_name.has_value());
    CHECK_FALSE(s.targets[4].items[0].end_name.has_value());
}

TEST_CASE("subcircuit bodies parse recursively with outer spans") {
    std::string src = yqc_test::read_corpus("subcircuit.yq");
    Program p = parse_program(src);
    REQUIRE(p.statements.size() == 5);
    const Statement& sub = p.statements[2];
    CHECK(sub.name == "subcircuit");
    REQUIRE(sub.sub_program);
    REQUIRE(sub.sub_program->statements.size() == 9);
    int decls = 0, cnots = 0, dmeters = 0;
    for (const Statement& s : sub.sub_program->statements) {
        if (s.kind == StatementKind::declaration)
            ++decls;
        else if (s.name == "cnot")
            ++cnots;
        else if (s.name == "dmeter")
            ++dmeters;
    }
    CHECK(decls == 2);
    CHECK(cnots == 6);
    CHECK(dmeters == 1);
    // Inner statements carry spans inside the enclosing file.
    CHECK(sub.sub_program->statements[0].span.line == 6);
    // The [out] attribute lands on the inner syndrome declaration.
    CHECK(sub.sub_program->statements[1].attrs.size() == 1);
    CHECK(sub.sub_program->statements[1].attrs[0].key == "out");
}

TEST_CASE("empty subcircuit body") {
    Program p = parse_program("subcircuit {} (a);");
    REQUIRE(p.statements[0].sub_program);
    CHECK(p.statements[0].sub_program->statements.empty());
}

TEST_CASE("parse_subcircuit_value parses a blob body") {
    Program p = parse_subcircuit_value(ValueText::from_raw("qubit {} a; h a;"));
    REQUIRE(p.statements.size() == 2);
    CHECK(p.statements[0].kind == StatementKind::declaration);
    CHECK(p.statements[1].name == "h");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS((void)parse_program("h q[0]"), CompileError); // missing semicolon
    CHECK_THROWS_AS((void)parse_program("h;"), CompileError);     // no target
    CHECK_THROWS_AS((void)parse_program("x a ~ b | c;"), CompileError);
    CHECK_THROWS_AS((void)parse_program("3 q;"), CompileError);
    try {
        (void)parse_program("h q[1];\nmeasure q[0]");
    } catch (const CompileError& e) {
        CHECK(e.span().line == 2);
    }
}

TEST_CASE("negative controls may follow targets directly") {
    Program p = parse_program("x a ~ b;");
    CHECK(p.statements[0].controls.empty());
    CHECK(p.statements[0].neg_controls.size() == 1);
}

TEST_CASE("attributes: flags, key=value, quoted") {
    Program p = parse_program("[fill=yellow, dashed, \"Recovery\", name=g1]\nbox {x} a;");
    const auto& attrs = p.statements[0].attrs;
    REQUIRE(attrs.size() == 4);
    CHECK(attrs[0].form == AttributeForm::key_value);
    CHECK(attrs[0].key == "fill");
    CHECK(attrs[0].value == "yellow");
    CHECK(attrs[1].form == AttributeForm::flag);
    CHECK(attrs[1].key == "dashed");
    CHECK(attrs[2].form == AttributeForm::quoted_label);
    CHECK(attrs[2].value == "Recovery");
    CHECK(attrs[3].key == "name");
}

TEST_CASE("comment transparency") {
    std::string with = "% leading\nh q[1]; % end of line\ncnot q[2] | q[1];\n";
    std::string without = "\nh q[1]; \ncnot q[2] | q[1];\n";
    CHECK(same_structure(parse_program(with), parse_program(without)));
}

TEST_CASE("empty program prints as empty text") {
    CHECK(pretty_print(Program{}) == "");
    CHECK(pretty_print(parse_program("")) == "");
}

TEST_CASE("round trip on corpus files") {
    for (const char* name : {"teleport.yq", "phase_estimation.yq", "ft_correction.yq",
                             "subcircuit.yq", "register_usage.yq"}) {
        CAPTURE(name);
        Program first = parse_program(yqc_test::read_corpus(name));
        std::string printed = pretty_print(first);
        Program second = parse_program(printed);
        CHECK(same_structure(first, second));
        CHECK(pretty_print(second) == printed);
    }
}

namespace {

// Random statement generator for the print/parse identity property.
struct AstGen {
    std::mt19937 rng;
    explicit AstGen(unsigned seed) : rng(seed) {}

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    std::string name() {
        static const char* names[] = {"a", "b", "qreg", "s0", "Q"};
        return names[pick(0, 4)];
    }

    IndexSpec index_spec() {
        IndexSpec spec;
        int n = pick(1, 3);
        for (int i = 0; i < n; ++i) {
            IndexEntry e;
            switch (pick(0, 3)) {
            case 0: e.lo = pick(0, 9); break;
            case 1:
                e.is_range = true;
                e.lo = pick(0, 4);
                e.hi = *e.lo + pick(0, 4);
                break;
            case 2:
                e.is_range = true;
                e.hi = pick(0, 9);
                break;
            default:
                e.is_range = true;
                e.lo = pick(0, 9);
                break;
            }
            spec.entries.push_back(e);
        }
        spec.joint_inner = pick(0, 3) == 0;
        return spec;
    }

    RefItem item() {
        RefItem it;
        switch (pick(0, 3)) {
        case 0: it.start_name = name(); break;
        case 1:
            it.start_name = name();
            it.start_index = index_spec();
            break;
        case 2:
            it.is_range_to = true;
            it.end_name = name();
            break;
        default:
            it.start_name = name();
            it.is_range_to = true;
            it.end_name = name();
            if (pick(0, 1)) {
                IndexSpec single;
                IndexEntry e;
                e.lo = pick(0, 9);
                single.entries.push_back(e);
                it.end_index = single;
            }
            break;
        }
        return it;
    }

    RegRefExpr expr() {
        RegRefExpr e;
        int n = pick(1, 2);
        for (int i = 0; i < n; ++i)
            e.items.push_back(item());
        e.joint_outer = n > 1 || pick(0, 2) == 0;
        return e;
    }

    Statement statement() {
        Statement s;
        if (pick(0, 4) == 0) {
            s.kind = StatementKind::declaration;
            s.name = std::vector<std::string>{"qubit", "cbit", "qubits", "nobit"}[pick(0, 3)];
            s.decl_name = name();
            if (pick(0, 1))
                s.decl_length = pick(1, 9);
            if (pick(0, 1))
                s.value = ValueText::from_raw("$\\ket{\\reg_{\\idx}}$");
            return s;
        }
        s.kind = StatementKind::gate;
        s.name = std::vector<std::string>{"h", "box", "cnot", "measure", "swap"}[pick(0, 4)];
        if (s.name == "box")
            s.value = ValueText::from_raw(pick(0, 1) ? "$U^2$" : "Process\\\\Syndrome");
        int nt = pick(1, 2);
        for (int i = 0; i < nt; ++i)
            s.targets.push_back(expr());
        if (pick(0, 1)) {
            int nc = pick(1, 2);
            for (int i = 0; i < nc; ++i) {
                RegRefExpr c = expr();
                c.joint_outer = false;
                if (c.items.size() > 1)
                    c.items.resize(1);
                s.controls.push_back(c);
            }
        }
        if (pick(0, 3) == 0) {
            RegRefExpr c = expr();
            c.joint_outer = false;
            if (c.items.size() > 1)
                c.items.resize(1);
            s.neg_controls.push_back(c);
        }
        if (pick(0, 3) == 0)
            s.attrs.push_back({AttributeForm::key_value, "name", "n" + std::to_string(pick(0, 99)),
                               {}});
        return s;
    }
};

} // namespace

TEST_CASE("print/parse identity on random programs") {
    for (unsigned seed = 0; seed < 50; ++seed) {
        CAPTURE(seed);
        AstGen gen(seed);
        Program p;
        int n = gen.pick(0, 8);
        for (int i = 0; i < n; ++i)
            p.statements.push_back(gen.statement());
        std::string printed = pretty_print(p);
        CAPTURE(printed);
        Program reparsed = parse_program(printed);
        CHECK(same_structure(p, reparsed));
    }
}

TEST_CASE("hostile input raises clean errors, never crashes") {
    std::mt19937 rng(7);
    const std::string alphabet = "ab q[]{}()|~-;=,\"\\%0123456789\nh.$*";
    for (int round = 0; round < 500; ++round) {
        std::string text;
        int len = std::uniform_int_distribution<int>(0, 60)(rng);
        for (int i = 0; i < len; ++i)
            text.push_back(
                alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
        CAPTURE(round);
        CAPTURE(text);
        try {
            (void)parse_program(text);
        } catch (const CompileError&) {
        }
    }
}
