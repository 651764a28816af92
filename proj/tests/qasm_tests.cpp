#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "yqc/gates.hpp"
#include "yqc/parser.hpp"
#include "yqc/pretty_print.hpp"
#include "yqc/qasm.hpp"

#include "test_support.hpp"

using namespace yqc;

namespace {

Elaboration elab_qasm(const std::string& text) {
    DiagnosticSink sink;
    LayoutConfig cfg;
    return elaborate(parse_qasm(text), cfg, sink);
}

// (kind, target wires, control wires) triple for structural comparison
using Triple = std::tuple<std::string, std::vector<int>, std::vector<int>>;

std::multiset<Triple> triples(const Elaboration& e, bool skip_nop) {
    std::multiset<Triple> out;
    for (const GateInstance& inst : e.instances) {
        std::string name = inst.kind->name;
        if (skip_nop && name == "nop")
            continue;
        std::vector<int> targets;
        for (const WireGroup& g : inst.targets)
            targets.insert(targets.end(), g.wires.begin(), g.wires.end());
        out.insert({name, targets, inst.controls});
    }
    return out;
}

} // namespace

TEST_CASE("cnot maps to a controlled not") {
    Program p = parse_qasm("qubit q1\nqubit q2\ncnot q1,q2\n");
    const Statement& s = p.statements.back();
    CHECK(s.name == "not");
    CHECK(s.targets[0].items[0].start_name == "q2");
    CHECK(s.controls[0].items[0].start_name == "q1");
}

TEST_CASE("c-x and c-z map to controlled x and z") {
    Program p = parse_qasm("c-z q0,q2\nc-x q1,q2\n");
    CHECK(p.statements[0].kind == StatementKind::declaration); // q0 auto-declared
    const Statement* cz = nullptr;
    const Statement* cx = nullptr;
    for (const Statement& s : p.statements) {
        if (s.kind != StatementKind::gate)
            continue;
        (s.name == "z" ? cz : cx) = &s;
    }
    REQUIRE(cz);
    REQUIRE(cx);
    CHECK(cz->targets[0].items[0].start_name == "q2");
    CHECK(cz->controls[0].items[0].start_name == "q0");
    CHECK(cx->controls[0].items[0].start_name == "q1");
}

TEST_CASE("comments drop and blank lines are ignored") {
    Program p = parse_qasm("\nh q1 # create EPR pair\n   # whole line comment\n\n");
    REQUIRE(p.statements.size() == 2); // declaration + gate
    CHECK(p.statements[1].name == "h");
}

TEST_CASE("empty file gives an empty program") {
    CHECK(parse_qasm("").statements.empty());
    CHECK(parse_qasm("\n\n").statements.empty());
}

TEST_CASE("registers auto-declare in order of first mention") {
    Program p = parse_qasm("cnot b,a\nh c\n");
    std::vector<std::string> declared;
    for (const Statement& s : p.statements)
        if (s.kind == StatementKind::declaration)
            declared.push_back(s.decl_name);
    CHECK(declared == std::vector<std::string>{"b", "a", "c"});
    // default labels are the ket of the name
    CHECK(p.statements[0].value->raw == "$\\ket{b}$");

    // wire order is stable across reparses
    Elaboration e1 = elab_qasm("cnot b,a\nh c\n");
    Elaboration e2 = elab_qasm("cnot b,a\nh c\n");
    CHECK(e1.table.find("b")->first_wire == e2.table.find("b")->first_wire);
    CHECK(e1.table.find("b")->first_wire == 0);
    CHECK(e1.table.find("a")->first_wire == 1);
}

TEST_CASE("s and t render as boxes") {
    Program p = parse_qasm("s q0\nt q0\n");
    CHECK(p.statements[1].name == "box");
    CHECK(p.statements[1].value->raw == "$S$");
    CHECK(p.statements[2].value->raw == "$T$");
}

TEST_CASE("qasm errors") {
    CHECK_THROWS_AS((void)parse_qasm("bogus q0\n"), CompileError);
    CHECK_THROWS_AS((void)parse_qasm("h q0,q1\n"), CompileError);
    CHECK_THROWS_AS((void)parse_qasm("cnot q0\n"), CompileError);
    CHECK_THROWS_AS((void)parse_qasm("qubit q0\nqubit q0\n"), CompileError);
    try {
        (void)parse_qasm("qubit q0\nbogus q0\n");
    } catch (const CompileError& e) {
        CHECK(e.span().line == 2);
    }
}

TEST_CASE("teleportation: qasm and yquant agree up to the swapped corrections") {
    Elaboration qasm = elab_qasm(yqc_test::read_corpus("teleport.qasm"));
    DiagnosticSink sink;
    LayoutConfig cfg;
    Elaboration yq =
        elaborate(parse_program(yqc_test::read_corpus("teleport.yq")), cfg, sink);

    CHECK(qasm.instances.size() == 9); // includes the nop
    CHECK(yq.instances.size() == 8);

    std::multiset<Triple> from_qasm = triples(qasm, /*skip_nop=*/true);
    std::multiset<Triple> from_yq = triples(yq, false);
    CHECK(from_qasm.size() == from_yq.size());

    // The two listings differ in one detail: the z/x corrections swap their
    // control wires. Everything else matches one-to-one.
    std::multiset<Triple> q_common, y_common;
    std::set_intersection(from_qasm.begin(), from_qasm.end(), from_yq.begin(), from_yq.end(),
                          std::inserter(q_common, q_common.begin()));
    CHECK(q_common.size() == 6);
    std::multiset<Triple> q_extra;
    std::set_difference(from_qasm.begin(), from_qasm.end(), from_yq.begin(), from_yq.end(),
                        std::inserter(q_extra, q_extra.begin()));
    CHECK(q_extra == std::multiset<Triple>{{"x", {2}, {1}}, {"z", {2}, {0}}});
    std::multiset<Triple> y_extra;
    std::set_difference(from_yq.begin(), from_yq.end(), from_qasm.begin(), from_qasm.end(),
                        std::inserter(y_extra, y_extra.begin()));
    CHECK(y_extra == std::multiset<Triple>{{"x", {2}, {0}}, {"z", {2}, {1}}});

    // Ignoring which correction is controlled from where, the multisets agree.
    auto blur = [](std::multiset<Triple> in) {
        std::multiset<Triple> out;
        for (Triple t : in) {
            if (std::get<0>(t) == "x" || std::get<0>(t) == "z")
                std::get<2>(t).clear();
            out.insert(std::move(t));
        }
        return out;
    };
    CHECK(blur(from_qasm) == blur(from_yq));
}

TEST_CASE("qasm programs pretty-print as yquant and reparse") {
    Program p = parse_qasm(yqc_test::read_corpus("teleport.qasm"));
    std::string printed = pretty_print(p);
    Program again = parse_program(printed);
    CHECK(same_structure(p, again));
    CHECK(pretty_print(again) == printed);
}

TEST_CASE("hostile qasm input raises clean errors, never crashes") {
    std::mt19937 rng(11);
    const std::string alphabet = "abq 01,#-\nxyz\t";
    for (int round = 0; round < 300; ++round) {
        std::string text;
        int len = std::uniform_int_distribution<int>(0, 50)(rng);
        for (int i = 0; i < len; ++i)
            text.push_back(
                alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
        try {
            (void)parse_qasm(text);
        } catch (const CompileError&) {
        }
    }
}
