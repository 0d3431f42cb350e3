#include <catch2/catch_amalgamated.hpp>

#include <sweepfa/text_format.hpp>
#include <sweepfa/witness.hpp>

using namespace sweepfa;

TEST_CASE("sweeping automata round-trip through the text format", "[format]") {
    for (WitnessParams p : {WitnessParams{2, 1, 1}, WitnessParams{3, 2, 1}, WitnessParams{4, 3, 2}}) {
        SweepingAutomaton a = build_witness(p);
        SweepingAutomaton back = parse_sweeping(render(a));
        CHECK(back == a);
        CHECK(render(back) == render(a));
    }
}

TEST_CASE("generalized flavor round-trips with its accept set", "[format]") {
    SweepingAutomaton a = build_witness({3, 2, 1});
    a.flavor = Flavor::generalized;
    a.accept_minus[1] = true;
    SweepingAutomaton back = parse_sweeping(render(a));
    CHECK(back == a);
    CHECK(back.flavor == Flavor::generalized);
    CHECK(back.accept_minus[1]);
}

TEST_CASE("rendering is canonical and mentions every defined pair", "[format]") {
    std::string text = render(build_witness({3, 2, 1}));
    CHECK(text ==
          "type: 2perfa\n"
          "alphabet: a b c d\n"
          "qplus: 3\n"
          "qminus: 2\n"
          "initial: q0\n"
          "accept: q2\n"
          "delta+ a: 0->1 1->2 2->0\n"
          "delta+ b: 0->1 1->0 2->2\n"
          "delta+ c: 0->0 1->1 2->2\n"
          "delta+ d: 0->0 1->1 2->2\n"
          "delta- a: 0->0 1->1\n"
          "delta- b: 0->0 1->1\n"
          "delta- c: 0->1 1->0\n"
          "delta- d: 0->1 1->0\n"
          "lend: q0->q0 r0->q1\n"
          "rend: q0->r0 q1->r1\n");
}

TEST_CASE("parser accepts comments, blank lines and any field order", "[format]") {
    SweepingAutomaton a = parse_sweeping(
        "# a two-state parity machine\n"
        "alphabet: a\n"
        "\n"
        "qminus: 0\n"
        "qplus: 2\n"
        "initial: q0   # starts on the left\n"
        "type: 2perfa\n"
        "accept: q0\n"
        "delta+ a: 0->1 1->0\n"
        "lend: q0->q0\n");
    CHECK(a.plus_count == 2);
    CHECK(a.minus_count == 0);
    CHECK(a.delta_plus[0] == Permutation({1, 0}));
    CHECK(a.delta_minus.size() == 1);  // implicit empty table for the minus side
    CHECK(a.accept_plus == std::vector<bool>{true, false});
    CHECK(validate(a).ok());
}

TEST_CASE("omitted end-marker lines mean fully undefined", "[format]") {
    SweepingAutomaton a = parse_sweeping(
        "type: 2perfa\nalphabet: a\nqplus: 1\nqminus: 0\ninitial: q0\naccept:\n"
        "delta+ a: 0->0\n");
    CHECK(a.left_end.defined_count() == 0);
    CHECK(a.right_end.defined_count() == 0);
    CHECK(a.accepting_states().empty());
}

TEST_CASE("parse errors carry line numbers and name the offence", "[format]") {
    auto error_of = [](const std::string& text) {
        try {
            parse_sweeping(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    const std::string head = "type: 2perfa\nalphabet: a\nqplus: 2\nqminus: 0\n";

    CHECK(error_of(head + "accept:\ndelta+ a: 0->1 1->0\n") == "missing field 'initial'");
    CHECK(error_of(head + "initial: q0\naccept:\n") == "missing field 'delta+ a'");
    CHECK(error_of(head + "initial: r0\naccept:\ndelta+ a: 0->1 1->0\n") ==
          "line 5: state r0 out of range");
    CHECK(error_of(head + "initial: q0\naccept:\ndelta+ a: 0->1\n") ==
          "line 7: delta+ a: missing image of 1");
    CHECK(error_of(head + "initial: q0\naccept:\ndelta+ a: 0->1 0->0 1->0\n") ==
          "line 7: delta+ a: source 0 listed twice");
    CHECK(error_of(head + "initial: q0\naccept:\ndelta+ a: 0->5 1->0\n") ==
          "line 7: delta+ a: target 5 out of range");
    CHECK(error_of(head + "initial: q0\naccept:\ndelta+ a: 0->1 1->0\nwhat: ever\n") ==
          "line 8: unknown field 'what'");
    CHECK(error_of(head + "initial: q0\ninitial: q1\naccept:\ndelta+ a: 0->1 1->0\n") ==
          "line 6: duplicate field 'initial'");
    CHECK(error_of("type: nonsense\n") == "line 1: expected type 2perfa or 2perfa-gen, got 'nonsense'");
    CHECK(error_of("hello there\n") == "line 1: expected 'key: value'");
    CHECK(error_of(head + "initial: q0\naccept:\ndelta+ a: 0->1 1->0\nlend: q1->q0\n") ==
          "line 8: lend source must be q0 or a minus state, got q1");
    CHECK(error_of("type: 2perfa\nalphabet: ab\n") ==
          "line 2: alphabet symbols must be single characters, got 'ab'");
}

TEST_CASE("one-way automata round-trip; labels stay out of the file", "[format]") {
    OneWayDfa d;
    d.alphabet = {'a', 'b'};
    d.state_count = 2;
    d.initial = 0;
    d.delta = {{1, 0}, {0, 1}};
    d.accepting = {false, true};
    d.labels = {"(x)", "(y)"};

    std::string text = render(d);
    CHECK(text ==
          "type: 1dfa\n"
          "alphabet: a b\n"
          "states: 2\n"
          "initial: q0\n"
          "accept: q1\n"
          "delta a: 0->1 1->0\n"
          "delta b: 0->0 1->1\n");

    OneWayDfa back = parse_dfa(text);
    d.labels.clear();
    CHECK(back == d);
}

TEST_CASE("one-way tables may be non-bijective; parser only checks totality", "[format]") {
    OneWayDfa d = parse_dfa(
        "type: 1dfa\nalphabet: a\nstates: 2\ninitial: q0\naccept: q0\ndelta a: 0->0 1->0\n");
    CHECK(validate(d).ok());
    CHECK_FALSE(is_permutation_dfa(d));
}

TEST_CASE("parse_any dispatches on the type line", "[format]") {
    auto v1 = parse_any("type: 1dfa\nalphabet:\nstates: 1\ninitial: q0\naccept:\n");
    CHECK(std::holds_alternative<OneWayDfa>(v1));
    auto v2 = parse_any(render(build_witness({2, 1, 1})));
    CHECK(std::holds_alternative<SweepingAutomaton>(v2));
    SweepingAutomaton gen = build_witness({2, 1, 1});
    gen.flavor = Flavor::generalized;
    auto v3 = parse_any(render(gen));
    CHECK(std::get<SweepingAutomaton>(v3).flavor == Flavor::generalized);
    CHECK_THROWS_AS(parse_any("alphabet: a\n"), ParseError);
}
