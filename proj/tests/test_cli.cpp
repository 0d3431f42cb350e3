#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <sweepfa/analysis.hpp>
#include <sweepfa/text_format.hpp>
#include <sweepfa/transform.hpp>
#include <sweepfa/witness.hpp>

#include "test_support.hpp"

using namespace sweepfa;
using testsupport::CliResult;
using testsupport::run_cli;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    REQUIRE(out.good());
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string q(const std::string& path) { return "'" + path + "'"; }

}  // namespace

TEST_CASE("witness subcommand emits the canonical rendering", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();

    CliResult res = run_cli(bin, "witness 3 2 1");
    CHECK(res.exit_code == 0);
    CHECK(res.output == render(build_witness({3, 2, 1})));

    // Out-of-range shapes need --force; without it they are usage errors.
    CHECK(run_cli(bin, "witness 3 1 0").exit_code == 2);
    CliResult forced = run_cli(bin, "witness 3 1 0 --force");
    CHECK(forced.exit_code == 0);
    CHECK(forced.output == render(build_witness({3, 1, 0}, true)));
}

TEST_CASE("validate distinguishes valid, broken and unreadable input", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();

    std::string good = write_temp("cli_valid.aut", render(build_witness({2, 1, 1})));
    CliResult ok = run_cli(bin, "validate " + q(good));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "valid\n");

    SweepingAutomaton broken = build_witness({2, 1, 1});
    broken.delta_plus[0] = Permutation{{0, 0}};
    std::string bad = write_temp("cli_broken.aut", render(broken));
    CliResult invalid = run_cli(bin, "validate " + q(bad));
    CHECK(invalid.exit_code == 1);
    CHECK(invalid.output.find("delta+ a not bijective") != std::string::npos);

    std::string garbage = write_temp("cli_garbage.aut", "not an automaton\n");
    CHECK(run_cli(bin, "validate " + q(garbage)).exit_code == 2);
    CHECK(run_cli(bin, "validate /nonexistent/automaton.aut").exit_code == 2);
}

TEST_CASE("run prints the verdict and optionally the trace", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();
    SweepingAutomaton w = build_witness({3, 2, 1});
    std::string file = write_temp("cli_w321.aut", render(w));

    CliResult empty = run_cli(bin, "run " + q(file) + " ''");
    CHECK(empty.exit_code == 1);
    CHECK(empty.output == "reject\n");

    CliResult traced = run_cli(bin, "run " + q(file) + " a --trace");
    CHECK(traced.exit_code == 1);
    CHECK(traced.output == "q0 0\nq0 1\nq1 2\nr1 1\nr1 0\nreject\n");

    std::vector<std::string> accepted = bounded_language(w, 6);
    REQUIRE_FALSE(accepted.empty());
    const std::string& word = accepted.front();
    CliResult good =
        run_cli(bin, "run " + q(file) + " " + (word.empty() ? "''" : q(word)));
    CHECK(good.exit_code == 0);
    CHECK(good.output == "accept\n");

    // A letter outside the alphabet is an input error, not a verdict.
    CHECK(run_cli(bin, "run " + q(file) + " xyz").exit_code == 2);
    // A one-way automaton cannot be simulated sweep by sweep.
    std::string dfa = write_temp("cli_dfa_run.aut", render(transform(w)));
    CHECK(run_cli(bin, "run " + q(dfa) + " a").exit_code == 2);
}

TEST_CASE("transform writes automaton and label files deterministically", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();
    SweepingAutomaton w = build_witness({3, 2, 1});
    std::string file = write_temp("cli_transform_in.aut", render(w));
    std::string out = (std::filesystem::temp_directory_path() / "cli_transform_out.aut").string();
    std::string labels = (std::filesystem::temp_directory_path() / "cli_transform_labels.txt").string();

    CliResult res =
        run_cli(bin, "transform " + q(file) + " -o " + q(out) + " --labels " + q(labels));
    REQUIRE(res.exit_code == 0);
    CHECK(slurp(out) == render(transform(w)));

    std::string label_text = slurp(labels);
    CHECK(label_text.find("0 (q0;r0->q1,r1->-)\n") == 0);
    CHECK(label_text.find("(q1;r0->q2,r1->-)") != std::string::npos);

    // Stdout mode and --full mode.
    CHECK(run_cli(bin, "transform " + q(file)).output == render(transform(w)));
    CHECK(run_cli(bin, "transform " + q(file) + " --full").output ==
          render(transform(w, TransformMode::full)));

    // Bit-for-bit reproducible.
    std::string again = (std::filesystem::temp_directory_path() / "cli_transform_out2.aut").string();
    run_cli(bin, "transform " + q(file) + " -o " + q(again));
    CHECK(slurp(again) == slurp(out));
}

TEST_CASE("minimize shrinks a one-way automaton file", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();

    OneWayDfa d;  // (aa)* written with four states
    d.alphabet = {'a'};
    d.state_count = 4;
    d.initial = 0;
    d.delta = {{1, 2, 3, 0}};
    d.accepting = {true, false, true, false};
    std::string file = write_temp("cli_minimize_in.aut", render(d));

    CliResult res = run_cli(bin, "minimize " + q(file));
    CHECK(res.exit_code == 0);
    CHECK(res.output == render(minimize(d)));
    OneWayDfa m = parse_dfa(res.output);
    CHECK(m.state_count == 2);

    // Sweeping input is the wrong type for this command.
    std::string sweeping = write_temp("cli_minimize_wrong.aut", render(build_witness({2, 1, 1})));
    CHECK(run_cli(bin, "minimize " + q(sweeping)).exit_code == 2);
}

TEST_CASE("equiv compares automata of either type", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();
    SweepingAutomaton w321 = build_witness({3, 2, 1});
    SweepingAutomaton w322 = build_witness({3, 2, 2});
    std::string f321 = write_temp("cli_equiv_a.aut", render(w321));
    std::string f322 = write_temp("cli_equiv_b.aut", render(w322));
    std::string fdfa = write_temp("cli_equiv_c.aut", render(transform(w321)));

    CliResult same = run_cli(bin, "equiv " + q(f321) + " " + q(f321));
    CHECK(same.exit_code == 0);
    CHECK(same.output == "equal\n");

    CliResult mixed = run_cli(bin, "equiv " + q(f321) + " " + q(fdfa));
    CHECK(mixed.exit_code == 0);
    CHECK(mixed.output == "equal\n");

    EquivalenceVerdict verdict = equivalent(transform(w321), transform(w322));
    REQUIRE_FALSE(verdict.equal);
    CliResult diff = run_cli(bin, "equiv " + q(f321) + " " + q(f322));
    CHECK(diff.exit_code == 1);
    CHECK(diff.output == "not equal\ncounterexample: " + *verdict.counterexample + "\n");

    // Disagreement on the empty string is spelled out.
    OneWayDfa all, none;
    all.alphabet = none.alphabet = {'a'};
    all.state_count = none.state_count = 1;
    all.initial = none.initial = 0;
    all.delta = none.delta = {{0}};
    all.accepting = {true};
    none.accepting = {false};
    std::string fall = write_temp("cli_equiv_all.aut", render(all));
    std::string fnone = write_temp("cli_equiv_none.aut", render(none));
    CliResult eps = run_cli(bin, "equiv " + q(fall) + " " + q(fnone));
    CHECK(eps.exit_code == 1);
    CHECK(eps.output == "not equal\ncounterexample: (empty)\n");
}

TEST_CASE("bounds and optimal print the published numbers", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();

    CliResult csv = run_cli(bin, "bounds --max-n 3 --csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output == "n,F,phi,kapoutsis\n1,1,2,2\n2,2,3,7\n3,3,5,58\n");

    CliResult plain = run_cli(bin, "bounds --max-n 2");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output == "n F phi kapoutsis\n1 1 2 2\n2 2 3 7\n");

    CliResult best = run_cli(bin, "optimal 9");
    CHECK(best.exit_code == 0);
    CHECK(best.output == "k=5 l=4 m=1 F=480\n");
}

TEST_CASE("table-check verifies the reference table", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();
    CliResult res = run_cli(bin, "table-check");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("n=1 ok\n") != std::string::npos);
    CHECK(res.output.find("n=12 ok\n") != std::string::npos);
    CHECK(res.output.find("table ok\n") + 9 == res.output.size());
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
    std::string bin = testsupport::cli_binary_from_env();
    CHECK(run_cli(bin, "").exit_code == 2);
    CHECK(run_cli(bin, "no-such-command").exit_code == 2);
    CHECK(run_cli(bin, "run onlyonearg").exit_code == 2);
    CHECK(run_cli(bin, "witness 2 2 1").exit_code == 2);
    CHECK(run_cli(bin, "bounds").exit_code == 2);
}
