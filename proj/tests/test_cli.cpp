#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pareq/automata.hpp"
#include "pareq/fixtures.hpp"
#include "pareq/grammar.hpp"
#include "pareq/serialize.hpp"

using namespace pareq;
namespace fs = std::filesystem;

namespace {

const fs::path& scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "pareq-cli-tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args) {
    const fs::path out = scratch() / "stdout.txt";
    const fs::path err = scratch() / "stderr.txt";
    const std::string cmd = std::string("\"") + PAREQ_CLI_PATH + "\" " + args +
                            " > \"" + out.string() + "\" 2> \"" +
                            err.string() + "\"";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = status < 0 ? status : (status >> 8) & 0xff;
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
}

fs::path fixture_nfa() {
    const fs::path p = scratch() / "example1.json";
    write_file(p, automaton_to_json(example1_nfa()));
    return p;
}

fs::path fixture_grammar() {
    const fs::path p = scratch() / "grammar.json";
    write_file(p, grammar_to_json(grammar_corpus()[0]));
    return p;
}

fs::path fixture_unary() {
    const fs::path p = scratch() / "unary.json";
    write_file(p, automaton_to_json(random_unary_nfa(3, 5)));
    return p;
}

}  // namespace

TEST_CASE("conversion outputs parse and verify against their input") {
    const fs::path in = fixture_nfa();
    const CliResult dfa = run_cli("nfa2pdfa \"" + in.string() + "\"");
    REQUIRE(dfa.code == 0);
    CHECK(json_document_kind(dfa.out) == "dfa");

    const fs::path out = scratch() / "pdfa.json";
    write_file(out, dfa.out);
    const CliResult same = run_cli("verify --bound 30 \"" + in.string() +
                                   "\" \"" + out.string() + "\"");
    CHECK(same.code == 0);
    CHECK(same.out == "verify(bound=30): OK\n");

    const CliResult rerun = run_cli("nfa2pdfa \"" + in.string() + "\"");
    CHECK(rerun.out == dfa.out);
}

TEST_CASE("verification failure exits with code one") {
    const fs::path in = fixture_nfa();
    Nfa other(Alphabet({"a", "b"}), 1, 0);
    other.add_transition(0, 0, 0);
    other.set_final(0);
    const fs::path p = scratch() / "other.json";
    write_file(p, automaton_to_json(other));
    const CliResult r =
        run_cli("verify \"" + in.string() + "\" \"" + p.string() + "\"");
    CHECK(r.code == 1);
    CHECK(r.out == "verify(bound=12): MISMATCH\n");
}

TEST_CASE("malformed inputs exit with code two and a diagnostic") {
    const fs::path p = scratch() / "broken.json";
    write_file(p, "{\"kind\":\"nfa\"}");
    const CliResult r = run_cli("nfa2pdfa \"" + p.string() + "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);

    const CliResult missing = run_cli("nfa2pdfa \"" +
                                      (scratch() / "nope.json").string() +
                                      "\"");
    CHECK(missing.code == 2);

    const CliResult usage = run_cli("frobnicate");
    CHECK(usage.code == 2);
}

TEST_CASE("grammar conversions emit automaton documents") {
    const fs::path in = fixture_grammar();
    const CliResult nfa = run_cli("cfg2pnfa \"" + in.string() + "\"");
    REQUIRE(nfa.code == 0);
    CHECK(json_document_kind(nfa.out) == "nfa");

    const CliResult dfa = run_cli("cfg2pdfa \"" + in.string() + "\"");
    REQUIRE(dfa.code == 0);
    CHECK(json_document_kind(dfa.out) == "dfa");

    const fs::path dfa_path = scratch() / "gdfa.json";
    write_file(dfa_path, dfa.out);
    const CliResult ok = run_cli("verify --bound 8 \"" + in.string() +
                                 "\" \"" + dfa_path.string() + "\"");
    CHECK(ok.code == 0);

    const CliResult two = run_cli("cfg2p2dfa \"" + in.string() + "\"");
    REQUIRE(two.code == 0);
    CHECK(json_document_kind(two.out) == "2dfa");
    const fs::path two_path = scratch() / "g2dfa.json";
    write_file(two_path, two.out);
    const CliResult ok2 = run_cli("verify --bound 6 \"" + in.string() +
                                  "\" \"" + two_path.string() + "\"");
    CHECK(ok2.code == 0);
}

TEST_CASE("unary subcommands accept unary automata only") {
    const fs::path in = fixture_unary();
    const CliResult nf = run_cli("unary-chrobak \"" + in.string() + "\"");
    REQUIRE(nf.code == 0);
    CHECK(nf.out.find("\"path\"") != std::string::npos);

    const CliResult dfa = run_cli("unary-dfa \"" + in.string() + "\"");
    REQUIRE(dfa.code == 0);
    CHECK(json_document_kind(dfa.out) == "dfa");

    const CliResult two = run_cli("unary-2dfa \"" + in.string() + "\"");
    REQUIRE(two.code == 0);
    CHECK(json_document_kind(two.out) == "2dfa");

    const CliResult bad = run_cli("unary-chrobak \"" +
                                  fixture_nfa().string() + "\"");
    CHECK(bad.code == 2);
}

TEST_CASE("decompose emits one document per part") {
    const CliResult r = run_cli("decompose \"" + fixture_nfa().string() + "\"");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"nfa-decomposition\"") != std::string::npos);
    CHECK(r.out.find("\"nonunary\"") != std::string::npos);
    CHECK(r.out.find("\"unary\"") != std::string::npos);

    const CliResult g =
        run_cli("decompose \"" + fixture_grammar().string() + "\"");
    REQUIRE(g.code == 0);
    CHECK(g.out.find("\"grammar-decomposition\"") != std::string::npos);
}

TEST_CASE("semilinear prints a representation, optionally normalized") {
    const fs::path in = fixture_nfa();
    const CliResult raw = run_cli("semilinear \"" + in.string() + "\"");
    REQUIRE(raw.code == 0);
    CHECK(raw.out.find("\"Y\"") != std::string::npos);
    CHECK(raw.out.find("\"preds\"") == std::string::npos);

    const CliResult norm =
        run_cli("semilinear --normalize \"" + in.string() + "\"");
    REQUIRE(norm.code == 0);
    CHECK(norm.out.find("\"preds\"") != std::string::npos);
}

TEST_CASE("minimize reduces the fixture to the known state count") {
    const CliResult r = run_cli("minimize \"" + fixture_nfa().string() + "\"");
    REQUIRE(r.code == 0);
    CHECK(json_document_kind(r.out) == "dfa");
    CHECK(r.out.find("\"states\": 212") != std::string::npos);
}

TEST_CASE("report prints rows and csv stays pinned") {
    const CliResult text = run_cli("report");
    REQUIRE(text.code == 0);
    CHECK(text.out.find("A_0 states = 13 ≤ n(m+1)+1 = 13 PASS") !=
          std::string::npos);

    const CliResult csv = run_cli("report --csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind(
              "conversion,input_n,input_m,states,bound_name,bound_value,"
              "status\n", 0) == 0);

    const CliResult seeded = run_cli("report --seed 5 --csv");
    REQUIRE(seeded.code == 0);
    const CliResult seeded_again = run_cli("report --seed 5 --csv");
    CHECK(seeded.out == seeded_again.out);
}

TEST_CASE("demo prints the showcase line") {
    const CliResult r = run_cli("demo example1");
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "input NFA: 18 states; minimal equivalent DFA: 212; "
          "Parikh-equivalent DFA fixture: 22; verify(bound=250): OK\n");
    CHECK(run_cli("demo nothing").code == 2);
}

TEST_CASE("dot renders automaton documents") {
    const CliResult r = run_cli("dot \"" + fixture_nfa().string() + "\"");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    const CliResult g = run_cli("dot \"" + fixture_grammar().string() + "\"");
    CHECK(g.code == 2);
}
