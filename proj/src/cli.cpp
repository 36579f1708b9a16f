#include "pareq/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pareq/automata.hpp"
#include "pareq/determinize.hpp"
#include "pareq/fixtures.hpp"
#include "pareq/grammar.hpp"
#include "pareq/parikh.hpp"
#include "pareq/report.hpp"
#include "pareq/serialize.hpp"
#include "pareq/twoway.hpp"
#include "pareq/unary.hpp"

namespace pareq {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Nfa load_nfa(const std::string& path) { return nfa_from_json(read_file(path)); }

Cnfg load_grammar(const std::string& path) {
    return grammar_from_json(read_file(path));
}

// The alphabet a document's letter-count vectors are indexed by.
Alphabet document_alphabet(const std::string& text, const std::string& kind) {
    if (kind == "nfa") return nfa_from_json(text).alphabet;
    if (kind == "dfa") return dfa_from_json(text).alphabet;
    if (kind == "grammar") return grammar_from_json(text).terminals;
    return twoway_from_json(text).alphabet;
}

std::set<ParikhVec> bounded_image(const std::string& text,
                                  const std::string& kind, Int bound) {
    if (kind == "nfa") return parikh_image_bounded(nfa_from_json(text), bound);
    if (kind == "dfa") return parikh_image_bounded(dfa_from_json(text), bound);
    if (kind == "grammar")
        return parikh_image_bounded(grammar_from_json(text), bound);
    return parikh_image_bounded_words(twoway_from_json(text), bound);
}

int run_verify(const std::string& path_a, const std::string& path_b,
               Int bound) {
    const std::string text_a = read_file(path_a);
    const std::string text_b = read_file(path_b);
    const std::string kind_a = json_document_kind(text_a);
    const std::string kind_b = json_document_kind(text_b);
    const Alphabet alphabet = document_alphabet(text_a, kind_a);
    if (!(document_alphabet(text_b, kind_b) == alphabet))
        throw std::invalid_argument("documents use different alphabets");
    if (bound < 0) bound = alphabet.size() == 1 ? 30 : 12;
    const bool ok = bounded_image(text_a, kind_a, bound) ==
                    bounded_image(text_b, kind_b, bound);
    std::cout << "verify(bound=" << bound << "): " << (ok ? "OK" : "MISMATCH")
              << "\n";
    return ok ? 0 : 1;
}

int run_demo() {
    const Nfa a = example1_nfa();
    const Dfa fixture = example1_parikh_dfa();
    const Dfa minimal = minimize(subset_construct(a));
    const bool ok = parikh_image_bounded(a, 250) ==
                    parikh_image_bounded(fixture, 250);
    std::cout << "input NFA: " << a.num_states
              << " states; minimal equivalent DFA: " << minimal.num_states
              << "; Parikh-equivalent DFA fixture: " << fixture.num_states
              << "; verify(bound=250): " << (ok ? "OK" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
}

void run_decompose(const std::string& path) {
    using nlohmann::json;
    const std::string text = read_file(path);
    const std::string kind = json_document_kind(text);
    json doc;
    if (kind == "nfa") {
        const NfaDecomposition dec = decompose_nfa(nfa_from_json(text));
        doc["kind"] = "nfa-decomposition";
        doc["nonunary"] = json::parse(automaton_to_json(dec.nonunary_part));
        json unary = json::array();
        for (const Nfa& part : dec.unary_parts)
            unary.push_back(json::parse(automaton_to_json(part)));
        doc["unary"] = std::move(unary);
    } else if (kind == "grammar") {
        const CfgDecomposition dec = decompose_cfg(grammar_from_json(text));
        doc["kind"] = "grammar-decomposition";
        doc["nonunary"] = json::parse(grammar_to_json(dec.nonunary_part));
        json unary = json::array();
        for (const Cnfg& part : dec.unary_parts)
            unary.push_back(json::parse(grammar_to_json(part)));
        doc["unary"] = std::move(unary);
    } else {
        throw std::invalid_argument(
            "decompose expects an NFA or grammar document");
    }
    std::cout << doc.dump(2) << "\n";
}

void run_minimize(const std::string& path) {
    const std::string text = read_file(path);
    const std::string kind = json_document_kind(text);
    if (kind == "nfa")
        std::cout << automaton_to_json(minimize(subset_construct(
            nfa_from_json(text))));
    else if (kind == "dfa")
        std::cout << automaton_to_json(minimize(dfa_from_json(text)));
    else
        throw std::invalid_argument("minimize expects an automaton document");
}

void run_dot(const std::string& path) {
    const std::string text = read_file(path);
    const std::string kind = json_document_kind(text);
    if (kind == "nfa")
        std::cout << to_dot(nfa_from_json(text));
    else if (kind == "dfa")
        std::cout << to_dot(dfa_from_json(text));
    else
        throw std::invalid_argument("dot expects an automaton document");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"letter-count-preserving automaton and grammar conversions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for the report's random instances");

    int exit_code = 0;
    std::string path;
    std::string path_b;

    CLI::App* decompose =
        app.add_subcommand("decompose", "split by word shape");
    decompose->add_option("file", path, "NFA or grammar document")->required();
    decompose->callback([&] { run_decompose(path); });

    bool normalize = false;
    CLI::App* semilinear = app.add_subcommand(
        "semilinear", "letter-count image of an NFA as offsets and periods");
    semilinear->add_option("file", path, "NFA document")->required();
    semilinear->add_flag("--normalize", normalize,
                         "rewrite offsets to carry distinct markers");
    semilinear->callback([&] {
        const Nfa a = load_nfa(path);
        SemilinearRep rep = extract_semilinear(a);
        if (normalize) rep = normalize_offsets(rep, a.num_states);
        std::cout << semilinear_to_json(rep);
    });

    CLI::App* nfa2pdfa = app.add_subcommand(
        "nfa2pdfa", "letter-count-equivalent DFA for an NFA");
    nfa2pdfa->add_option("file", path, "NFA document")->required();
    nfa2pdfa->callback(
        [&] { std::cout << automaton_to_json(nfa_to_parikh_dfa(load_nfa(path))); });

    CLI::App* nfa2p2dfa = app.add_subcommand(
        "nfa2p2dfa", "letter-count-equivalent two-way DFA for an NFA");
    nfa2p2dfa->add_option("file", path, "NFA document")->required();
    nfa2p2dfa->callback(
        [&] { std::cout << twoway_to_json(nfa_to_parikh_2dfa(load_nfa(path))); });

    CLI::App* cfg2pnfa = app.add_subcommand(
        "cfg2pnfa", "letter-count-equivalent NFA for a grammar");
    cfg2pnfa->add_option("file", path, "grammar document")->required();
    cfg2pnfa->callback([&] {
        std::cout << automaton_to_json(cfg_to_parikh_nfa(load_grammar(path)));
    });

    CLI::App* cfg2pdfa = app.add_subcommand(
        "cfg2pdfa", "letter-count-equivalent DFA for a grammar");
    cfg2pdfa->add_option("file", path, "grammar document")->required();
    cfg2pdfa->callback([&] {
        std::cout << automaton_to_json(cfg_to_parikh_dfa(load_grammar(path)));
    });

    CLI::App* cfg2p2dfa = app.add_subcommand(
        "cfg2p2dfa", "letter-count-equivalent two-way DFA for a grammar");
    cfg2p2dfa->add_option("file", path, "grammar document")->required();
    cfg2p2dfa->callback([&] {
        std::cout << twoway_to_json(cfg_to_parikh_2dfa(load_grammar(path)));
    });

    CLI::App* chrobak = app.add_subcommand(
        "unary-chrobak", "path-and-cycles normal form of a unary NFA");
    chrobak->add_option("file", path, "unary NFA document")->required();
    chrobak->callback(
        [&] { std::cout << chrobak_to_json(chrobak_normal_form(load_nfa(path))); });

    CLI::App* unary_dfa = app.add_subcommand(
        "unary-dfa", "letter-count-equivalent DFA for a unary NFA");
    unary_dfa->add_option("file", path, "unary NFA document")->required();
    unary_dfa->callback(
        [&] { std::cout << automaton_to_json(unary_nfa_to_dfa(load_nfa(path))); });

    CLI::App* unary_2dfa = app.add_subcommand(
        "unary-2dfa", "language-equivalent two-way DFA for a unary NFA");
    unary_2dfa->add_option("file", path, "unary NFA document")->required();
    unary_2dfa->callback(
        [&] { std::cout << twoway_to_json(unary_nfa_to_2dfa(load_nfa(path))); });

    CLI::App* minimize_cmd =
        app.add_subcommand("minimize", "minimal language-equivalent DFA");
    minimize_cmd->add_option("file", path, "NFA or DFA document")->required();
    minimize_cmd->callback([&] { run_minimize(path); });

    Int bound = -1;
    CLI::App* verify = app.add_subcommand(
        "verify", "compare bounded letter-count images of two documents");
    verify->add_option("fileA", path, "first document")->required();
    verify->add_option("fileB", path_b, "second document")->required();
    verify->add_option("--bound", bound,
                       "word length cap (default 12, or 30 when unary)");
    verify->callback([&] { exit_code = run_verify(path, path_b, bound); });

    bool csv = false;
    CLI::App* report =
        app.add_subcommand("report", "measured state counts against bounds");
    report->add_flag("--csv", csv, "machine-readable output");
    report->callback([&] {
        const std::vector<BoundsRow> rows = standard_report(seed);
        std::cout << (csv ? report_csv(rows) : report_text(rows));
    });

    std::string which;
    CLI::App* demo = app.add_subcommand("demo", "run a built-in showcase");
    demo->add_option("name", which, "demo name (example1)")->required();
    demo->callback([&] {
        if (which != "example1")
            throw std::invalid_argument("unknown demo \"" + which + "\"");
        exit_code = run_demo();
    });

    CLI::App* dot =
        app.add_subcommand("dot", "Graphviz rendering of an automaton");
    dot->add_option("file", path, "NFA or DFA document")->required();
    dot->callback([&] { run_dot(path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace pareq
