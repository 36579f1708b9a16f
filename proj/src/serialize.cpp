#include "pareq/serialize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pareq {

namespace {

using nlohmann::json;

std::string dump_canonical(const json& doc) {
    return doc.dump(2) + "\n";
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("document is not valid JSON");
    if (!doc.is_object()) throw std::invalid_argument("document must be a JSON object");
    return doc;
}

json alphabet_to_json(const Alphabet& alphabet) {
    json names = json::array();
    for (Letter t = 0; t < alphabet.size(); ++t) names.push_back(alphabet.name(t));
    return names;
}

Alphabet alphabet_from_json(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw std::invalid_argument(std::string(key) + " must be a list of letter names");
    std::vector<std::string> names;
    for (const json& item : doc[key]) {
        if (!item.is_string())
            throw std::invalid_argument(std::string(key) + " must be a list of letter names");
        names.push_back(item.get<std::string>());
    }
    return Alphabet(names);
}

int int_field(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw std::invalid_argument(std::string(key) + " must be an integer");
    return doc[key].get<int>();
}

// Shared layout of the one-way automaton documents.
template <typename Automaton>
json automaton_document(const Automaton& a, const char* kind,
                        const std::vector<std::tuple<State, Letter, State>>& edges) {
    json doc;
    doc["kind"] = kind;
    doc["alphabet"] = alphabet_to_json(a.alphabet);
    doc["states"] = a.num_states;
    doc["initial"] = a.initial;
    json finals = json::array();
    for (State q = 0; q < a.num_states; ++q)
        if (a.is_final(q)) finals.push_back(q);
    doc["finals"] = std::move(finals);
    json transitions = json::array();
    for (const auto& [from, t, to] : edges)
        transitions.push_back(json::array({from, a.alphabet.name(t), to}));
    doc["transitions"] = std::move(transitions);
    return doc;
}

struct AutomatonShell {
    Alphabet alphabet;
    int states = 0;
    State initial = 0;
    std::vector<State> finals;
    std::vector<std::tuple<State, Letter, State>> edges;
};

AutomatonShell shell_from_json(const json& doc) {
    AutomatonShell shell;
    shell.alphabet = alphabet_from_json(doc, "alphabet");
    shell.states = int_field(doc, "states");
    if (shell.states < 1) throw std::invalid_argument("states must be at least 1");
    shell.initial = int_field(doc, "initial");
    if (!doc.contains("finals") || !doc["finals"].is_array())
        throw std::invalid_argument("finals must be a list of states");
    for (const json& item : doc["finals"]) {
        if (!item.is_number_integer())
            throw std::invalid_argument("finals must be a list of states");
        shell.finals.push_back(item.get<int>());
    }
    if (!doc.contains("transitions") || !doc["transitions"].is_array())
        throw std::invalid_argument("transitions must be a list of triples");
    for (const json& item : doc["transitions"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_string() || !item[2].is_number_integer())
            throw std::invalid_argument("each transition must be [from, \"letter\", to]");
        const std::string name = item[1].get<std::string>();
        Letter t = -1;
        for (Letter x = 0; x < shell.alphabet.size(); ++x)
            if (shell.alphabet.name(x) == name) t = x;
        if (t < 0) throw std::invalid_argument("transition letter \"" + name +
                                               "\" is not in the alphabet");
        shell.edges.emplace_back(item[0].get<int>(), t, item[2].get<int>());
    }
    return shell;
}

void require_kind(const json& doc, const std::string& want) {
    if (!doc.contains("kind") || !doc["kind"].is_string() ||
        doc["kind"].get<std::string>() != want)
        throw std::invalid_argument("document kind must be \"" + want + "\"");
}

}  // namespace

std::string automaton_to_json(const Nfa& a) {
    a.check_valid();
    std::vector<std::tuple<State, Letter, State>> edges;
    for (State q = 0; q < a.num_states; ++q)
        for (Letter t = 0; t < a.alphabet.size(); ++t)
            for (State r : a.transitions[q][t]) edges.emplace_back(q, t, r);
    return dump_canonical(automaton_document(a, "nfa", edges));
}

std::string automaton_to_json(const Dfa& d) {
    d.check_valid();
    std::vector<std::tuple<State, Letter, State>> edges;
    for (State q = 0; q < d.num_states; ++q)
        for (Letter t = 0; t < d.alphabet.size(); ++t)
            if (d.next(q, t) >= 0) edges.emplace_back(q, t, d.next(q, t));
    return dump_canonical(automaton_document(d, "dfa", edges));
}

Nfa nfa_from_json(const std::string& text) {
    const json doc = parse_document(text);
    require_kind(doc, "nfa");
    AutomatonShell shell = shell_from_json(doc);
    if (shell.initial < 0 || shell.initial >= shell.states)
        throw std::invalid_argument("initial state out of range");
    Nfa a(shell.alphabet, shell.states, shell.initial);
    for (State q : shell.finals) {
        if (q < 0 || q >= shell.states)
            throw std::invalid_argument("final state out of range");
        a.set_final(q);
    }
    for (const auto& [from, t, to] : shell.edges) {
        if (from < 0 || from >= shell.states || to < 0 || to >= shell.states)
            throw std::invalid_argument("transition state out of range");
        a.add_transition(from, t, to);
    }
    a.check_valid();
    return a;
}

Dfa dfa_from_json(const std::string& text) {
    const json doc = parse_document(text);
    require_kind(doc, "dfa");
    AutomatonShell shell = shell_from_json(doc);
    if (shell.initial < 0 || shell.initial >= shell.states)
        throw std::invalid_argument("initial state out of range");
    Dfa d(shell.alphabet, shell.states, shell.initial);
    for (State q : shell.finals) {
        if (q < 0 || q >= shell.states)
            throw std::invalid_argument("final state out of range");
        d.set_final(q);
    }
    for (const auto& [from, t, to] : shell.edges) {
        if (from < 0 || from >= shell.states || to < 0 || to >= shell.states)
            throw std::invalid_argument("transition state out of range");
        if (d.next(from, t) >= 0 && d.next(from, t) != to)
            throw std::invalid_argument("two transitions from one state on one letter");
        d.set_transition(from, t, to);
    }
    bool full = true;
    for (State q = 0; q < d.num_states; ++q)
        for (Letter t = 0; t < d.alphabet.size(); ++t)
            if (d.next(q, t) < 0) full = false;
    d.complete = full;
    d.check_valid();
    return d;
}

std::string grammar_to_json(const Cnfg& g) {
    g.check_valid();
    json doc;
    json variables = json::array();
    for (const std::string& name : g.variables) variables.push_back(name);
    doc["variables"] = std::move(variables);
    doc["terminals"] = alphabet_to_json(g.terminals);
    doc["start"] = g.variables[static_cast<size_t>(g.start)];
    json productions = json::array();
    for (const CnfBinary& p : g.binary)
        productions.push_back(json::array(
            {g.variables[static_cast<size_t>(p.lhs)],
             json::array({g.variables[static_cast<size_t>(p.left)],
                          g.variables[static_cast<size_t>(p.right)]})}));
    for (const CnfTerminal& p : g.terminal)
        productions.push_back(json::array({g.variables[static_cast<size_t>(p.lhs)],
                                           json::array({g.terminals.name(p.letter)})}));
    if (g.start_epsilon)
        productions.push_back(json::array(
            {g.variables[static_cast<size_t>(g.start)], json::array()}));
    doc["productions"] = std::move(productions);
    return dump_canonical(doc);
}

Cnfg grammar_from_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw std::invalid_argument("variables must be a list of names");
    std::vector<std::string> variables;
    std::map<std::string, int> var_index;
    for (const json& item : doc["variables"]) {
        if (!item.is_string())
            throw std::invalid_argument("variables must be a list of names");
        var_index.emplace(item.get<std::string>(), static_cast<int>(variables.size()));
        variables.push_back(item.get<std::string>());
    }
    Alphabet terminals = alphabet_from_json(doc, "terminals");
    if (!doc.contains("start") || !doc["start"].is_string())
        throw std::invalid_argument("start must be a variable name");
    const std::string start_name = doc["start"].get<std::string>();
    auto start_it = var_index.find(start_name);
    if (start_it == var_index.end())
        throw std::invalid_argument("start variable \"" + start_name + "\" is not declared");

    Cnfg g(std::move(variables), std::move(terminals), start_it->second);
    if (!doc.contains("productions") || !doc["productions"].is_array())
        throw std::invalid_argument("productions must be a list");
    for (const json& item : doc["productions"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
            !item[1].is_array())
            throw std::invalid_argument("each production must be [lhs, [rhs...]]");
        auto lhs_it = var_index.find(item[0].get<std::string>());
        if (lhs_it == var_index.end())
            throw std::invalid_argument("production variable \"" +
                                        item[0].get<std::string>() + "\" is not declared");
        const json& rhs = item[1];
        if (rhs.size() == 2) {
            if (!rhs[0].is_string() || !rhs[1].is_string())
                throw std::invalid_argument("binary production sides must be names");
            auto left = var_index.find(rhs[0].get<std::string>());
            auto right = var_index.find(rhs[1].get<std::string>());
            if (left == var_index.end() || right == var_index.end())
                throw std::invalid_argument("binary production uses an undeclared variable");
            g.add_binary(lhs_it->second, left->second, right->second);
        } else if (rhs.size() == 1) {
            if (!rhs[0].is_string())
                throw std::invalid_argument("terminal production side must be a letter");
            const std::string name = rhs[0].get<std::string>();
            Letter t = -1;
            for (Letter x = 0; x < g.terminals.size(); ++x)
                if (g.terminals.name(x) == name) t = x;
            if (t < 0)
                throw std::invalid_argument("terminal \"" + name +
                                            "\" is not in the alphabet");
            g.add_terminal(lhs_it->second, t);
        } else if (rhs.empty()) {
            if (lhs_it->second != g.start)
                throw std::invalid_argument(
                    "only the start variable may derive the empty word");
            g.start_epsilon = true;
        } else {
            throw std::invalid_argument("production right side must have 0, 1, or 2 items");
        }
    }
    g.check_valid();
    return g;
}

std::string json_document_kind(const std::string& text) {
    const json doc = parse_document(text);
    if (doc.contains("kind") && doc["kind"].is_string()) {
        const std::string kind = doc["kind"].get<std::string>();
        if (kind == "nfa" || kind == "dfa") return kind;
        throw std::invalid_argument("unknown document kind \"" + kind + "\"");
    }
    if (doc.contains("productions")) return "grammar";
    if (doc.contains("accept")) return "2dfa";
    throw std::invalid_argument("document is neither an automaton nor a grammar");
}

namespace {

json vec_to_json(const ParikhVec& v) {
    json arr = json::array();
    for (Int x : v) arr.push_back(x);
    return arr;
}

}  // namespace

std::string semilinear_to_json(const SemilinearRep& rep) {
    rep.check_valid();
    json doc;
    json finite = json::array();
    for (const ParikhVec& y : rep.finite_part) finite.push_back(vec_to_json(y));
    doc["Y"] = std::move(finite);
    // Linear parts are emitted sorted by offset then generators; the chosen
    // predecessors (when present) are permuted in step so preds[i] still
    // belongs to Z[i].
    std::vector<size_t> order(rep.linear_parts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const LinearSet& za = rep.linear_parts[a];
        const LinearSet& zb = rep.linear_parts[b];
        if (za.offset != zb.offset) return za.offset < zb.offset;
        return za.generators < zb.generators;
    });
    json parts = json::array();
    for (size_t i : order) {
        const LinearSet& z = rep.linear_parts[i];
        json part;
        part["offset"] = vec_to_json(z.offset);
        json gens = json::array();
        for (const ParikhVec& g : z.generators) gens.push_back(vec_to_json(g));
        part["generators"] = std::move(gens);
        parts.push_back(std::move(part));
    }
    doc["Z"] = std::move(parts);
    if (rep.chosen_preds) {
        json preds = json::array();
        for (size_t i : order) preds.push_back(vec_to_json((*rep.chosen_preds)[i]));
        doc["preds"] = std::move(preds);
    }
    return dump_canonical(doc);
}

std::string twoway_to_json(const TwoWayDfa& m) {
    m.check_valid();
    json doc;
    doc["alphabet"] = alphabet_to_json(m.alphabet);
    doc["states"] = m.num_states;
    doc["initial"] = m.initial;
    doc["accept"] = m.accept;
    json transitions = json::object();
    for (State q = 0; q < m.num_states; ++q)
        for (int sym = 0; sym < m.num_symbols(); ++sym) {
            const auto& slot = m.transitions[static_cast<size_t>(q)][static_cast<size_t>(sym)];
            if (!slot) continue;
            std::string name;
            if (sym == m.left_marker())
                name = "<";
            else if (sym == m.right_marker())
                name = ">";
            else
                name = m.alphabet.name(sym);
            const char* move = slot->move == Move::Left    ? "L"
                               : slot->move == Move::Right ? "R"
                                                           : "S";
            transitions[std::to_string(q) + "," + name] = json::array({slot->to, move});
        }
    doc["transitions"] = std::move(transitions);
    return dump_canonical(doc);
}

TwoWayDfa twoway_from_json(const std::string& text) {
    const json doc = parse_document(text);
    const Alphabet alphabet = alphabet_from_json(doc, "alphabet");
    TwoWayDfa m(alphabet, int_field(doc, "states"), int_field(doc, "initial"),
                int_field(doc, "accept"));
    if (!doc.contains("transitions") || !doc["transitions"].is_object())
        throw std::invalid_argument(
            "transitions must be an object keyed by \"state,symbol\"");
    for (const auto& [key, value] : doc["transitions"].items()) {
        const size_t comma = key.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
            throw std::invalid_argument("transition key \"" + key +
                                        "\" must be \"state,symbol\"");
        int from = -1;
        try {
            size_t used = 0;
            from = std::stoi(key.substr(0, comma), &used);
            if (used != comma) from = -1;
        } catch (const std::exception&) {
            from = -1;
        }
        if (from < 0)
            throw std::invalid_argument("transition key \"" + key +
                                        "\" must start with a state number");
        const std::string name = key.substr(comma + 1);
        int sym = -1;
        if (name == "<")
            sym = m.left_marker();
        else if (name == ">")
            sym = m.right_marker();
        else
            for (Letter x = 0; x < alphabet.size(); ++x)
                if (alphabet.name(x) == name) sym = x;
        if (sym < 0)
            throw std::invalid_argument("transition symbol \"" + name +
                                        "\" is not a letter or endmarker");
        if (!value.is_array() || value.size() != 2 ||
            !value[0].is_number_integer() || !value[1].is_string())
            throw std::invalid_argument("each transition must be [to, move]");
        const std::string move = value[1].get<std::string>();
        Move mv = Move::Stay;
        if (move == "L")
            mv = Move::Left;
        else if (move == "R")
            mv = Move::Right;
        else if (move != "S")
            throw std::invalid_argument("move must be \"L\", \"R\", or \"S\"");
        m.set_step(from, sym, value[0].get<int>(), mv);
    }
    m.check_valid();
    return m;
}

std::string chrobak_to_json(const ChrobakNf& nf) {
    nf.check_valid();
    json doc;
    json path = json::array();
    for (char f : nf.path) path.push_back(f ? 1 : 0);
    doc["path"] = std::move(path);
    json cycles = json::array();
    for (const ChrobakCycle& c : nf.cycles) {
        json cycle;
        cycle["length"] = c.length;
        json flags = json::array();
        for (char f : c.flags) flags.push_back(f ? 1 : 0);
        cycle["flags"] = std::move(flags);
        cycles.push_back(std::move(cycle));
    }
    doc["cycles"] = std::move(cycles);
    return dump_canonical(doc);
}

}  // namespace pareq
