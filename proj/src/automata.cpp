#include "pareq/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pareq {

Alphabet::Alphabet(std::vector<std::string> names) : letters(std::move(names)) {
    if (letters.empty())
        throw std::invalid_argument("alphabet must not be empty");
    std::set<std::string> seen;
    for (const auto& s : letters) {
        if (s.empty())
            throw std::invalid_argument("alphabet letter name must not be empty");
        if (!seen.insert(s).second)
            throw std::invalid_argument("duplicate alphabet letter: " + s);
    }
}

int Alphabet::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (letters[i] == name) return i;
    return -1;
}

Word make_word(const Alphabet& alphabet, std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        int t = alphabet.index_of(std::string_view(&c, 1));
        if (t < 0)
            throw std::invalid_argument(std::string("letter not in alphabet: ") + c);
        w.push_back(t);
    }
    return w;
}

std::string word_text(const Alphabet& alphabet, const Word& word) {
    std::string s;
    for (Letter t : word) s += alphabet.name(t);
    return s;
}

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "q" + std::to_string(i);
    return labels;
}

void check_letter(const Alphabet& alphabet, Letter t) {
    if (t < 0 || t >= alphabet.size())
        throw std::invalid_argument("letter index out of range: " + std::to_string(t));
}

}  // namespace

Nfa::Nfa(Alphabet alphabet_, int num_states_, State initial_)
    : alphabet(std::move(alphabet_)),
      num_states(num_states_),
      initial(initial_),
      finals(num_states_, 0),
      transitions(num_states_, std::vector<std::vector<State>>(alphabet.size())),
      labels(default_labels(num_states_)) {
    if (num_states <= 0)
        throw std::invalid_argument("automaton needs at least one state");
    if (initial < 0 || initial >= num_states)
        throw std::invalid_argument("initial state out of range");
}

void Nfa::add_transition(State from, Letter t, State to) {
    check_letter(alphabet, t);
    if (from < 0 || from >= num_states || to < 0 || to >= num_states)
        throw std::invalid_argument("transition endpoint out of range");
    auto& targets = transitions[from][t];
    auto it = std::lower_bound(targets.begin(), targets.end(), to);
    if (it == targets.end() || *it != to) targets.insert(it, to);
}

long long Nfa::transition_count() const {
    long long total = 0;
    for (const auto& row : transitions)
        for (const auto& targets : row) total += static_cast<long long>(targets.size());
    return total;
}

void Nfa::check_valid() const {
    if (num_states <= 0) throw std::invalid_argument("automaton needs at least one state");
    if (initial < 0 || initial >= num_states)
        throw std::invalid_argument("initial state out of range");
    if (static_cast<int>(finals.size()) != num_states ||
        static_cast<int>(transitions.size()) != num_states ||
        static_cast<int>(labels.size()) != num_states)
        throw std::invalid_argument("automaton table sizes disagree with state count");
    for (const auto& row : transitions) {
        if (static_cast<int>(row.size()) != alphabet.size())
            throw std::invalid_argument("transition row size disagrees with alphabet");
        for (const auto& targets : row)
            for (State q : targets)
                if (q < 0 || q >= num_states)
                    throw std::invalid_argument("transition target out of range");
    }
}

Dfa::Dfa(Alphabet alphabet_, int num_states_, State initial_)
    : alphabet(std::move(alphabet_)),
      num_states(num_states_),
      initial(initial_),
      finals(num_states_, 0),
      transitions(num_states_, std::vector<State>(alphabet.size(), -1)),
      labels(default_labels(num_states_)) {
    if (num_states <= 0)
        throw std::invalid_argument("automaton needs at least one state");
    if (initial < 0 || initial >= num_states)
        throw std::invalid_argument("initial state out of range");
}

void Dfa::set_transition(State from, Letter t, State to) {
    check_letter(alphabet, t);
    if (from < 0 || from >= num_states || to < 0 || to >= num_states)
        throw std::invalid_argument("transition endpoint out of range");
    if (transitions[from][t] != -1 && transitions[from][t] != to)
        throw std::logic_error("conflicting transition would make the DFA nondeterministic");
    transitions[from][t] = to;
}

bool Dfa::compute_complete() const {
    for (const auto& row : transitions)
        for (State q : row)
            if (q == -1) return false;
    return true;
}

Nfa Dfa::as_nfa() const {
    Nfa a(alphabet, num_states, initial);
    a.finals = finals;
    a.labels = labels;
    for (State q = 0; q < num_states; ++q)
        for (Letter t = 0; t < alphabet.size(); ++t)
            if (transitions[q][t] != -1) a.add_transition(q, t, transitions[q][t]);
    return a;
}

void Dfa::check_valid() const {
    if (num_states <= 0) throw std::invalid_argument("automaton needs at least one state");
    if (initial < 0 || initial >= num_states)
        throw std::invalid_argument("initial state out of range");
    if (static_cast<int>(finals.size()) != num_states ||
        static_cast<int>(transitions.size()) != num_states ||
        static_cast<int>(labels.size()) != num_states)
        throw std::invalid_argument("automaton table sizes disagree with state count");
    for (const auto& row : transitions) {
        if (static_cast<int>(row.size()) != alphabet.size())
            throw std::invalid_argument("transition row size disagrees with alphabet");
        for (State q : row)
            if (q < -1 || q >= num_states)
                throw std::invalid_argument("transition target out of range");
    }
    if (complete && !compute_complete())
        throw std::invalid_argument("automaton marked complete but has undefined transitions");
}

bool run_nfa(const Nfa& a, const Word& word) {
    std::vector<char> current(a.num_states, 0), next(a.num_states, 0);
    current[a.initial] = 1;
    for (Letter t : word) {
        check_letter(a.alphabet, t);
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (State q = 0; q < a.num_states; ++q) {
            if (!current[q]) continue;
            for (State p : a.transitions[q][t]) {
                next[p] = 1;
                any = true;
            }
        }
        if (!any) return false;
        std::swap(current, next);
    }
    for (State q = 0; q < a.num_states; ++q)
        if (current[q] && a.is_final(q)) return true;
    return false;
}

bool run_dfa(const Dfa& d, const Word& word) {
    State q = d.initial;
    for (Letter t : word) {
        check_letter(d.alphabet, t);
        q = d.transitions[q][t];
        if (q == -1) return false;
    }
    return d.is_final(q);
}

Dfa subset_construct(const Nfa& a) {
    const int m = a.alphabet.size();
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    std::vector<std::vector<State>> table;
    std::vector<char> finals;
    std::vector<std::string> labels;

    auto subset_label = [&](const std::vector<State>& subset) {
        std::string s = "{";
        for (size_t i = 0; i < subset.size(); ++i) {
            if (i) s += ",";
            s += a.label(subset[i]);
        }
        return s + "}";
    };

    auto intern = [&](std::vector<State> subset) {
        auto it = index.find(subset);
        if (it != index.end()) return it->second;
        State id = static_cast<State>(subsets.size());
        index.emplace(subset, id);
        bool fin = false;
        for (State q : subset) fin = fin || a.is_final(q);
        finals.push_back(fin ? 1 : 0);
        labels.push_back(subset_label(subset));
        subsets.push_back(std::move(subset));
        table.emplace_back(m, -1);
        return id;
    };

    std::queue<State> work;
    work.push(intern({a.initial}));
    while (!work.empty()) {
        State id = work.front();
        work.pop();
        for (Letter t = 0; t < m; ++t) {
            std::set<State> targets;
            for (State q : subsets[id]) {
                const auto& out = a.transitions[q][t];
                targets.insert(out.begin(), out.end());
            }
            std::vector<State> next(targets.begin(), targets.end());
            size_t before = subsets.size();
            State succ = intern(std::move(next));
            table[id][t] = succ;
            if (subsets.size() > before) work.push(succ);
        }
    }

    Dfa d(a.alphabet, static_cast<int>(subsets.size()), 0);
    d.finals = finals;
    d.labels = labels;
    d.transitions = table;
    d.complete = true;
    return d;
}

Dfa complete(const Dfa& d) {
    if (d.compute_complete()) {
        Dfa out = d;
        out.complete = true;
        return out;
    }
    Dfa out = d;
    State dead = out.num_states;
    out.num_states += 1;
    out.finals.push_back(0);
    out.labels.push_back("dead");
    out.transitions.emplace_back(out.alphabet.size(), dead);
    for (State q = 0; q < dead; ++q)
        for (Letter t = 0; t < out.alphabet.size(); ++t)
            if (out.transitions[q][t] == -1) out.transitions[q][t] = dead;
    out.complete = true;
    return out;
}

Dfa product_union(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet == b.alphabet))
        throw std::invalid_argument("product_union requires a shared alphabet");
    if (!a.compute_complete() || !b.compute_complete())
        throw std::invalid_argument("product_union requires complete inputs");
    const int m = a.alphabet.size();

    std::map<std::pair<State, State>, State> index;
    std::vector<std::pair<State, State>> pairs;
    std::vector<std::vector<State>> table;

    auto intern = [&](State p, State q) {
        auto key = std::make_pair(p, q);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        State id = static_cast<State>(pairs.size());
        index.emplace(key, id);
        pairs.push_back(key);
        table.emplace_back(m, -1);
        return id;
    };

    std::queue<State> work;
    work.push(intern(a.initial, b.initial));
    while (!work.empty()) {
        State id = work.front();
        work.pop();
        auto [p, q] = pairs[id];
        for (Letter t = 0; t < m; ++t) {
            size_t before = pairs.size();
            State succ = intern(a.transitions[p][t], b.transitions[q][t]);
            table[id][t] = succ;
            if (pairs.size() > before) work.push(succ);
        }
    }

    Dfa d(a.alphabet, static_cast<int>(pairs.size()), 0);
    d.transitions = table;
    d.complete = true;
    for (State id = 0; id < d.num_states; ++id) {
        auto [p, q] = pairs[id];
        d.finals[id] = (a.is_final(p) || b.is_final(q)) ? 1 : 0;
        d.labels[id] = "(" + a.label(p) + "," + b.label(q) + ")";
    }
    return d;
}

Dfa minimize(const Dfa& input) {
    Dfa d = complete(input);
    const int m = d.alphabet.size();

    // Restrict to reachable states first.
    std::vector<State> order;
    std::vector<State> renum(d.num_states, -1);
    order.push_back(d.initial);
    renum[d.initial] = 0;
    for (size_t i = 0; i < order.size(); ++i)
        for (Letter t = 0; t < m; ++t) {
            State p = d.transitions[order[i]][t];
            if (renum[p] == -1) {
                renum[p] = static_cast<State>(order.size());
                order.push_back(p);
            }
        }
    const int n = static_cast<int>(order.size());

    // Moore partition refinement over the reachable part.
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = d.is_final(order[i]) ? 1 : 0;
    int classes = 2;
    // A DFA with only final or only non-final states still forms one class.
    {
        std::set<int> used(cls.begin(), cls.end());
        if (used.size() == 1) {
            classes = 1;
            std::fill(cls.begin(), cls.end(), 0);
        }
    }
    for (;;) {
        std::map<std::vector<int>, int> sig_index;
        std::vector<int> next_cls(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig;
            sig.reserve(m + 1);
            sig.push_back(cls[i]);
            for (Letter t = 0; t < m; ++t)
                sig.push_back(cls[renum[d.transitions[order[i]][t]]]);
            auto it = sig_index.emplace(std::move(sig), static_cast<int>(sig_index.size())).first;
            next_cls[i] = it->second;
        }
        int next_classes = static_cast<int>(sig_index.size());
        cls = std::move(next_cls);
        if (next_classes == classes) break;
        classes = next_classes;
    }

    // Canonical numbering: BFS over classes from the initial state's class.
    std::vector<int> canon(classes, -1);
    std::vector<int> rep;  // representative (reachable index) per canon id
    canon[cls[0]] = 0;
    rep.push_back(0);
    for (size_t i = 0; i < rep.size(); ++i)
        for (Letter t = 0; t < m; ++t) {
            int c = cls[renum[d.transitions[order[rep[i]]][t]]];
            if (canon[c] == -1) {
                canon[c] = static_cast<int>(rep.size());
                rep.push_back(-1);
                // find a representative for c
                for (int j = 0; j < n; ++j)
                    if (cls[j] == c) {
                        rep.back() = j;
                        break;
                    }
            }
        }

    Dfa out(d.alphabet, classes, 0);
    out.complete = true;
    for (int c = 0; c < classes; ++c) {
        int r = rep[c];
        out.finals[c] = d.is_final(order[r]) ? 1 : 0;
        out.labels[c] = d.label(order[r]);
        for (Letter t = 0; t < m; ++t)
            out.transitions[c][t] = canon[cls[renum[d.transitions[order[r]][t]]]];
    }
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

template <typename EdgeFn>
std::string dot_graph(const std::string& name, int num_states, State initial,
                      const std::vector<char>& finals, const std::vector<std::string>& labels,
                      EdgeFn&& edges) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (State q = 0; q < num_states; ++q)
        os << "  s" << q << " [shape=" << (finals[q] ? "doublecircle" : "circle")
           << ", label=\"" << dot_escape(labels[q]) << "\"];\n";
    os << "  __start -> s" << initial << ";\n";
    edges(os);
    os << "}\n";
    return os.str();
}

}  // namespace

std::string to_dot(const Nfa& a, const std::string& name) {
    return dot_graph(name, a.num_states, a.initial, a.finals, a.labels, [&](std::ostringstream& os) {
        for (State q = 0; q < a.num_states; ++q)
            for (Letter t = 0; t < a.alphabet.size(); ++t)
                for (State p : a.transitions[q][t])
                    os << "  s" << q << " -> s" << p << " [label=\"" << dot_escape(a.alphabet.name(t))
                       << "\"];\n";
    });
}

std::string to_dot(const Dfa& d, const std::string& name) {
    return dot_graph(name, d.num_states, d.initial, d.finals, d.labels, [&](std::ostringstream& os) {
        for (State q = 0; q < d.num_states; ++q)
            for (Letter t = 0; t < d.alphabet.size(); ++t)
                if (d.transitions[q][t] != -1)
                    os << "  s" << q << " -> s" << d.transitions[q][t] << " [label=\""
                       << dot_escape(d.alphabet.name(t)) << "\"];\n";
    });
}

}  // namespace pareq
