#ifndef PAREQ_AUTOMATA_HPP
#define PAREQ_AUTOMATA_HPP

#include <string>
#include <string_view>
#include <vector>

namespace pareq {

using State = int;
using Letter = int;

// A word is a sequence of letter indices into an Alphabet.
using Word = std::vector<Letter>;

// Ordered list of distinct letter names. The list order is the canonical
// letter order used by every construction in this library.
struct Alphabet {
    std::vector<std::string> letters;

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(letters.size()); }
    const std::string& name(Letter t) const { return letters.at(t); }

    // Index of a letter name, or -1 when absent.
    int index_of(std::string_view name) const;

    bool operator==(const Alphabet&) const = default;
};

// Builds a word from one-character letter names ("ab" -> [a, b]).
// Only meant for tests and CLI conveniences; rejects unknown characters.
Word make_word(const Alphabet& alphabet, std::string_view text);
std::string word_text(const Alphabet& alphabet, const Word& word);

// Nondeterministic finite automaton without epsilon transitions.
// States are 0..num_states-1; transitions[q][t] is a sorted target list.
// labels carry human-readable provenance for DOT output and debugging and
// never influence any construction.
struct Nfa {
    Alphabet alphabet;
    int num_states = 0;
    State initial = 0;
    std::vector<char> finals;
    std::vector<std::vector<std::vector<State>>> transitions;
    std::vector<std::string> labels;

    Nfa() = default;
    Nfa(Alphabet alphabet, int num_states, State initial);

    void add_transition(State from, Letter t, State to);
    bool is_final(State q) const { return finals[q] != 0; }
    void set_final(State q, bool value = true) { finals[q] = value ? 1 : 0; }
    const std::string& label(State q) const { return labels[q]; }

    // Total number of (from, letter, to) triples.
    long long transition_count() const;

    void check_valid() const;
};

// Deterministic finite automaton; transitions[q][t] == -1 means undefined.
// complete is true iff every (state, letter) pair is defined.
struct Dfa {
    Alphabet alphabet;
    int num_states = 0;
    State initial = 0;
    std::vector<char> finals;
    std::vector<std::vector<State>> transitions;
    bool complete = false;
    std::vector<std::string> labels;

    Dfa() = default;
    Dfa(Alphabet alphabet, int num_states, State initial);

    void set_transition(State from, Letter t, State to);
    State next(State q, Letter t) const { return transitions[q][t]; }
    bool is_final(State q) const { return finals[q] != 0; }
    void set_final(State q, bool value = true) { finals[q] = value ? 1 : 0; }
    const std::string& label(State q) const { return labels[q]; }

    bool compute_complete() const;  // scans the table
    Nfa as_nfa() const;

    void check_valid() const;
};

// Membership via on-the-fly subset simulation; cost O(|word| * n * fanout).
bool run_nfa(const Nfa& a, const Word& word);
bool run_dfa(const Dfa& d, const Word& word);

// Subset construction. Output is complete (the empty subset acts as the dead
// state when reachable) and contains reachable subsets only, labelled
// "{q0,q3}" style in construction order.
Dfa subset_construct(const Nfa& a);

// Returns d unchanged when already complete, otherwise adds one dead state.
Dfa complete(const Dfa& d);

// Product automaton accepting L(a) | L(b). Both inputs must be complete and
// share one alphabet; reachable pairs only. State count is at most
// a.num_states * b.num_states.
Dfa product_union(const Dfa& a, const Dfa& b);

// Minimal complete DFA for L(d): completion, reachability, partition
// refinement, then canonical BFS state numbering (letters in alphabet order).
Dfa minimize(const Dfa& d);

// Graphviz export. Layout is unspecified; labels become node names.
std::string to_dot(const Nfa& a, const std::string& name = "nfa");
std::string to_dot(const Dfa& d, const std::string& name = "dfa");

}  // namespace pareq

#endif
