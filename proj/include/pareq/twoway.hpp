#ifndef PAREQ_TWOWAY_HPP
#define PAREQ_TWOWAY_HPP

#include <optional>

#include "pareq/automata.hpp"
#include "pareq/parikh.hpp"

namespace pareq {

enum class Move { Left, Right, Stay };

// Two-way deterministic finite automaton over the tape |- w -|. Tape symbol
// indices are 0..m-1 for alphabet letters, m for the left endmarker and m+1
// for the right endmarker. The head starts on the first input symbol (on the
// right endmarker when the input is empty). The machine accepts exactly when
// it enters the single accepting state, which has no outgoing transitions;
// an undefined transition halts and rejects.
struct TwoWayDfa {
    struct Step {
        State to = 0;
        Move move = Move::Stay;
    };

    Alphabet alphabet;
    int num_states = 0;
    State initial = 0;
    State accept = 0;
    std::vector<std::vector<std::optional<Step>>> transitions;
    std::vector<std::string> labels;

    TwoWayDfa() = default;
    TwoWayDfa(Alphabet alphabet, int num_states, State initial, State accept);

    int left_marker() const { return alphabet.size(); }
    int right_marker() const { return alphabet.size() + 1; }
    int num_symbols() const { return alphabet.size() + 2; }

    void set_step(State from, int symbol, State to, Move move);
    long long transition_count() const;

    void check_valid() const;
};

enum class Verdict { Accept, RejectHalt, RejectLoop };

struct RunOutcome {
    Verdict verdict = Verdict::RejectHalt;
    long long steps = 0;
};

// Exact simulation. A run that revisits a (state, head position)
// configuration, or exceeds num_states * (|word| + 2) steps, rejects as a
// loop. Moving left off the left endmarker or right off the right endmarker
// is rejected as an invalid machine.
RunOutcome simulate_2dfa(const TwoWayDfa& m, const Word& word);
bool accepts_2dfa(const TwoWayDfa& m, const Word& word);

// One-way DFA as a 2DFA: one left-to-right sweep, final states step into the
// accepting state on the right endmarker. Adds exactly one state.
TwoWayDfa dfa_to_2dfa(const Dfa& d);

// Chains halting 2DFAs over one alphabet into a machine for the union of
// their languages without adding states: accepting transitions of all but
// the last component are rewired to the last component's accepting state,
// and each component's former accepting state is recycled as the "failed,
// rewind and try the next component" state (every undefined transition of
// component i enters it; it walks left to the left endmarker and steps right
// into the next component's initial state).
TwoWayDfa sequential_union(const std::vector<TwoWayDfa>& components);

// Letter-count images of accepted words of length <= bound, by running the
// machine on every word. Exponential in the bound.
std::set<ParikhVec> parikh_image_bounded_words(const TwoWayDfa& m, Int bound);

// Same, restricted to words carrying at most rare_bound occurrences of
// letters other than `common`. Polynomial in bound for fixed rare_bound,
// which makes large-bound simulation checks feasible for languages whose
// counts are known to concentrate on one letter.
std::set<ParikhVec> parikh_image_sparse_words(const TwoWayDfa& m, Int bound,
                                              Letter common, Int rare_bound);

// Full pipeline: decompose the NFA, convert the nonunary core via the
// deterministic construction and lift it, convert each single-letter part to
// a 2DFA sweep, then chain everything with sequential_union.
TwoWayDfa nfa_to_parikh_2dfa(const Nfa& a);

}  // namespace pareq

#endif
