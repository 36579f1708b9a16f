#ifndef PAREQ_GRAMMAR_HPP
#define PAREQ_GRAMMAR_HPP

#include <set>
#include <string>
#include <vector>

#include "pareq/automata.hpp"
#include "pareq/parikh.hpp"
#include "pareq/twoway.hpp"

namespace pareq {

// B -> C D, by variable index.
struct CnfBinary {
    int lhs = 0;
    int left = 0;
    int right = 0;
    auto operator<=>(const CnfBinary&) const = default;
};

// B -> a, by variable and letter index.
struct CnfTerminal {
    int lhs = 0;
    Letter letter = 0;
    auto operator<=>(const CnfTerminal&) const = default;
};

// Context-free grammar in Chomsky normal form: every production is either
// binary (right-side variables never the start variable), a single
// terminal, or the empty word from the start variable (start_epsilon).
struct Cnfg {
    std::vector<std::string> variables;
    Alphabet terminals;
    int start = 0;
    std::vector<CnfBinary> binary;
    std::vector<CnfTerminal> terminal;
    bool start_epsilon = false;

    Cnfg() = default;
    Cnfg(std::vector<std::string> variables, Alphabet terminals, int start);

    int num_variables() const { return static_cast<int>(variables.size()); }
    void add_binary(int lhs, int left, int right);
    void add_terminal(int lhs, Letter t);
    void check_valid() const;
};

// True iff the start variable derives w.
bool cyk_member(const Cnfg& g, const Word& w);

// Splits a grammar by word shape. nonunary_part generates exactly the
// input's words built from at least two distinct letters: its variables are
// a fresh start plus one copy of every non-start variable per letter, the
// copy (B,i) deriving exactly the words B derives that contain letter i,
// and the fresh start pairing two copies with distinct letters.
// unary_parts[t] keeps only the letter-t terminal productions, so it
// generates exactly the input words of shape a_t^k (the empty word
// included when the input generates it). The union of all parts' languages
// is the input's language. Variable counts: m*h - m + 1 and h.
struct CfgDecomposition {
    Cnfg nonunary_part;
    std::vector<Cnfg> unary_parts;
};

CfgDecomposition decompose_cfg(const Cnfg& g);

// Letter-count-equivalent NFA for a grammar with h variables: states are
// the reachable multisets of at most h+1 pending variables (at most
// C(2h+1, h) of them), starting from the start variable alone and
// accepting with no variable pending. Reading a letter discharges a
// pending variable through a terminal production; binary productions are
// folded in as silent multiset expansions under the size bound.
Nfa cfg_to_parikh_nfa(const Cnfg& g);

// Letter-count-equivalent complete DFA for a grammar: decompose, convert
// the nonunary part through the NFA above and the nonunary determinizer,
// convert each single-letter part through the NFA above and the unary
// determinizer, and take the product union.
Dfa cfg_to_parikh_dfa(const Cnfg& g);

// Letter-count-equivalent two-way DFA for a grammar: like
// cfg_to_parikh_dfa but the single-letter parts become two-way sweep
// automata and the parts are joined by sequential_union.
TwoWayDfa cfg_to_parikh_2dfa(const Cnfg& g);

// Grammar with h >= 3 variables generating the single word (ab)^(2^(h-3)):
// doubling variables A_j derive (ab)^(2^j). A compact grammar whose
// letter-count-equivalent DFAs need many states.
Cnfg witness_grammar(int h);

// Exactly {psi(w) : w in L(g), |w| <= bound}, computed as a fixpoint over
// per-variable image sets (never enumerating words).
std::set<ParikhVec> parikh_image_bounded(const Cnfg& g, Int bound);

// Same set computed the slow way: try every word up to the bound.
std::set<ParikhVec> parikh_image_bounded_words(const Cnfg& g, Int bound);

}  // namespace pareq

#endif
