#ifndef PAREQ_DETERMINIZE_HPP
#define PAREQ_DETERMINIZE_HPP

#include <vector>

#include "pareq/automata.hpp"
#include "pareq/parikh.hpp"

namespace pareq {

// Splits an NFA by word shape. nonunary_part accepts exactly the input
// words built from at least two distinct letters: it has a fresh initial
// state, one tagged copy per letter holding runs that have seen only that
// letter so far, and the original copy — the only part carrying accepting
// states — reached as soon as a second distinct letter shows up.
// unary_parts[t] keeps only the letter-t transitions of the input, so it
// accepts exactly the input words of shape a_t^k (the empty word included
// when the input accepts it). The union of all parts' languages is the
// input's language. Sizes: nonunary_part has n*(m+1)+1 states, each unary
// part has n.
struct NfaDecomposition {
    Nfa nonunary_part;
    std::vector<Nfa> unary_parts;
};

NfaDecomposition decompose_nfa(const Nfa& a);

// Exact semilinear description of the automaton's letter-count image. For
// every visit-set T realizable by an accepting run, the offsets are the
// images of accepting runs that visit exactly T and have length at most
// |T|^2 (length_cap overrides that bound per support when positive), and the
// generators are the images of the simple cycles lying inside T. Offsets
// subsumed inside an already-collected linear set are dropped, generator
// lists are rewritten to independent ones, zero-generator parts fold into
// the finite part, and the result is sorted canonically. Worst-case cost is
// exponential in the automaton size.
SemilinearRep extract_semilinear(const Nfa& a, Int length_cap = 0);

// Rewrites the representation (all offsets and finite-part elements must be
// nonunary) into an equivalent one carrying chosen_preds: per linear part a
// distinct nonunary vector below the offset whose max component is at most
// the part's 1-based position. Parts whose offsets are too cramped for any
// fresh choice are unrolled: a finite grid of their smallest points moves to
// the finite part and one shifted copy per generator re-enters the queue
// with a provably large offset. n is the state count of the source
// automaton (generators of an n-state automaton have components at most n,
// which bounds the unroll scan).
SemilinearRep normalize_offsets(const SemilinearRep& rep, int n);

// Trie acceptor for a finite prefix-free set of nonempty words: accepts
// exactly `words`, one trie node per distinct prefix, accepting states at
// word ends (leaves, by prefix-freeness). word_ends, when given, receives
// the end state of each input word in input order.
Dfa build_prefix_dfa(const Alphabet& alphabet, const std::vector<Word>& words,
                     std::vector<State>* word_ends = nullptr);

// Deterministic loop recipe for one linear part with chosen vector x
// (nonunary and componentwise below the offset): entry_word spells x's
// rotated word followed by the sorted spelling of the rest of the offset;
// loop_words[j] spells generator j rotated to start with chosen_letters[j],
// pairwise distinct letters picked by independent_indices (which rejects
// dependent generators) so the loops can hang off one state
// deterministically.
struct LoopAutomatonPlan {
    Word entry_word;
    std::vector<Word> loop_words;
    std::vector<Letter> chosen_letters;
};

LoopAutomatonPlan build_loop_plan(const LinearSet& z, const ParikhVec& x);

// Letter-count-equivalent complete DFA for an NFA none of whose accepted
// words is unary (rejected otherwise). Union of a prefix-tree-with-loops
// acceptor realizing the normalized linear parts and a grid acceptor
// realizing the finite part on sorted spellings.
Dfa nonunary_to_dfa(const Nfa& a, Int length_cap = 0);

// Complete DFA dispatching on the first letter: a fresh start state enters
// the one-step successor of parts[t]'s initial state on letter t, after
// which the word runs inside that part. parts must hold one complete DFA
// per letter, all over the same alphabet; accept_empty controls the empty
// word alone.
Dfa unary_union_dfa(const std::vector<Dfa>& parts, bool accept_empty);

// Letter-count-equivalent complete DFA for an arbitrary NFA: decompose,
// convert the nonunary part as above, convert each single-letter part to a
// DFA, and take the product union.
Dfa nfa_to_parikh_dfa(const Nfa& a);

}  // namespace pareq

#endif
