#ifndef PAREQ_FIXTURES_HPP
#define PAREQ_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "pareq/automata.hpp"
#include "pareq/grammar.hpp"
#include "pareq/parikh.hpp"

namespace pareq {

// 18-state NFA over {a,b} for {b a^j : j mod 210 != 0}: an initial state
// with b-edges into four disjoint a-cycles of lengths 2, 3, 5 and 7, each
// entered at its residue-0 state and accepting at every other residue.
Nfa example1_nfa();

// Hand-built complete 22-state DFA with the same letter-count image as
// example1_nfa: an a-path of four states picks one cycle by the position of
// the single b, entering cycle i pre-shifted by the i-1 letters a already
// read, so cycle states always track the total a-count; a dead state
// completes the table.
Dfa example1_parikh_dfa();

// Ten grammars (at most four variables, two-letter alphabet) covering
// finite, infinite, unary, empty-word and unproductive-variable cases.
std::vector<Cnfg> grammar_corpus();

// Deterministic seeded generators shared by tests, the report and the CLI.
// Draws come from std::mt19937_64 reduced by modulo, so a given seed yields
// the same object on every platform and standard library.
Nfa random_nfa(std::uint64_t seed, int num_states, int alphabet_size);
Nfa random_unary_nfa(std::uint64_t seed, int num_states);

// Random valid input for normalize_offsets: every finite-part element and
// every offset is nonunary, generator lists are already independent.
SemilinearRep random_nonunary_rep(std::uint64_t seed, int dim);

}  // namespace pareq

#endif
