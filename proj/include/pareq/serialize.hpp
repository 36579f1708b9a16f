#ifndef PAREQ_SERIALIZE_HPP
#define PAREQ_SERIALIZE_HPP

#include <string>

#include "pareq/automata.hpp"
#include "pareq/grammar.hpp"
#include "pareq/parikh.hpp"
#include "pareq/twoway.hpp"
#include "pareq/unary.hpp"

namespace pareq {

// JSON wire formats. Writers emit a canonical form (sorted keys, sorted
// lists, two-space indentation, trailing newline) so identical values
// serialize byte-identically; readers validate shape and invariants and
// throw std::invalid_argument on malformed documents. State labels are
// presentation-only and not part of the wire format.

// {"alphabet":[...], "states":N, "initial":i, "finals":[...],
//  "transitions":[[from,"letter",to],...], "kind":"nfa"|"dfa"}
std::string automaton_to_json(const Nfa& a);
std::string automaton_to_json(const Dfa& d);
Nfa nfa_from_json(const std::string& text);
Dfa dfa_from_json(const std::string& text);

// {"variables":[...], "terminals":[...], "start":"S",
//  "productions":[["B",["C","D"]], ["B",["a"]], ["S",[]]]}
std::string grammar_to_json(const Cnfg& g);
Cnfg grammar_from_json(const std::string& text);

// "nfa", "dfa", "grammar", or "2dfa", judged by the document's kind field
// or shape; anything else is malformed.
std::string json_document_kind(const std::string& text);

// {"Y":[[..],..], "Z":[{"offset":[..],"generators":[[..],..]},...]} plus a
// "preds" list when chosen predecessors are present. Linear parts are
// emitted sorted by offset then generators, with preds permuted in step.
std::string semilinear_to_json(const SemilinearRep& rep);

// {"alphabet":[...], "states":N, "initial":i, "accept":j,
//  "transitions":{"state,symbol":[to,"L"|"R"|"S"],...}} with "<" and ">"
// for the endmarkers.
std::string twoway_to_json(const TwoWayDfa& m);
TwoWayDfa twoway_from_json(const std::string& text);

// {"path":[...0/1 flags...], "cycles":[{"length":c,"flags":[...]},...]}
std::string chrobak_to_json(const ChrobakNf& nf);

}  // namespace pareq

#endif
