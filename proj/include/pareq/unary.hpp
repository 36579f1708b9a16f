#ifndef PAREQ_UNARY_HPP
#define PAREQ_UNARY_HPP

#include "pareq/automata.hpp"
#include "pareq/parikh.hpp"
#include "pareq/twoway.hpp"

namespace pareq {

// Exact description of a unary language as accepted lengths: tail lists
// acceptance for lengths 0..tail.size()-1, beyond that length l is accepted
// iff residues[(l - tail.size()) mod period]. Derived from the subset
// construction lasso, so tail and period need not be minimal.
struct UltimatelyPeriodicSet {
    std::vector<char> tail;
    Int period = 1;
    std::vector<char> residues;

    bool accepts(Int length) const;
    void check_valid() const;
};

// Normal form of a unary NFA: an initial path of `path.size()` states whose
// flags decide short inputs, then a set of disjoint cycles reached
// nondeterministically. A cycle accepts length l >= s (s = path length) iff
// flags[(entry + l - s) mod length].
struct ChrobakCycle {
    int length = 1;
    std::vector<char> flags;
    int entry = 0;
};

struct ChrobakNf {
    std::vector<char> path;
    std::vector<ChrobakCycle> cycles;

    bool accepts(Int length) const;
    int cycle_state_count() const;  // sum of cycle lengths
    Int cycle_lcm() const;          // 1 when there are no cycles
    void check_valid() const;
};

// An NFA counts as unary here when at most one letter carries transitions;
// the automaton then only decides lengths. active_letter returns that
// letter, or 0 for an automaton with no transitions at all.
bool is_unary_nfa(const Nfa& a);
Letter active_letter(const Nfa& a);

// Exact accepted-length structure via the subset-construction lasso.
// Rejects NFAs that are not unary in the sense above.
UltimatelyPeriodicSet unary_structure(const Nfa& a);

// Arithmetic-progression cover of the accepted lengths: the path length s is
// the smallest value (binary search over 0..n^2) for which every accepted
// length >= s lies on a fully-accepted progression with period <= n starting
// within one period of s. The greedy cover prefers small periods and drops
// periods that turn out redundant, keeping the cycle part lean.
ChrobakNf chrobak_normal_form(const Nfa& a);

// Complete DFA over a's alphabet equivalent to a: tail chain plus one cycle
// straight from the ultimately periodic structure; any letter other than the
// active one falls to a dead state.
Dfa unary_nfa_to_dfa(const Nfa& a);

// Two-way DFA over a's alphabet equivalent to a: one left-to-right pass runs
// the normal form's path, then one sweep per cycle in alternating
// directions; each sweep enters in a state fixed by s mod cycle length so
// the state reached at the far endmarker is the exact cycle position.
// Letters other than the active one are undefined and reject. At most
// n^2 + 1 states for an n-state input.
TwoWayDfa unary_nfa_to_2dfa(const Nfa& a);

}  // namespace pareq

#endif
