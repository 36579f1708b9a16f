#ifndef PAREQ_PARIKH_HPP
#define PAREQ_PARIKH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "pareq/automata.hpp"

namespace pareq {

// All commutative-image arithmetic is exact 64-bit with overflow checks;
// nothing in this library uses floating point.
using Int = std::int64_t;

// Letter-count vector: component t counts occurrences of alphabet letter t.
using ParikhVec = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

ParikhVec vec_add(const ParikhVec& a, const ParikhVec& b);
ParikhVec vec_scale(const ParikhVec& v, Int k);

// Componentwise order: a <= b in every component.
bool vec_leq(const ParikhVec& a, const ParikhVec& b);
// Strict lexicographic order, first component most significant.
bool vec_lex_less(const ParikhVec& a, const ParikhVec& b);

// A vector is unary when at most one component is nonzero (the null vector
// counts as unary); a word is unary when its letter-count vector is.
bool is_unary_vec(const ParikhVec& v);
Int inf_norm(const ParikhVec& v);  // max component
Int sum(const ParikhVec& v);

ParikhVec parikh_vector(int alphabet_size, const Word& word);

// offset + every nonnegative integer combination of the generators.
// Construction drops zero generators; independent records that the
// generators were verified linearly independent over the integers.
struct LinearSet {
    ParikhVec offset;
    std::vector<ParikhVec> generators;
    bool independent = false;

    LinearSet() = default;
    LinearSet(ParikhVec offset, std::vector<ParikhVec> generators);

    int dim() const { return static_cast<int>(offset.size()); }
};

// Finite union of linear sets plus an explicit finite part.
// chosen_preds, when present, holds one distinguished nonunary vector per
// linear part (aligned by position); see normalize_offsets.
struct SemilinearRep {
    int dim = 0;
    std::set<ParikhVec> finite_part;
    std::vector<LinearSet> linear_parts;
    std::optional<std::vector<ParikhVec>> chosen_preds;

    explicit SemilinearRep(int dim = 0) : dim(dim) {}

    void check_valid() const;
};

bool linear_set_membership(const ParikhVec& v, const LinearSet& z);
bool semilinear_membership(const ParikhVec& v, const SemilinearRep& rep);

// Sorted spelling of a vector: a0^v[0] a1^v[1] ... (letters 0..m-1).
Word canonical_word(const ParikhVec& v);

// One-step left rotation of the sorted spelling, e.g. (4,1,2) over {a,b,c}
// becomes a^3 b c^2 a. Over nonunary vectors this map is prefix-free: no
// image is a proper prefix of another, and equal images force equal vectors.
Word shifted_word(const ParikhVec& v);

// Sorted spelling rotated to begin with letter t, e.g. (3,4,1) rotated to
// letter 1 is b^4 c a^3. Requires v[t] > 0.
Word rotate_to_letter(const ParikhVec& v, Letter t);

// Exact integer rank of the generator list (Bareiss elimination).
int integer_rank(const std::vector<ParikhVec>& vectors);

// For linearly independent vectors v_0..v_{k-1} picks pairwise distinct
// component indices t_j with v_j[t_j] != 0. Chosen deterministically by
// minor expansion; input that is not independent is rejected.
std::vector<int> independent_indices(const std::vector<ParikhVec>& vectors);

// Rewrites a linear set as a finite union of linear sets whose generator
// lists are linearly independent (each flagged independent; generators of
// every output are a subset of the input generators). The represented set
// of vectors is unchanged.
std::vector<LinearSet> independence_reduce(const LinearSet& z);

// Letter-count images of all words of length <= bound, computed by walking
// (state, count-vector) configurations of the automaton graph.
std::set<ParikhVec> parikh_image_bounded(const Nfa& a, Int bound);
std::set<ParikhVec> parikh_image_bounded(const Dfa& d, Int bound);

// Same set computed the slow way: enumerate every word of length <= bound
// and keep the accepted ones. Exponential in the bound; exists as an
// independent cross-check of the graph walk and for small fixtures.
std::set<ParikhVec> parikh_image_bounded_words(const Nfa& a, Int bound);

// All vectors of the represented set inside the box [0..box_max]^dim.
std::set<ParikhVec> semilinear_box(const SemilinearRep& rep, Int box_max);

}  // namespace pareq

#endif
