#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pareq/automata.hpp"
#include "pareq/determinize.hpp"
#include "pareq/fixtures.hpp"
#include "pareq/parikh.hpp"
#include "pareq/unary.hpp"

using namespace pareq;

namespace {

std::vector<Word> all_words(int m, int max_len) {
    std::vector<Word> words = {Word{}};
    size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const size_t end = words.size();
        for (size_t i = begin; i < end; ++i)
            for (Letter t = 0; t < m; ++t) {
                Word w = words[i];
                w.push_back(t);
                words.push_back(std::move(w));
            }
        begin = end;
    }
    return words;
}

bool is_unary_word(int m, const Word& w) {
    return is_unary_vec(parikh_vector(m, w));
}

// Image vectors inside [0..box]^m, via a word walk long enough to reach
// every such vector (their lengths are at most m * box).
std::set<ParikhVec> image_box(const Nfa& a, Int box) {
    std::set<ParikhVec> keep;
    for (const ParikhVec& v :
         parikh_image_bounded(a, box * a.alphabet.size()))
        if (inf_norm(v) <= box) keep.insert(v);
    return keep;
}

}  // namespace

TEST_CASE("decomposition splits the language by word shape") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Nfa a = random_nfa(seed, 4, 2);
        const int n = a.num_states;
        const int m = a.alphabet.size();
        const NfaDecomposition dec = decompose_nfa(a);
        CHECK(dec.nonunary_part.num_states == n * (m + 1) + 1);
        CHECK(static_cast<int>(dec.unary_parts.size()) == m);
        for (const Nfa& part : dec.unary_parts) CHECK(part.num_states == n);

        for (const Word& w : all_words(m, 6)) {
            const bool in_l = run_nfa(a, w);
            CHECK(run_nfa(dec.nonunary_part, w) ==
                  (in_l && !is_unary_word(m, w)));
            bool in_unary = false;
            for (Letter t = 0; t < m; ++t)
                if (run_nfa(dec.unary_parts[t], w)) in_unary = true;
            CHECK(in_unary == (in_l && is_unary_word(m, w)));
        }
    }
}

TEST_CASE("extraction produces exactly the image inside a box") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Nfa a = random_nfa(seed, 4, 2);
        const SemilinearRep rep = extract_semilinear(a);
        rep.check_valid();
        CHECK(semilinear_box(rep, 5) == image_box(a, 5));
    }
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const Nfa a = random_nfa(seed, 3, 3);
        const SemilinearRep rep = extract_semilinear(a);
        CHECK(semilinear_box(rep, 4) == image_box(a, 4));
    }
}

TEST_CASE("extraction accepts an explicit length cap") {
    const Nfa a = random_nfa(2, 4, 2);
    const SemilinearRep rep = extract_semilinear(a, 20);
    CHECK(semilinear_box(rep, 5) == image_box(a, 5));
    CHECK_THROWS_AS(extract_semilinear(a, -1), std::invalid_argument);
}

TEST_CASE("normalization keeps the set and marks every part") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SemilinearRep rep = random_nonunary_rep(seed, 2);
        const SemilinearRep norm = normalize_offsets(rep, 4);
        norm.check_valid();
        REQUIRE(norm.chosen_preds.has_value());
        REQUIRE(norm.chosen_preds->size() == norm.linear_parts.size());
        std::set<ParikhVec> markers;
        for (size_t i = 0; i < norm.linear_parts.size(); ++i) {
            const ParikhVec& x = (*norm.chosen_preds)[i];
            CHECK_FALSE(is_unary_vec(x));
            CHECK(vec_leq(x, norm.linear_parts[i].offset));
            CHECK(inf_norm(x) <= static_cast<Int>(i) + 1);
            CHECK(markers.insert(x).second);
        }
        CHECK(semilinear_box(rep, 10) == semilinear_box(norm, 10));
    }
}

TEST_CASE("normalization rejects unary offsets and finite elements") {
    SemilinearRep bad(2);
    bad.linear_parts = {LinearSet({0, 3}, {{1, 1}})};
    CHECK_THROWS_AS(normalize_offsets(bad, 3), std::invalid_argument);
    SemilinearRep bad2(2);
    bad2.finite_part = {{2, 0}};
    CHECK_THROWS_AS(normalize_offsets(bad2, 3), std::invalid_argument);
}

TEST_CASE("prefix automaton accepts exactly the listed words") {
    const Alphabet ab({"a", "b"});
    const std::vector<Word> words = {make_word(ab, "ab"), make_word(ab, "ba"),
                                     make_word(ab, "bba")};
    std::vector<State> ends;
    const Dfa d = build_prefix_dfa(ab, words, &ends);
    REQUIRE(ends.size() == words.size());
    for (const Word& w : all_words(2, 5))
        CHECK(run_dfa(d, w) ==
              (std::find(words.begin(), words.end(), w) != words.end()));
    for (size_t i = 0; i < words.size(); ++i) {
        State q = d.initial;
        for (Letter t : words[i]) q = d.next(q, t);
        CHECK(q == ends[i]);
    }
}

TEST_CASE("loop plans spell each generator from a distinct letter") {
    const LinearSet z({2, 1}, {{1, 1}, {2, 0}});
    LinearSet indep = z;
    indep.independent = true;
    const LoopAutomatonPlan plan = build_loop_plan(indep, {1, 1});
    REQUIRE(plan.loop_words.size() == 2);
    REQUIRE(plan.chosen_letters.size() == 2);
    CHECK(plan.chosen_letters[0] != plan.chosen_letters[1]);
    for (size_t j = 0; j < plan.loop_words.size(); ++j) {
        const Word& w = plan.loop_words[j];
        REQUIRE(!w.empty());
        CHECK(w.front() == plan.chosen_letters[j]);
        CHECK(parikh_vector(2, w) == indep.generators[j]);
    }
}

TEST_CASE("nonunary determinization rejects out-of-scope inputs") {
    Nfa eps(Alphabet({"a", "b"}), 1, 0);
    eps.set_final(0);
    CHECK_THROWS_AS(nonunary_to_dfa(eps), std::invalid_argument);

    Nfa unary(Alphabet({"a", "b"}), 2, 0);
    unary.add_transition(0, 0, 1);
    unary.set_final(1);
    CHECK_THROWS_AS(nonunary_to_dfa(unary), std::invalid_argument);
}

TEST_CASE("nonunary determinization preserves the image") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Nfa a0 = decompose_nfa(random_nfa(seed, 4, 2)).nonunary_part;
        const Dfa d = nonunary_to_dfa(a0);
        d.check_valid();
        CHECK(d.compute_complete());
        CHECK(parikh_image_bounded(d, 8) == parikh_image_bounded(a0, 8));
    }
}

TEST_CASE("unary union automaton unions single-letter languages") {
    const Alphabet ab({"a", "b"});
    // a^2k+1 over letter a; b^3k over letter b.
    Nfa ua(Alphabet({"a", "b"}), 2, 0);
    ua.add_transition(0, 0, 1);
    ua.add_transition(1, 0, 0);
    ua.set_final(1);
    Nfa ub(Alphabet({"a", "b"}), 3, 0);
    ub.add_transition(0, 1, 1);
    ub.add_transition(1, 1, 2);
    ub.add_transition(2, 1, 0);
    ub.set_final(0);
    // unary_nfa_to_dfa keeps the two-letter alphabet of each part.
    const Dfa d = unary_union_dfa(
        {unary_nfa_to_dfa(ua), unary_nfa_to_dfa(ub)}, false);
    d.check_valid();
    CHECK(d.compute_complete());
    for (const Word& w : all_words(2, 6)) {
        const bool expect = (run_nfa(ua, w) || run_nfa(ub, w)) && !w.empty();
        CHECK(run_dfa(d, w) == expect);
    }

    const Dfa with_eps = unary_union_dfa(
        {unary_nfa_to_dfa(ua), unary_nfa_to_dfa(ub)}, true);
    CHECK(run_dfa(with_eps, Word{}));
}

TEST_CASE("full pipeline matches the image on random automata") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Nfa a = random_nfa(seed, 4, 2);
        const Dfa d = nfa_to_parikh_dfa(a);
        d.check_valid();
        CHECK(d.compute_complete());
        CHECK(parikh_image_bounded(d, 8) == parikh_image_bounded(a, 8));
    }
}

TEST_CASE("fixture pair shares one image at a large bound") {
    const Nfa a = example1_nfa();
    const Dfa d = example1_parikh_dfa();
    CHECK(a.num_states == 18);
    CHECK(d.num_states == 22);
    CHECK(parikh_image_bounded(a, 40) == parikh_image_bounded(d, 40));
}
