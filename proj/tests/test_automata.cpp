#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pareq/automata.hpp"
#include "pareq/fixtures.hpp"

using namespace pareq;

namespace {

// All words over m letters with length <= max_len, shortest first.
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

// a (a|b)* b : two states, nondeterministic on 'a'.
Nfa sample_nfa() {
    Nfa a(Alphabet({"a", "b"}), 3, 0);
    a.add_transition(0, 0, 1);
    a.add_transition(1, 0, 1);
    a.add_transition(1, 1, 1);
    a.add_transition(1, 1, 2);
    a.set_final(2);
    return a;
}

}  // namespace

TEST_CASE("alphabet maps names to indices") {
    const Alphabet ab({"a", "b"});
    CHECK(ab.size() == 2);
    CHECK(ab.name(1) == "b");
    CHECK(ab.index_of("b") == 1);
    CHECK(ab.index_of("c") == -1);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({""}), std::invalid_argument);
}

TEST_CASE("words convert to and from text") {
    const Alphabet ab({"a", "b"});
    const Word w = make_word(ab, "abba");
    CHECK(w == Word{0, 1, 1, 0});
    CHECK(word_text(ab, w) == "abba");
    CHECK_THROWS_AS(make_word(ab, "abc"), std::invalid_argument);
}

TEST_CASE("nfa membership follows the transition relation") {
    const Nfa a = sample_nfa();
    a.check_valid();
    CHECK(a.label(0) == "q0");
    CHECK(run_nfa(a, make_word(a.alphabet, "ab")));
    CHECK(run_nfa(a, make_word(a.alphabet, "aabab")));
    CHECK_FALSE(run_nfa(a, make_word(a.alphabet, "ba")));
    CHECK_FALSE(run_nfa(a, make_word(a.alphabet, "a")));
    CHECK_FALSE(run_nfa(a, Word{}));
}

TEST_CASE("transitions keep target lists sorted and deduplicated") {
    Nfa a(Alphabet({"a"}), 3, 0);
    a.add_transition(0, 0, 2);
    a.add_transition(0, 0, 1);
    a.add_transition(0, 0, 2);
    CHECK(a.transitions[0][0] == std::vector<State>{1, 2});
    CHECK(a.transition_count() == 2);
    CHECK_THROWS_AS(a.add_transition(0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(a.add_transition(0, 1, 0), std::invalid_argument);
}

TEST_CASE("subset construction preserves the language and is complete") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Nfa a = random_nfa(seed, 4, 2);
        const Dfa d = subset_construct(a);
        d.check_valid();
        CHECK(d.complete);
        CHECK(d.compute_complete());
        for (const Word& w : all_words(2, 6))
            CHECK(run_nfa(a, w) == run_dfa(d, w));
    }
}

TEST_CASE("completion adds at most one dead state") {
    Dfa d(Alphabet({"a", "b"}), 2, 0);
    d.set_transition(0, 0, 1);
    d.set_final(1);
    const Dfa full = complete(d);
    CHECK(full.num_states == 3);
    CHECK(full.compute_complete());
    for (const Word& w : all_words(2, 5)) CHECK(run_dfa(d, w) == run_dfa(full, w));
    const Dfa again = complete(full);
    CHECK(again.num_states == full.num_states);
}

TEST_CASE("product union accepts either language") {
    const Dfa d1 = complete(subset_construct(random_nfa(3, 3, 2)));
    const Dfa d2 = complete(subset_construct(random_nfa(5, 3, 2)));
    const Dfa u = product_union(d1, d2);
    CHECK(u.num_states <= d1.num_states * d2.num_states);
    CHECK(u.compute_complete());
    for (const Word& w : all_words(2, 6))
        CHECK(run_dfa(u, w) == (run_dfa(d1, w) || run_dfa(d2, w)));
}

TEST_CASE("product union rejects incomplete or mismatched inputs") {
    Dfa partial(Alphabet({"a", "b"}), 1, 0);
    const Dfa full = complete(partial);
    CHECK_THROWS_AS(product_union(partial, full), std::invalid_argument);
    Dfa other(Alphabet({"a", "c"}), 1, 0);
    other.set_transition(0, 0, 0);
    other.set_transition(0, 1, 0);
    other.complete = true;
    CHECK_THROWS_AS(product_union(full, other), std::invalid_argument);
}

TEST_CASE("minimization reaches the unique minimal automaton") {
    // b a^j with j not divisible by 3: needs 1 + 3 + 1 = 5 states.
    Nfa a(Alphabet({"a", "b"}), 4, 0);
    a.add_transition(0, 1, 1);
    a.add_transition(1, 0, 2);
    a.add_transition(2, 0, 3);
    a.add_transition(3, 0, 1);
    a.set_final(2);
    a.set_final(3);
    const Dfa d = minimize(subset_construct(a));
    CHECK(d.num_states == 5);
    for (const Word& w : all_words(2, 7)) CHECK(run_nfa(a, w) == run_dfa(d, w));
    const Dfa again = minimize(d);
    CHECK(again.num_states == d.num_states);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Nfa r = random_nfa(seed, 4, 2);
        const Dfa m = minimize(subset_construct(r));
        for (const Word& w : all_words(2, 6)) CHECK(run_nfa(r, w) == run_dfa(m, w));
        CHECK(m.num_states <= subset_construct(r).num_states + 1);
    }
}

TEST_CASE("dot export names nodes by label") {
    const Nfa a = sample_nfa();
    const std::string dot = to_dot(a, "sample");
    CHECK(dot.find("digraph sample") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("q1") != std::string::npos);
    const std::string again = to_dot(a, "sample");
    CHECK(dot == again);
}
