#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pareq/automata.hpp"
#include "pareq/fixtures.hpp"
#include "pareq/parikh.hpp"

using namespace pareq;

TEST_CASE("vector helpers order and measure componentwise") {
    CHECK(vec_leq({1, 2}, {1, 3}));
    CHECK_FALSE(vec_leq({2, 0}, {1, 3}));
    CHECK(vec_lex_less({1, 9}, {2, 0}));
    CHECK_FALSE(vec_lex_less({1, 2}, {1, 2}));
    CHECK(is_unary_vec({0, 0}));
    CHECK(is_unary_vec({0, 5}));
    CHECK_FALSE(is_unary_vec({1, 5}));
    CHECK(inf_norm({3, 7, 2}) == 7);
    CHECK(sum({3, 7, 2}) == 12);
}

TEST_CASE("checked arithmetic rejects overflow") {
    const Int big = INT64_MAX / 2 + 1;
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(4, 5) == 20);
    CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 3), std::overflow_error);
}

TEST_CASE("linear set membership solves the generator equation") {
    const LinearSet z({1, 1}, {{2, 0}, {0, 3}});
    CHECK(linear_set_membership({1, 1}, z));
    CHECK(linear_set_membership({5, 7}, z));
    CHECK_FALSE(linear_set_membership({2, 1}, z));
    CHECK_FALSE(linear_set_membership({0, 0}, z));

    // Dependent generators need a real search, not greedy subtraction.
    const LinearSet dep({0, 0}, {{2, 1}, {1, 2}, {3, 3}});
    CHECK(linear_set_membership({3, 3}, dep));
    CHECK(linear_set_membership({4, 5}, dep));
    CHECK_FALSE(linear_set_membership({1, 0}, dep));
}

TEST_CASE("semilinear membership covers finite part and all parts") {
    SemilinearRep rep(2);
    rep.finite_part = {{4, 0}};
    rep.linear_parts = {LinearSet({1, 1}, {{1, 0}}), LinearSet({0, 2}, {{0, 2}})};
    rep.check_valid();
    CHECK(semilinear_membership({4, 0}, rep));
    CHECK(semilinear_membership({9, 1}, rep));
    CHECK(semilinear_membership({0, 6}, rep));
    CHECK_FALSE(semilinear_membership({0, 5}, rep));
    CHECK_FALSE(semilinear_membership({5, 0}, rep));
}

TEST_CASE("semilinear box lists exactly the members inside the box") {
    SemilinearRep rep(2);
    rep.linear_parts = {LinearSet({1, 0}, {{1, 1}})};
    const std::set<ParikhVec> box = semilinear_box(rep, 3);
    CHECK(box == std::set<ParikhVec>{{1, 0}, {2, 1}, {3, 2}});
}

TEST_CASE("independent indices pick distinct nonzero components") {
    const std::vector<int> picked = independent_indices({{2, 1}, {1, 1}});
    REQUIRE(picked.size() == 2);
    CHECK(picked[0] != picked[1]);
    const std::vector<ParikhVec> vecs = {{2, 1}, {1, 1}};
    for (int j = 0; j < 2; ++j) CHECK(vecs[j][picked[j]] != 0);

    CHECK(independent_indices({}).empty());
    CHECK(independent_indices({{3, 1}}).size() == 1);
    // Dependent input is rejected rather than silently thinned.
    CHECK_THROWS_AS(independent_indices({{1, 0}, {2, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(independent_indices({{1, 2}, {0, 1}, {1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("independence reduction keeps the set and gains independence") {
    const LinearSet z({1, 1}, {{1, 1}, {2, 2}, {1, 0}});
    const std::vector<LinearSet> parts = independence_reduce(z);
    for (const LinearSet& part : parts) {
        CHECK(part.independent);
        const std::vector<int> idx = independent_indices(part.generators);
        CHECK(idx.size() == part.generators.size());
    }
    // Same members inside a generous box.
    const Int box = 8;
    std::set<ParikhVec> before;
    std::set<ParikhVec> after;
    for (Int x = 0; x <= box; ++x)
        for (Int y = 0; y <= box; ++y) {
            const ParikhVec v = {x, y};
            if (linear_set_membership(v, z)) before.insert(v);
            for (const LinearSet& part : parts)
                if (linear_set_membership(v, part)) {
                    after.insert(v);
                    break;
                }
        }
    CHECK(before == after);
}

TEST_CASE("graph-walk image equals brute-force word image") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Nfa a = random_nfa(seed, 4, 2);
        CHECK(parikh_image_bounded(a, 6) == parikh_image_bounded_words(a, 6));
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Nfa a = random_nfa(seed, 3, 3);
        CHECK(parikh_image_bounded(a, 5) == parikh_image_bounded_words(a, 5));
    }
}

TEST_CASE("dfa image matches the image of the same automaton as an nfa") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Dfa d = subset_construct(random_nfa(seed, 4, 2));
        CHECK(parikh_image_bounded(d, 6) == parikh_image_bounded(d.as_nfa(), 6));
    }
}

TEST_CASE("image bounds reject negative caps") {
    const Nfa a = random_nfa(0, 3, 2);
    CHECK_THROWS_AS(parikh_image_bounded(a, -1), std::invalid_argument);
    CHECK_THROWS_AS(parikh_image_bounded_words(a, -1), std::invalid_argument);
}
