#include "pareq/fixtures.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace pareq {

namespace {

constexpr int kCycleLengths[4] = {2, 3, 5, 7};

std::string cycle_label(int len, int j) {
    return "c" + std::to_string(len) + "_" + std::to_string(j);
}

}  // namespace

Nfa example1_nfa() {
    Alphabet sigma({"a", "b"});
    Nfa a(sigma, 18, 0);
    a.labels[0] = "q0";
    int base = 1;
    for (int len : kCycleLengths) {
        for (int j = 0; j < len; ++j) {
            a.labels[base + j] = cycle_label(len, j);
            a.add_transition(base + j, 0, base + (j + 1) % len);
            if (j != 0) a.set_final(base + j);
        }
        a.add_transition(0, 1, base);
        base += len;
    }
    a.check_valid();
    return a;
}

Dfa example1_parikh_dfa() {
    Alphabet sigma({"a", "b"});
    Dfa d(sigma, 22, 0);
    const State dead = 21;
    int base = 4;
    for (int i = 0; i < 4; ++i) {
        const int len = kCycleLengths[i];
        d.labels[i] = "p" + std::to_string(i);
        for (int j = 0; j < len; ++j) {
            d.labels[base + j] = cycle_label(len, j);
            d.set_transition(base + j, 0, base + (j + 1) % len);
            d.set_transition(base + j, 1, dead);
            if (j != 0) d.set_final(base + j);
        }
        // A b after i letters a selects this cycle, entering at residue i.
        d.set_transition(i, 1, base + i % len);
        if (i + 1 < 4) d.set_transition(i, 0, i + 1);
        base += len;
    }
    d.set_transition(3, 0, dead);
    d.labels[dead] = "dead";
    d.set_transition(dead, 0, dead);
    d.set_transition(dead, 1, dead);
    d.complete = true;
    d.check_valid();
    return d;
}

std::vector<Cnfg> grammar_corpus() {
    Alphabet sigma({"a", "b"});
    std::vector<Cnfg> out;

    {
        // {ab}
        Cnfg g({"S", "A", "B"}, sigma, 0);
        g.add_binary(0, 1, 2);
        g.add_terminal(1, 0);
        g.add_terminal(2, 1);
        out.push_back(std::move(g));
    }
    {
        // {epsilon}
        Cnfg g({"S"}, sigma, 0);
        g.start_epsilon = true;
        out.push_back(std::move(g));
    }
    {
        // {aa}
        Cnfg g({"S", "A"}, sigma, 0);
        g.add_binary(0, 1, 1);
        g.add_terminal(1, 0);
        out.push_back(std::move(g));
    }
    {
        // {a, b, ab}
        Cnfg g({"S", "A", "B"}, sigma, 0);
        g.add_binary(0, 1, 2);
        g.add_terminal(0, 0);
        g.add_terminal(0, 1);
        g.add_terminal(1, 0);
        g.add_terminal(2, 1);
        out.push_back(std::move(g));
    }
    out.push_back(witness_grammar(3));  // {ab}
    out.push_back(witness_grammar(4));  // {abab}
    {
        // {a^(2k) : k >= 1}; D mirrors S because S may not appear on a
        // right side.
        Cnfg g({"S", "A", "E", "D"}, sigma, 0);
        g.add_binary(0, 1, 1);
        g.add_binary(0, 1, 2);
        g.add_binary(2, 1, 3);
        g.add_binary(3, 1, 1);
        g.add_binary(3, 1, 2);
        g.add_terminal(1, 0);
        out.push_back(std::move(g));
    }
    {
        // {aaa}
        Cnfg g({"S", "A", "P"}, sigma, 0);
        g.add_binary(0, 1, 2);
        g.add_binary(2, 1, 1);
        g.add_terminal(1, 0);
        out.push_back(std::move(g));
    }
    {
        // {a^n b : n >= 1}; T mirrors S.
        Cnfg g({"S", "T", "A", "B"}, sigma, 0);
        g.add_binary(0, 2, 3);
        g.add_binary(0, 2, 1);
        g.add_binary(1, 2, 3);
        g.add_binary(1, 2, 1);
        g.add_terminal(2, 0);
        g.add_terminal(3, 1);
        out.push_back(std::move(g));
    }
    {
        // {ab, epsilon}; C has no productions, so S -> AC is unproductive.
        Cnfg g({"S", "A", "B", "C"}, sigma, 0);
        g.add_binary(0, 1, 2);
        g.add_binary(0, 1, 3);
        g.add_terminal(1, 0);
        g.add_terminal(2, 1);
        g.start_epsilon = true;
        out.push_back(std::move(g));
    }

    for (const Cnfg& g : out) g.check_valid();
    return out;
}

namespace {

struct Draw {
    std::mt19937_64 eng;

    explicit Draw(std::uint64_t seed) : eng(seed) {}

    Int below(Int k) { return static_cast<Int>(eng() % static_cast<std::uint64_t>(k)); }
};

}  // namespace

Nfa random_nfa(std::uint64_t seed, int num_states, int alphabet_size) {
    if (num_states < 1) throw std::invalid_argument("need at least one state");
    if (alphabet_size < 1 || alphabet_size > 26)
        throw std::invalid_argument("alphabet size must be in 1..26");
    std::vector<std::string> names;
    for (int t = 0; t < alphabet_size; ++t)
        names.emplace_back(1, static_cast<char>('a' + t));
    Draw rng(seed);
    Nfa a(Alphabet(std::move(names)), num_states, 0);
    for (State q = 0; q < num_states; ++q) {
        a.labels[q] = "q" + std::to_string(q);
        for (Letter t = 0; t < alphabet_size; ++t) {
            const Int shape = rng.below(10);
            const int fanout = shape < 4 ? 0 : shape < 9 ? 1 : 2;
            for (int e = 0; e < fanout; ++e)
                a.add_transition(q, t, static_cast<State>(rng.below(num_states)));
        }
        if (rng.below(4) == 0) a.set_final(q);
    }
    a.check_valid();
    return a;
}

Nfa random_unary_nfa(std::uint64_t seed, int num_states) {
    if (num_states < 1) throw std::invalid_argument("need at least one state");
    Draw rng(seed);
    Nfa a(Alphabet({"a"}), num_states, 0);
    for (State q = 0; q < num_states; ++q) {
        a.labels[q] = "q" + std::to_string(q);
        const Int shape = rng.below(10);
        const int fanout = shape < 3 ? 0 : shape < 8 ? 1 : 2;
        for (int e = 0; e < fanout; ++e)
            a.add_transition(q, 0, static_cast<State>(rng.below(num_states)));
        if (rng.below(3) == 0) a.set_final(q);
    }
    a.check_valid();
    return a;
}

SemilinearRep random_nonunary_rep(std::uint64_t seed, int dim) {
    if (dim < 2) throw std::invalid_argument("nonunary vectors need dimension >= 2");
    Draw rng(seed);
    auto nonunary_vec = [&](Int hi) {
        ParikhVec v(static_cast<size_t>(dim));
        do {
            for (int c = 0; c < dim; ++c) v[static_cast<size_t>(c)] = rng.below(hi + 1);
        } while (is_unary_vec(v));
        return v;
    };

    SemilinearRep rep(dim);
    const Int finite = rng.below(3);
    for (Int i = 0; i < finite; ++i) rep.finite_part.insert(nonunary_vec(4));
    const Int parts = 1 + rng.below(3);
    for (Int i = 0; i < parts; ++i) {
        // Small offsets on purpose: they make fresh-predecessor choices run
        // out, which is what exercises the unrolling path downstream.
        ParikhVec offset = nonunary_vec(2);
        std::vector<ParikhVec> gens;
        const Int count = rng.below(static_cast<Int>(dim) + 1);
        for (Int j = 0; j < count; ++j) {
            ParikhVec g(static_cast<size_t>(dim));
            for (int c = 0; c < dim; ++c) g[static_cast<size_t>(c)] = rng.below(3);
            gens.push_back(std::move(g));
        }
        for (LinearSet& z : independence_reduce(LinearSet(std::move(offset), std::move(gens)))) {
            if (z.generators.empty())
                rep.finite_part.insert(std::move(z.offset));
            else
                rep.linear_parts.push_back(std::move(z));
        }
    }
    rep.check_valid();
    return rep;
}

}  // namespace pareq
