#include "pareq/twoway.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "pareq/determinize.hpp"
#include "pareq/unary.hpp"

namespace pareq {

TwoWayDfa::TwoWayDfa(Alphabet alphabet_, int num_states_, State initial_,
                     State accept_)
    : alphabet(std::move(alphabet_)),
      num_states(num_states_),
      initial(initial_),
      accept(accept_) {
    if (num_states <= 0)
        throw std::invalid_argument("two-way automaton needs at least one state");
    if (initial < 0 || initial >= num_states || accept < 0 ||
        accept >= num_states)
        throw std::invalid_argument("two-way automaton state out of range");
    transitions.assign(num_states,
                       std::vector<std::optional<Step>>(num_symbols()));
    labels.resize(num_states);
    for (int q = 0; q < num_states; ++q) labels[q] = "q" + std::to_string(q);
}

void TwoWayDfa::set_step(State from, int symbol, State to, Move move) {
    if (from < 0 || from >= num_states || to < 0 || to >= num_states)
        throw std::invalid_argument("two-way transition state out of range");
    if (symbol < 0 || symbol >= num_symbols())
        throw std::invalid_argument("two-way transition symbol out of range");
    if (from == accept)
        throw std::invalid_argument(
            "accepting state cannot have outgoing transitions");
    auto& slot = transitions[from][symbol];
    if (slot && (slot->to != to || slot->move != move))
        throw std::logic_error("conflicting two-way transition");
    slot = Step{to, move};
}

long long TwoWayDfa::transition_count() const {
    long long count = 0;
    for (const auto& row : transitions)
        for (const auto& slot : row)
            if (slot) ++count;
    return count;
}

void TwoWayDfa::check_valid() const {
    if (num_states <= 0)
        throw std::logic_error("two-way automaton needs at least one state");
    if (initial < 0 || initial >= num_states || accept < 0 ||
        accept >= num_states)
        throw std::logic_error("two-way automaton state out of range");
    if (static_cast<int>(transitions.size()) != num_states ||
        static_cast<int>(labels.size()) != num_states)
        throw std::logic_error("two-way transition table shape is wrong");
    for (State q = 0; q < num_states; ++q) {
        if (static_cast<int>(transitions[q].size()) != num_symbols())
            throw std::logic_error("two-way transition table shape is wrong");
        for (const auto& slot : transitions[q]) {
            if (!slot) continue;
            if (q == accept)
                throw std::logic_error(
                    "accepting state cannot have outgoing transitions");
            if (slot->to < 0 || slot->to >= num_states)
                throw std::logic_error("two-way transition target out of range");
        }
    }
}

RunOutcome simulate_2dfa(const TwoWayDfa& m, const Word& word) {
    const long long len = static_cast<long long>(word.size());
    const long long cells = len + 2;
    auto symbol_at = [&](long long pos) -> int {
        if (pos == 0) return m.left_marker();
        if (pos == len + 1) return m.right_marker();
        Letter t = word[static_cast<size_t>(pos - 1)];
        if (t < 0 || t >= m.alphabet.size())
            throw std::invalid_argument("word letter out of range");
        return t;
    };

    // One visit per (state, head position) configuration; a revisit proves
    // an infinite loop because the machine is deterministic.
    std::vector<char> visited(static_cast<size_t>(m.num_states) * cells, 0);
    State state = m.initial;
    long long pos = 1;
    long long steps = 0;
    if (state == m.accept) return {Verdict::Accept, steps};
    for (;;) {
        size_t cfg = static_cast<size_t>(state) * cells + pos;
        if (visited[cfg]) return {Verdict::RejectLoop, steps};
        visited[cfg] = 1;
        const auto& step = m.transitions[state][symbol_at(pos)];
        if (!step) return {Verdict::RejectHalt, steps};
        ++steps;
        state = step->to;
        if (state == m.accept) return {Verdict::Accept, steps};
        switch (step->move) {
            case Move::Left: --pos; break;
            case Move::Right: ++pos; break;
            case Move::Stay: break;
        }
        if (pos < 0 || pos >= cells)
            throw std::logic_error("two-way run moved off the tape");
    }
}

bool accepts_2dfa(const TwoWayDfa& m, const Word& word) {
    return simulate_2dfa(m, word).verdict == Verdict::Accept;
}

TwoWayDfa dfa_to_2dfa(const Dfa& d) {
    d.check_valid();
    TwoWayDfa m(d.alphabet, d.num_states + 1, d.initial, d.num_states);
    for (State q = 0; q < d.num_states; ++q) {
        m.labels[q] = d.labels[q];
        for (Letter t = 0; t < d.alphabet.size(); ++t)
            if (d.next(q, t) >= 0) m.set_step(q, t, d.next(q, t), Move::Right);
        if (d.is_final(q)) m.set_step(q, m.right_marker(), m.accept, Move::Stay);
    }
    m.labels[m.accept] = "acc";
    m.check_valid();
    return m;
}

TwoWayDfa sequential_union(const std::vector<TwoWayDfa>& components) {
    if (components.empty())
        throw std::invalid_argument("sequential union needs a component");
    const Alphabet& sigma = components.front().alphabet;
    const int k = static_cast<int>(components.size());
    std::vector<int> offset(k + 1, 0);
    for (int i = 0; i < k; ++i) {
        const TwoWayDfa& c = components[i];
        c.check_valid();
        if (!(c.alphabet == sigma))
            throw std::invalid_argument(
                "sequential union components must share one alphabet");
        if (c.initial == c.accept)
            throw std::invalid_argument(
                "sequential union component starts in its accepting state");
        offset[i + 1] = offset[i] + c.num_states;
    }

    TwoWayDfa m(sigma, offset[k], offset[0] + components[0].initial,
                offset[k - 1] + components[k - 1].accept);
    for (int i = 0; i < k; ++i) {
        const TwoWayDfa& c = components[i];
        const bool last = (i == k - 1);
        // A non-last component's accepting state becomes its failure state:
        // it rewinds to the left endmarker and starts the next component.
        const State fail = offset[i] + c.accept;
        for (State q = 0; q < c.num_states; ++q) {
            m.labels[offset[i] + q] = c.labels[q];
            if (q == c.accept) continue;
            for (int sym = 0; sym < c.num_symbols(); ++sym) {
                const auto& slot = c.transitions[q][sym];
                if (slot) {
                    State to = (slot->to == c.accept) ? m.accept
                                                      : offset[i] + slot->to;
                    m.set_step(offset[i] + q, sym, to, slot->move);
                } else if (!last) {
                    m.set_step(offset[i] + q, sym, fail, Move::Stay);
                }
            }
        }
        if (!last) {
            m.labels[fail] = "next" + std::to_string(i);
            for (Letter t = 0; t < sigma.size(); ++t)
                m.set_step(fail, t, fail, Move::Left);
            m.set_step(fail, m.right_marker(), fail, Move::Left);
            m.set_step(fail, m.left_marker(),
                       offset[i + 1] + components[i + 1].initial, Move::Right);
        }
    }
    m.check_valid();
    return m;
}

namespace {

void collect_2dfa_images(const TwoWayDfa& m, Word& word, Int remaining,
                         std::set<ParikhVec>& out) {
    if (accepts_2dfa(m, word))
        out.insert(parikh_vector(m.alphabet.size(), word));
    if (remaining == 0) return;
    for (Letter t = 0; t < m.alphabet.size(); ++t) {
        word.push_back(t);
        collect_2dfa_images(m, word, remaining - 1, out);
        word.pop_back();
    }
}

void collect_2dfa_images_sparse(const TwoWayDfa& m, Word& word, Int remaining,
                                Letter common, Int rare_left,
                                std::set<ParikhVec>& out) {
    if (accepts_2dfa(m, word))
        out.insert(parikh_vector(m.alphabet.size(), word));
    if (remaining == 0) return;
    for (Letter t = 0; t < m.alphabet.size(); ++t) {
        if (t != common && rare_left == 0) continue;
        word.push_back(t);
        collect_2dfa_images_sparse(m, word, remaining - 1, common,
                                   t == common ? rare_left : rare_left - 1, out);
        word.pop_back();
    }
}

}  // namespace

std::set<ParikhVec> parikh_image_bounded_words(const TwoWayDfa& m, Int bound) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    std::set<ParikhVec> out;
    Word word;
    collect_2dfa_images(m, word, bound, out);
    return out;
}

std::set<ParikhVec> parikh_image_sparse_words(const TwoWayDfa& m, Int bound,
                                              Letter common, Int rare_bound) {
    if (bound < 0 || rare_bound < 0)
        throw std::invalid_argument("bounds must be nonnegative");
    if (common < 0 || common >= m.alphabet.size())
        throw std::invalid_argument("common letter out of range");
    std::set<ParikhVec> out;
    Word word;
    collect_2dfa_images_sparse(m, word, bound, common, rare_bound, out);
    return out;
}

TwoWayDfa nfa_to_parikh_2dfa(const Nfa& a) {
    NfaDecomposition dec = decompose_nfa(a);
    std::vector<TwoWayDfa> parts;
    parts.reserve(dec.unary_parts.size() + 1);
    parts.push_back(dfa_to_2dfa(nonunary_to_dfa(dec.nonunary_part)));
    for (const Nfa& u : dec.unary_parts) parts.push_back(unary_nfa_to_2dfa(u));
    return sequential_union(parts);
}

}  // namespace pareq
