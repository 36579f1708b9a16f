#include "pareq/grammar.hpp"

#include "pareq/determinize.hpp"
#include "pareq/unary.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace pareq {

Cnfg::Cnfg(std::vector<std::string> variables_, Alphabet terminals_, int start_)
    : variables(std::move(variables_)), terminals(std::move(terminals_)), start(start_) {
    if (variables.empty()) throw std::invalid_argument("grammar needs a variable");
    for (const std::string& name : variables)
        if (name.empty()) throw std::invalid_argument("variable names must be nonempty");
    std::set<std::string> names(variables.begin(), variables.end());
    if (names.size() != variables.size())
        throw std::invalid_argument("variable names must be distinct");
    if (start < 0 || start >= num_variables())
        throw std::invalid_argument("start variable out of range");
}

void Cnfg::add_binary(int lhs, int left, int right) {
    if (lhs < 0 || lhs >= num_variables() || left < 0 || left >= num_variables() ||
        right < 0 || right >= num_variables())
        throw std::invalid_argument("production variable out of range");
    if (left == start || right == start)
        throw std::invalid_argument("start variable cannot appear on a right side");
    CnfBinary p{lhs, left, right};
    auto it = std::lower_bound(binary.begin(), binary.end(), p);
    if (it == binary.end() || *it != p) binary.insert(it, p);
}

void Cnfg::add_terminal(int lhs, Letter t) {
    if (lhs < 0 || lhs >= num_variables())
        throw std::invalid_argument("production variable out of range");
    if (t < 0 || t >= terminals.size())
        throw std::invalid_argument("production letter out of range");
    CnfTerminal p{lhs, t};
    auto it = std::lower_bound(terminal.begin(), terminal.end(), p);
    if (it == terminal.end() || *it != p) terminal.insert(it, p);
}

void Cnfg::check_valid() const {
    if (variables.empty()) throw std::invalid_argument("grammar needs a variable");
    for (const std::string& name : variables)
        if (name.empty()) throw std::invalid_argument("variable names must be nonempty");
    std::set<std::string> names(variables.begin(), variables.end());
    if (names.size() != variables.size())
        throw std::invalid_argument("variable names must be distinct");
    if (start < 0 || start >= num_variables())
        throw std::invalid_argument("start variable out of range");
    for (const CnfBinary& p : binary) {
        if (p.lhs < 0 || p.lhs >= num_variables() || p.left < 0 ||
            p.left >= num_variables() || p.right < 0 || p.right >= num_variables())
            throw std::invalid_argument("production variable out of range");
        if (p.left == start || p.right == start)
            throw std::invalid_argument("start variable cannot appear on a right side");
    }
    for (const CnfTerminal& p : terminal) {
        if (p.lhs < 0 || p.lhs >= num_variables())
            throw std::invalid_argument("production variable out of range");
        if (p.letter < 0 || p.letter >= terminals.size())
            throw std::invalid_argument("production letter out of range");
    }
}

bool cyk_member(const Cnfg& g, const Word& w) {
    g.check_valid();
    for (Letter t : w)
        if (t < 0 || t >= g.terminals.size())
            throw std::invalid_argument("word letter outside the alphabet");
    const int n = static_cast<int>(w.size());
    if (n == 0) return g.start_epsilon;
    const int h = g.num_variables();
    // derives[i][len-1][B]: B derives w[i..i+len)
    std::vector<std::vector<std::vector<char>>> derives(
        static_cast<size_t>(n),
        std::vector<std::vector<char>>(static_cast<size_t>(n),
                                       std::vector<char>(static_cast<size_t>(h), 0)));
    for (int i = 0; i < n; ++i)
        for (const CnfTerminal& p : g.terminal)
            if (p.letter == w[static_cast<size_t>(i)]) derives[i][0][p.lhs] = 1;
    for (int len = 2; len <= n; ++len)
        for (int i = 0; i + len <= n; ++i)
            for (int cut = 1; cut < len; ++cut)
                for (const CnfBinary& p : g.binary)
                    if (derives[i][cut - 1][p.left] &&
                        derives[i + cut][len - cut - 1][p.right])
                        derives[i][len - 1][p.lhs] = 1;
    return derives[0][static_cast<size_t>(n - 1)][static_cast<size_t>(g.start)] != 0;
}

CfgDecomposition decompose_cfg(const Cnfg& g) {
    g.check_valid();
    const int h = g.num_variables();
    const int m = g.terminals.size();

    // Non-start variables keep their relative order in the copies.
    std::vector<int> rank(static_cast<size_t>(h), -1);
    std::vector<std::string> names{"S'"};
    int next = 0;
    for (int v = 0; v < h; ++v) {
        if (v == g.start) continue;
        rank[static_cast<size_t>(v)] = next++;
        for (Letter i = 0; i < m; ++i)
            names.push_back(g.variables[static_cast<size_t>(v)] + "_" +
                            g.terminals.name(i));
    }
    auto copy_of = [&](int v, Letter i) {
        return 1 + rank[static_cast<size_t>(v)] * m + i;
    };

    Cnfg nonu(std::move(names), g.terminals, 0);
    for (const CnfBinary& p : g.binary) {
        if (p.lhs == g.start) {
            for (Letter i = 0; i < m; ++i)
                for (Letter j = 0; j < m; ++j)
                    if (i != j) nonu.add_binary(0, copy_of(p.left, i), copy_of(p.right, j));
        } else {
            for (Letter i = 0; i < m; ++i)
                for (Letter j = 0; j < m; ++j) {
                    nonu.add_binary(copy_of(p.lhs, i), copy_of(p.left, i),
                                    copy_of(p.right, j));
                    nonu.add_binary(copy_of(p.lhs, i), copy_of(p.left, j),
                                    copy_of(p.right, i));
                }
        }
    }
    for (const CnfTerminal& p : g.terminal)
        if (p.lhs != g.start) nonu.add_terminal(copy_of(p.lhs, p.letter), p.letter);
    nonu.check_valid();

    CfgDecomposition out;
    out.nonunary_part = std::move(nonu);
    for (Letter t = 0; t < m; ++t) {
        Cnfg u(g.variables, g.terminals, g.start);
        u.binary = g.binary;
        u.start_epsilon = g.start_epsilon;
        for (const CnfTerminal& p : g.terminal)
            if (p.letter == t) u.add_terminal(p.lhs, p.letter);
        u.check_valid();
        out.unary_parts.push_back(std::move(u));
    }
    return out;
}

namespace {

using VarCounts = std::vector<int>;

int total_count(const VarCounts& c) {
    int t = 0;
    for (int x : c) t += x;
    return t;
}

// Variables that derive at least one terminal word. Multisets holding any
// other variable can never be emptied, so expansions that would introduce
// one are skipped.
std::vector<char> productive_variables(const Cnfg& g) {
    std::vector<char> good(static_cast<size_t>(g.num_variables()), 0);
    for (const CnfTerminal& p : g.terminal) good[static_cast<size_t>(p.lhs)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const CnfBinary& p : g.binary)
            if (!good[static_cast<size_t>(p.lhs)] && good[static_cast<size_t>(p.left)] &&
                good[static_cast<size_t>(p.right)]) {
                good[static_cast<size_t>(p.lhs)] = 1;
                changed = true;
            }
    }
    return good;
}

// All multisets reachable from `from` by silently replacing a pending
// variable with a binary production's right side (under the size bound) or
// discharging a pending start variable when the grammar generates the
// empty word.
std::set<VarCounts> silent_closure(const Cnfg& g, const std::vector<CnfBinary>& expansions,
                                   const VarCounts& from, int cap) {
    std::set<VarCounts> seen{from};
    std::deque<VarCounts> work{from};
    while (!work.empty()) {
        VarCounts cur = std::move(work.front());
        work.pop_front();
        const int size = total_count(cur);
        for (const CnfBinary& p : expansions) {
            if (cur[static_cast<size_t>(p.lhs)] == 0 || size + 1 > cap) continue;
            VarCounts next = cur;
            next[static_cast<size_t>(p.lhs)] -= 1;
            next[static_cast<size_t>(p.left)] += 1;
            next[static_cast<size_t>(p.right)] += 1;
            if (seen.insert(next).second) work.push_back(std::move(next));
        }
        if (g.start_epsilon && cur[static_cast<size_t>(g.start)] > 0) {
            VarCounts next = cur;
            next[static_cast<size_t>(g.start)] -= 1;
            if (seen.insert(next).second) work.push_back(std::move(next));
        }
    }
    return seen;
}

std::string multiset_label(const Cnfg& g, const VarCounts& c) {
    std::string s = "{";
    bool first = true;
    for (size_t v = 0; v < c.size(); ++v)
        for (int k = 0; k < c[v]; ++k) {
            if (!first) s += ",";
            s += g.variables[v];
            first = false;
        }
    return s + "}";
}

}  // namespace

Nfa cfg_to_parikh_nfa(const Cnfg& g) {
    g.check_valid();
    const int h = g.num_variables();
    const int cap = h + 1;
    const std::vector<char> good = productive_variables(g);
    std::vector<CnfBinary> expansions;
    for (const CnfBinary& p : g.binary)
        if (good[static_cast<size_t>(p.left)] && good[static_cast<size_t>(p.right)])
            expansions.push_back(p);

    std::map<VarCounts, State> index;
    std::vector<VarCounts> order;
    std::vector<char> finals;
    std::vector<std::tuple<State, Letter, State>> edges;

    VarCounts init(static_cast<size_t>(h), 0);
    init[static_cast<size_t>(g.start)] = 1;
    index.emplace(init, 0);
    order.push_back(init);
    for (size_t head = 0; head < order.size(); ++head) {
        const VarCounts cur = order[head];
        const std::set<VarCounts> closure = silent_closure(g, expansions, cur, cap);
        bool accepting = false;
        for (const VarCounts& mid : closure) {
            if (total_count(mid) == 0) accepting = true;
            for (const CnfTerminal& p : g.terminal) {
                if (mid[static_cast<size_t>(p.lhs)] == 0) continue;
                VarCounts next = mid;
                next[static_cast<size_t>(p.lhs)] -= 1;
                auto [it, inserted] = index.emplace(next, static_cast<State>(order.size()));
                if (inserted) order.push_back(next);
                edges.emplace_back(static_cast<State>(head), p.letter, it->second);
            }
        }
        finals.push_back(accepting ? 1 : 0);
    }

    Nfa a(g.terminals, static_cast<int>(order.size()), 0);
    for (size_t q = 0; q < order.size(); ++q) {
        a.labels[q] = multiset_label(g, order[q]);
        a.set_final(static_cast<State>(q), finals[q] != 0);
    }
    for (const auto& [from, t, to] : edges) a.add_transition(from, t, to);
    a.check_valid();
    return a;
}

Dfa cfg_to_parikh_dfa(const Cnfg& g) {
    const CfgDecomposition dec = decompose_cfg(g);
    const Dfa a_non = nonunary_to_dfa(cfg_to_parikh_nfa(dec.nonunary_part));

    std::vector<Dfa> unary;
    unary.reserve(dec.unary_parts.size());
    for (const Cnfg& part : dec.unary_parts)
        unary.push_back(unary_nfa_to_dfa(cfg_to_parikh_nfa(part)));

    return product_union(unary_union_dfa(unary, g.start_epsilon), a_non);
}

TwoWayDfa cfg_to_parikh_2dfa(const Cnfg& g) {
    const CfgDecomposition dec = decompose_cfg(g);
    std::vector<TwoWayDfa> components;
    components.push_back(
        dfa_to_2dfa(nonunary_to_dfa(cfg_to_parikh_nfa(dec.nonunary_part))));
    for (const Cnfg& part : dec.unary_parts)
        components.push_back(unary_nfa_to_2dfa(cfg_to_parikh_nfa(part)));
    return sequential_union(components);
}

Cnfg witness_grammar(int h) {
    if (h < 3) throw std::invalid_argument("witness grammar needs at least 3 variables");
    std::vector<std::string> names{"A", "B"};
    for (int j = 0; j <= h - 3; ++j) names.push_back("A" + std::to_string(j));
    Cnfg g(std::move(names), Alphabet({"a", "b"}), 2 + (h - 3));
    g.add_terminal(0, 0);
    g.add_terminal(1, 1);
    g.add_binary(2, 0, 1);
    for (int j = 1; j <= h - 3; ++j) g.add_binary(2 + j, 2 + j - 1, 2 + j - 1);
    g.check_valid();
    return g;
}

std::set<ParikhVec> parikh_image_bounded(const Cnfg& g, Int bound) {
    g.check_valid();
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    const int h = g.num_variables();
    const int m = g.terminals.size();

    // images[B] = letter counts of the nonempty words B derives, up to the
    // bound; grown to a fixpoint.
    std::vector<std::set<ParikhVec>> images(static_cast<size_t>(h));
    if (bound >= 1)
        for (const CnfTerminal& p : g.terminal) {
            ParikhVec v(static_cast<size_t>(m), 0);
            v[static_cast<size_t>(p.letter)] = 1;
            images[static_cast<size_t>(p.lhs)].insert(std::move(v));
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const CnfBinary& p : g.binary)
            for (const ParikhVec& u : images[static_cast<size_t>(p.left)])
                for (const ParikhVec& v : images[static_cast<size_t>(p.right)]) {
                    if (sum(u) + sum(v) > bound) continue;
                    if (images[static_cast<size_t>(p.lhs)].insert(vec_add(u, v)).second)
                        changed = true;
                }
    }

    std::set<ParikhVec> out = images[static_cast<size_t>(g.start)];
    if (g.start_epsilon) out.insert(ParikhVec(static_cast<size_t>(m), 0));
    return out;
}

namespace {

void collect_grammar_images(const Cnfg& g, Word& word, Int remaining,
                            std::set<ParikhVec>& out) {
    if (cyk_member(g, word))
        out.insert(parikh_vector(g.terminals.size(), word));
    if (remaining == 0) return;
    for (Letter t = 0; t < g.terminals.size(); ++t) {
        word.push_back(t);
        collect_grammar_images(g, word, remaining - 1, out);
        word.pop_back();
    }
}

}  // namespace

std::set<ParikhVec> parikh_image_bounded_words(const Cnfg& g, Int bound) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    std::set<ParikhVec> out;
    Word word;
    collect_grammar_images(g, word, bound, out);
    return out;
}

}  // namespace pareq
