#include "pareq/determinize.hpp"

#include "pareq/unary.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace pareq {

namespace {

// ---- small dynamic bit sets over automaton states ----

using Mask = std::vector<std::uint64_t>;

Mask empty_mask(int bits) {
    return Mask(static_cast<size_t>((bits + 63) / 64), 0);
}

void mask_set(Mask& m, int i) {
    m[static_cast<size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
}

bool mask_subset(const Mask& a, const Mask& b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

Int mask_count(const Mask& m) {
    Int total = 0;
    for (std::uint64_t w : m) total += __builtin_popcountll(w);
    return total;
}

// States both reachable from the initial state and able to reach a final
// state; empty is set when no accepting run exists at all.
Nfa trim_automaton(const Nfa& a, bool& empty) {
    const int n = a.num_states;
    const int m = a.alphabet.size();
    std::vector<char> reach(n, 0), coreach(n, 0);
    std::deque<State> work;
    reach[a.initial] = 1;
    work.push_back(a.initial);
    while (!work.empty()) {
        State q = work.front();
        work.pop_front();
        for (Letter t = 0; t < m; ++t)
            for (State r : a.transitions[q][t])
                if (!reach[r]) {
                    reach[r] = 1;
                    work.push_back(r);
                }
    }
    std::vector<std::vector<State>> rev(n);
    for (State q = 0; q < n; ++q)
        for (Letter t = 0; t < m; ++t)
            for (State r : a.transitions[q][t]) rev[r].push_back(q);
    for (State q = 0; q < n; ++q)
        if (a.is_final(q) && !coreach[q]) {
            coreach[q] = 1;
            work.push_back(q);
        }
    while (!work.empty()) {
        State q = work.front();
        work.pop_front();
        for (State p : rev[q])
            if (!coreach[p]) {
                coreach[p] = 1;
                work.push_back(p);
            }
    }
    std::vector<State> remap(n, -1);
    int kept = 0;
    for (State q = 0; q < n; ++q)
        if (reach[q] && coreach[q]) remap[q] = kept++;
    if (remap[a.initial] < 0) {
        empty = true;
        return Nfa(a.alphabet, 1, 0);
    }
    empty = false;
    Nfa out(a.alphabet, kept, remap[a.initial]);
    for (State q = 0; q < n; ++q) {
        if (remap[q] < 0) continue;
        out.labels[remap[q]] = a.labels[q];
        out.set_final(remap[q], a.is_final(q));
        for (Letter t = 0; t < m; ++t)
            for (State r : a.transitions[q][t])
                if (remap[r] >= 0) out.add_transition(remap[q], t, remap[r]);
    }
    return out;
}

// Letter-count images of the simple cycles, each paired with the set of
// states it touches. Each cycle is enumerated once, anchored at its
// smallest state.
std::vector<std::pair<Mask, ParikhVec>> simple_cycles(const Nfa& g) {
    const int n = g.num_states;
    const int m = g.alphabet.size();
    std::set<std::pair<Mask, ParikhVec>> found;
    std::vector<char> on_path(n, 0);
    Mask pmask = empty_mask(n);
    ParikhVec psi(m, 0);

    std::function<void(State, State)> explore = [&](State anchor, State q) {
        for (Letter t = 0; t < m; ++t) {
            for (State r : g.transitions[q][t]) {
                if (r == anchor) {
                    ParikhVec cycle = psi;
                    cycle[t] += 1;
                    found.emplace(pmask, std::move(cycle));
                } else if (r > anchor && !on_path[r]) {
                    on_path[r] = 1;
                    mask_set(pmask, r);
                    psi[t] += 1;
                    explore(anchor, r);
                    psi[t] -= 1;
                    pmask[static_cast<size_t>(r >> 6)] &=
                        ~(std::uint64_t{1} << (r & 63));
                    on_path[r] = 0;
                }
            }
        }
    };
    for (State s = 0; s < n; ++s) {
        on_path[s] = 1;
        mask_set(pmask, s);
        explore(s, s);
        pmask[static_cast<size_t>(s >> 6)] &= ~(std::uint64_t{1} << (s & 63));
        on_path[s] = 0;
    }
    return {found.begin(), found.end()};
}

ParikhVec unit_step(const ParikhVec& v, Letter t) {
    ParikhVec r = v;
    r[static_cast<size_t>(t)] += 1;
    return r;
}

}  // namespace

NfaDecomposition decompose_nfa(const Nfa& a) {
    a.check_valid();
    const int n = a.num_states;
    const int m = a.alphabet.size();
    auto tagged = [n](Letter i, State q) { return 1 + i * n + q; };
    auto orig = [n, m](State q) { return 1 + m * n + q; };

    Nfa nonu(a.alphabet, n * (m + 1) + 1, 0);
    nonu.labels[0] = "s0";
    for (Letter i = 0; i < m; ++i)
        for (State q = 0; q < n; ++q)
            nonu.labels[tagged(i, q)] =
                "[" + a.labels[q] + "," + a.alphabet.name(i) + "]";
    for (State q = 0; q < n; ++q) nonu.labels[orig(q)] = a.labels[q];

    for (State q = 0; q < n; ++q)
        for (Letter t = 0; t < m; ++t)
            for (State r : a.transitions[q][t]) {
                nonu.add_transition(orig(q), t, orig(r));
                for (Letter i = 0; i < m; ++i)
                    nonu.add_transition(tagged(i, q), t,
                                        i == t ? tagged(i, r) : orig(r));
            }
    for (Letter t = 0; t < m; ++t)
        for (State r : a.transitions[a.initial][t])
            nonu.add_transition(0, t, tagged(t, r));

    // Accepting states live only in the original copy, which a run can
    // enter only after seeing two distinct letters.
    for (State q = 0; q < n; ++q)
        if (a.is_final(q)) nonu.set_final(orig(q));
    nonu.check_valid();

    NfaDecomposition out;
    out.nonunary_part = std::move(nonu);

    for (Letter t = 0; t < m; ++t) {
        Nfa u(a.alphabet, n, a.initial);
        u.finals = a.finals;
        u.labels = a.labels;
        for (State q = 0; q < n; ++q)
            for (State r : a.transitions[q][t]) u.add_transition(q, t, r);
        u.check_valid();
        out.unary_parts.push_back(std::move(u));
    }
    return out;
}

SemilinearRep extract_semilinear(const Nfa& a, Int length_cap) {
    a.check_valid();
    if (length_cap < 0)
        throw std::invalid_argument("length cap must be nonnegative (0 = default)");
    const int m = a.alphabet.size();
    SemilinearRep rep(m);
    bool empty = false;
    const Nfa g = trim_automaton(a, empty);
    if (empty) return rep;
    const int n = g.num_states;

    const std::vector<std::pair<Mask, ParikhVec>> cycles = simple_cycles(g);

    if (cycles.empty()) {
        // No cycle means finitely many runs: the image is just the images
        // of the accepting runs, and every support would contribute only
        // generator-free parts anyway.
        std::set<std::pair<State, ParikhVec>> seen;
        std::deque<std::pair<State, ParikhVec>> work;
        ParikhVec zero(static_cast<size_t>(m), 0);
        seen.emplace(g.initial, zero);
        work.emplace_back(g.initial, zero);
        while (!work.empty()) {
            auto [q, psi] = std::move(work.front());
            work.pop_front();
            if (g.is_final(q)) rep.finite_part.insert(psi);
            if (length_cap > 0 && sum(psi) >= length_cap) continue;
            for (Letter t = 0; t < m; ++t)
                for (State r : g.transitions[q][t]) {
                    ParikhVec npsi = unit_step(psi, t);
                    if (seen.emplace(r, npsi).second) work.emplace_back(r, npsi);
                }
        }
        rep.check_valid();
        return rep;
    }

    // One search over (state, visited set, letter counts). A run that ends
    // at a final state with visited set T and length at most |T|^2
    // contributes the candidate linear set with offset = its counts and
    // generators = images of the simple cycles lying inside T. Every step
    // reads one letter, so the queue pops in nondecreasing length order and
    // the pump test below always sees every shorter configuration.
    std::set<std::pair<Mask, ParikhVec>> collected;
    {
        const Int expand_cap =
            length_cap > 0 ? length_cap : static_cast<Int>(n) * n;
        std::set<std::tuple<State, Mask, ParikhVec>> seen;
        std::deque<std::tuple<State, Mask, ParikhVec>> work;
        Mask start = empty_mask(n);
        mask_set(start, g.initial);
        ParikhVec zero(m, 0);
        seen.emplace(g.initial, start, zero);
        work.emplace_back(g.initial, start, zero);
        while (!work.empty()) {
            auto [q, visited, psi] = std::move(work.front());
            work.pop_front();
            // Pump prune: if this run is a shorter seen run plus one lap of
            // a cycle completed inside the visited set, every part it could
            // contribute lies inside a part the shorter run contributes
            // (same continuations, same support, and the lap's image is one
            // of that part's generators).
            bool pumped = false;
            for (const auto& [cmask, cpsi] : cycles) {
                if (!mask_subset(cmask, visited) || !vec_leq(cpsi, psi)) continue;
                ParikhVec base(psi);
                for (int c = 0; c < m; ++c) base[c] -= cpsi[c];
                if (seen.count({q, visited, base})) {
                    pumped = true;
                    break;
                }
            }
            if (pumped) continue;
            const Int len = sum(psi);
            if (g.is_final(q)) {
                const Int size = mask_count(visited);
                const Int collect_cap = length_cap > 0 ? length_cap : size * size;
                if (len <= collect_cap) collected.emplace(visited, psi);
            }
            if (len >= expand_cap) continue;
            for (Letter t = 0; t < m; ++t)
                for (State r : g.transitions[q][t]) {
                    Mask next = visited;
                    mask_set(next, r);
                    ParikhVec npsi = unit_step(psi, t);
                    if (seen.emplace(r, next, npsi).second)
                        work.emplace_back(r, next, npsi);
                }
        }
    }

    std::vector<LinearSet> raw;
    {
        Mask support;
        std::vector<ParikhVec> gens;
        bool have = false;
        for (const auto& [mask, offset] : collected) {
            if (!have || mask != support) {
                support = mask;
                have = true;
                std::set<ParikhVec> gens_set;
                for (const auto& [cmask, cpsi] : cycles)
                    if (mask_subset(cmask, support)) gens_set.insert(cpsi);
                gens.assign(gens_set.begin(), gens_set.end());
            }
            raw.emplace_back(offset, gens);
        }
    }

    // Drop sets lying entirely inside another collected set.
    std::sort(raw.begin(), raw.end(), [](const LinearSet& x, const LinearSet& y) {
        return std::tuple(sum(x.offset), x.offset,
                          -static_cast<Int>(x.generators.size()), x.generators) <
               std::tuple(sum(y.offset), y.offset,
                          -static_cast<Int>(y.generators.size()), y.generators);
    });
    std::vector<LinearSet> pruned;
    for (LinearSet& part : raw) {
        bool drop = false;
        for (const LinearSet& keeper : pruned) {
            if (part.offset == keeper.offset && part.generators == keeper.generators) {
                drop = true;
                break;
            }
            if (std::includes(keeper.generators.begin(), keeper.generators.end(),
                              part.generators.begin(), part.generators.end()) &&
                linear_set_membership(part.offset, keeper)) {
                drop = true;
                break;
            }
        }
        if (!drop) pruned.push_back(std::move(part));
    }

    // Independent generator lists; generator-free parts become single points.
    std::vector<LinearSet> parts;
    for (const LinearSet& part : pruned) {
        if (part.generators.empty()) {
            rep.finite_part.insert(part.offset);
            continue;
        }
        for (LinearSet& z : independence_reduce(part)) {
            if (z.generators.empty()) {
                rep.finite_part.insert(z.offset);
                continue;
            }
            std::sort(z.generators.begin(), z.generators.end());
            parts.push_back(std::move(z));
        }
    }
    // The reduction multiplies parts, so prune containments once more. This
    // pass is semantic: a part goes when its offset lies in a kept part and
    // each of its generators is a combination of the keeper's generators.
    std::sort(parts.begin(), parts.end(), [](const LinearSet& x, const LinearSet& y) {
        return std::tuple(sum(x.offset), x.offset,
                          -static_cast<Int>(x.generators.size()), x.generators) <
               std::tuple(sum(y.offset), y.offset,
                          -static_cast<Int>(y.generators.size()), y.generators);
    });
    std::vector<LinearSet> kept;
    std::vector<LinearSet> cones;
    const ParikhVec zero(static_cast<size_t>(m), 0);
    for (LinearSet& z : parts) {
        bool drop = false;
        for (size_t i = 0; i < kept.size() && !drop; ++i) {
            if (!linear_set_membership(z.offset, kept[i])) continue;
            drop = true;
            for (const ParikhVec& gen : z.generators)
                if (!linear_set_membership(gen, cones[i])) {
                    drop = false;
                    break;
                }
        }
        if (drop) continue;
        cones.emplace_back(zero, z.generators);
        kept.push_back(std::move(z));
    }
    std::sort(kept.begin(), kept.end(), [](const LinearSet& x, const LinearSet& y) {
        return std::tie(x.offset, x.generators) < std::tie(y.offset, y.generators);
    });
    rep.linear_parts = std::move(kept);

    for (auto it = rep.finite_part.begin(); it != rep.finite_part.end();) {
        bool covered = false;
        for (const LinearSet& z : rep.linear_parts)
            if (linear_set_membership(*it, z)) {
                covered = true;
                break;
            }
        it = covered ? rep.finite_part.erase(it) : std::next(it);
    }
    rep.check_valid();
    return rep;
}

namespace {

// Largest grid an unroll may enumerate into the finite part before the
// peeling fallback takes over.
constexpr Int kUnrollGridCells = 64;

// Number of lattice points dominated by the offset, saturating instead of
// overflowing; only used to order the work queue.
Int box_volume(const ParikhVec& offset) {
    const Int cap = std::numeric_limits<Int>::max();
    Int cells = 1;
    for (Int c : offset) {
        const Int w = std::max<Int>(c, 0) + 1;
        if (cells > cap / w) return cap;
        cells *= w;
    }
    return cells;
}

// Lexicographically largest nonunary vector below offset (componentwise)
// with max component <= pos that is not already taken.
std::optional<ParikhVec> pick_pred(const ParikhVec& offset, Int pos,
                                   const std::set<ParikhVec>& taken) {
    const int dim = static_cast<int>(offset.size());
    ParikhVec cap(dim);
    for (int c = 0; c < dim; ++c) cap[c] = std::min(offset[c], pos);
    // Scan downward from the cap so each set prefers markers near its own
    // offset; small boxes then keep their few candidates for themselves.
    ParikhVec v = cap;
    for (;;) {
        if (!is_unary_vec(v) && !taken.count(v)) return v;
        int c = dim - 1;
        while (c >= 0 && v[c] == 0) {
            v[c] = cap[c];
            --c;
        }
        if (c < 0) return std::nullopt;
        --v[c];
    }
}

}  // namespace

SemilinearRep normalize_offsets(const SemilinearRep& rep, int n) {
    rep.check_valid();
    if (n < 0) throw std::invalid_argument("state count must be nonnegative");
    for (const ParikhVec& y : rep.finite_part)
        if (is_unary_vec(y))
            throw std::invalid_argument("finite part must be nonunary throughout");
    for (const LinearSet& z : rep.linear_parts)
        if (is_unary_vec(z.offset))
            throw std::invalid_argument("every offset must be nonunary");

    SemilinearRep out(rep.dim);
    out.finite_part = rep.finite_part;
    std::deque<LinearSet> queue;
    for (const LinearSet& z : rep.linear_parts) {
        if (z.generators.empty())
            out.finite_part.insert(z.offset);
        else
            queue.push_back(z);
    }

    // Tight boxes first: a set with only a few candidate markers below its
    // offset must claim them before wider boxes wander into the same corner.
    std::stable_sort(queue.begin(), queue.end(),
                     [](const LinearSet& x, const LinearSet& y) {
                         return box_volume(x.offset) < box_volume(y.offset);
                     });

    // Monotone count of linear sets ever queued; unroll thresholds grow with
    // it, which keeps every shifted offset above any position it can end up
    // at and thereby guarantees a fresh predecessor choice for it.
    Int worked = static_cast<Int>(queue.size());
    std::vector<LinearSet> parts;
    std::vector<ParikhVec> preds;
    std::set<ParikhVec> taken;
    Int stall = 0;
    while (!queue.empty()) {
        LinearSet z = std::move(queue.front());
        queue.pop_front();
        const Int pos = static_cast<Int>(parts.size()) + 1;
        if (auto x = pick_pred(z.offset, pos, taken)) {
            taken.insert(*x);
            parts.push_back(std::move(z));
            preds.push_back(std::move(*x));
            stall = 0;
            continue;
        }
        // A stall this long means a full sweep of the queue placed nothing,
        // so retries alone cannot make progress any more.
        ++stall;
        const bool stuck = stall > 2 * static_cast<Int>(queue.size()) + 8;

        // No fresh predecessor fits: unroll. The points of the set with all
        // coefficients below per-generator thresholds move to the finite
        // part, and one shifted copy per generator covers the rest. When
        // stalled the threshold drops to a bound on the position the copy
        // can still reach, keeping the forced grid as small as the progress
        // guarantee allows.
        const int k = static_cast<int>(z.generators.size());
        std::vector<Int> h(k, 0);
        Int cells = 1;
        bool grid_ok = true;
        for (int j = 0; j < k && grid_ok; ++j) {
            const Int target =
                stuck ? static_cast<Int>(parts.size() + queue.size()) + j + 2
                      : worked + j + 1;
            const Int scan_limit = target + std::max(n, 1) + 1;
            ParikhVec v = z.offset;
            Int steps = 0;
            while (inf_norm(v) < target) {
                v = vec_add(v, z.generators[j]);
                ++steps;
                if (steps > scan_limit)
                    throw std::logic_error("unroll failed to grow the offset");
            }
            if (steps == 0) {
                // The offset already clears the threshold. With one
                // generator a single shift still makes progress; otherwise
                // the grid degenerates and peeling below takes over.
                if (k == 1)
                    steps = 1;
                else
                    grid_ok = false;
            }
            h[j] = steps;
            cells *= std::max<Int>(steps, 1);
        }
        grid_ok = grid_ok && (k == 1 || stuck || cells <= kUnrollGridCells);

        if (grid_ok) {
            for (int j = 0; j < k; ++j) {
                LinearSet shifted(
                    vec_add(z.offset, vec_scale(z.generators[j], h[j])),
                    z.generators);
                shifted.independent = z.independent;
                queue.push_back(std::move(shifted));
            }
            worked += k;

            std::vector<Int> idx(k, 0);
            for (;;) {
                ParikhVec point = z.offset;
                for (int j = 0; j < k; ++j)
                    if (idx[j] > 0)
                        point = vec_add(point, vec_scale(z.generators[j], idx[j]));
                out.finite_part.insert(std::move(point));
                int j = k - 1;
                while (j >= 0 && idx[j] + 1 >= h[j]) {
                    idx[j] = 0;
                    --j;
                }
                if (j < 0) break;
                ++idx[j];
            }
            continue;
        }

        // The grid would be large: peel instead. One step of one generator
        // splits the set exactly into the points never using that generator
        // and a copy shifted once along it — two queued sets, no grid. The
        // step only helps if it grows a coordinate still below the position
        // cap, so pick the generator with the most weight on those.
        int best = -1;
        Int best_score = 0;
        for (int j = 0; j < k; ++j) {
            Int score = 0;
            for (int c = 0; c < rep.dim; ++c)
                if (z.offset[c] < pos) score += z.generators[j][c];
            if (score > best_score) {
                best_score = score;
                best = j;
            }
        }
        if (best < 0) {
            // Every generator grows only coordinates the position cap
            // already clips; retry once later placements relax the cap.
            queue.push_back(std::move(z));
            continue;
        }
        std::vector<ParikhVec> rest_gens;
        for (int j = 0; j < k; ++j)
            if (j != best) rest_gens.push_back(z.generators[j]);
        LinearSet rest(z.offset, std::move(rest_gens));
        rest.independent = z.independent;
        LinearSet shifted(vec_add(z.offset, z.generators[best]), z.generators);
        shifted.independent = z.independent;
        queue.push_back(std::move(rest));
        queue.push_back(std::move(shifted));
        worked += 2;
    }
    out.linear_parts = std::move(parts);
    out.chosen_preds = std::move(preds);
    out.check_valid();
    return out;
}

Dfa build_prefix_dfa(const Alphabet& alphabet, const std::vector<Word>& words,
                     std::vector<State>* word_ends) {
    for (const Word& w : words) {
        if (w.empty())
            throw std::invalid_argument("prefix acceptor words must be nonempty");
        for (Letter t : w)
            if (t < 0 || t >= alphabet.size())
                throw std::invalid_argument("word letter outside the alphabet");
    }
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j) {
            if (i == j) continue;
            if (words[i].size() <= words[j].size() &&
                std::equal(words[i].begin(), words[i].end(), words[j].begin()))
                throw std::invalid_argument("word set is not prefix-free");
        }

    std::map<std::pair<State, Letter>, State> edges;
    int states = 1;
    std::vector<State> ends;
    for (const Word& w : words) {
        State at = 0;
        for (Letter t : w) {
            auto [it, inserted] = edges.emplace(std::pair(at, t), states);
            if (inserted) ++states;
            at = it->second;
        }
        ends.push_back(at);
    }

    Dfa d(alphabet, states, 0);
    for (const auto& [key, to] : edges) d.set_transition(key.first, key.second, to);
    for (State e : ends) d.set_final(e);
    d.labels[0] = "root";
    for (const Word& w : words) {
        State at = 0;
        std::string text;
        for (Letter t : w) {
            text += alphabet.name(t);
            at = d.next(at, t);
            d.labels[at] = text;
        }
    }
    d.check_valid();
    if (word_ends) *word_ends = std::move(ends);
    return d;
}

LoopAutomatonPlan build_loop_plan(const LinearSet& z, const ParikhVec& x) {
    if (x.size() != z.offset.size())
        throw std::invalid_argument("chosen vector dimension disagrees with the set");
    if (is_unary_vec(x))
        throw std::invalid_argument("chosen vector must be nonunary");
    if (!vec_leq(x, z.offset))
        throw std::invalid_argument("chosen vector must lie below the offset");

    LoopAutomatonPlan plan;
    plan.entry_word = shifted_word(x);
    ParikhVec rest(z.offset.size());
    for (size_t c = 0; c < rest.size(); ++c) rest[c] = z.offset[c] - x[c];
    Word tail = canonical_word(rest);
    plan.entry_word.insert(plan.entry_word.end(), tail.begin(), tail.end());
    plan.chosen_letters = independent_indices(z.generators);
    for (size_t j = 0; j < z.generators.size(); ++j)
        plan.loop_words.push_back(
            rotate_to_letter(z.generators[j], plan.chosen_letters[j]));
    return plan;
}

namespace {

// Acceptor for the sorted spellings of a finite set of count vectors:
// states are the sorted-prefix count vectors below the componentwise
// maximum, letters may only repeat or move up the alphabet.
Dfa build_grid_dfa(const Alphabet& alphabet, const std::set<ParikhVec>& points) {
    const int m = alphabet.size();
    ParikhVec cap(static_cast<size_t>(m), 0);
    for (const ParikhVec& y : points)
        for (int c = 0; c < m; ++c) cap[c] = std::max(cap[c], y[c]);

    auto vec_text = [&](const ParikhVec& v) {
        std::string s = "(";
        for (size_t c = 0; c < v.size(); ++c) {
            if (c) s += ",";
            s += std::to_string(v[c]);
        }
        return s + ")";
    };

    std::map<ParikhVec, State> index;
    std::vector<ParikhVec> order;
    ParikhVec zero(static_cast<size_t>(m), 0);
    index.emplace(zero, 0);
    order.push_back(zero);
    std::vector<std::tuple<State, Letter, State>> edges;
    for (size_t head = 0; head < order.size(); ++head) {
        const ParikhVec v = order[head];
        int top = -1;
        for (int c = 0; c < m; ++c)
            if (v[c] > 0) top = c;
        for (Letter t = std::max(top, 0); t < m; ++t) {
            if (v[t] + 1 > cap[t]) continue;
            ParikhVec next = unit_step(v, t);
            auto [it, inserted] = index.emplace(next, static_cast<State>(order.size()));
            if (inserted) order.push_back(next);
            edges.emplace_back(index.at(v), t, it->second);
        }
    }

    Dfa d(alphabet, static_cast<int>(order.size()), 0);
    for (const auto& [from, t, to] : edges) d.set_transition(from, t, to);
    for (size_t q = 0; q < order.size(); ++q) {
        d.labels[q] = vec_text(order[q]);
        if (points.count(order[q])) d.set_final(static_cast<State>(q));
    }
    d.check_valid();
    return d;
}

}  // namespace

Dfa nonunary_to_dfa(const Nfa& a, Int length_cap) {
    a.check_valid();
    if (a.is_final(a.initial))
        throw std::invalid_argument("automaton accepts the empty word");
    for (Letter t = 0; t < a.alphabet.size(); ++t) {
        // Reachability along letter t alone; a final hit means a unary word.
        std::vector<char> seen(a.num_states, 0);
        std::deque<State> work;
        for (State r : a.transitions[a.initial][t])
            if (!seen[r]) {
                seen[r] = 1;
                work.push_back(r);
            }
        while (!work.empty()) {
            State q = work.front();
            work.pop_front();
            if (a.is_final(q))
                throw std::invalid_argument("automaton accepts a unary word");
            for (State r : a.transitions[q][t])
                if (!seen[r]) {
                    seen[r] = 1;
                    work.push_back(r);
                }
        }
    }

    const SemilinearRep rep =
        normalize_offsets(extract_semilinear(a, length_cap), a.num_states);

    std::vector<LoopAutomatonPlan> plans;
    std::vector<Word> entry_words;
    for (size_t i = 0; i < rep.linear_parts.size(); ++i) {
        plans.push_back(
            build_loop_plan(rep.linear_parts[i], (*rep.chosen_preds)[i]));
        entry_words.push_back(plans.back().entry_word);
    }

    std::vector<State> ends;
    Dfa trie = build_prefix_dfa(a.alphabet, entry_words, &ends);
    int extra = 0;
    for (const LoopAutomatonPlan& plan : plans)
        for (const Word& u : plan.loop_words)
            extra += static_cast<int>(u.size()) - 1;

    Dfa loopy(a.alphabet, trie.num_states + extra, trie.initial);
    loopy.finals = trie.finals;
    loopy.finals.resize(static_cast<size_t>(loopy.num_states), 0);
    for (State q = 0; q < trie.num_states; ++q) {
        loopy.labels[q] = trie.labels[q];
        for (Letter t = 0; t < a.alphabet.size(); ++t)
            if (trie.next(q, t) >= 0) loopy.set_transition(q, t, trie.next(q, t));
    }
    int at = trie.num_states;
    for (size_t i = 0; i < plans.size(); ++i) {
        const State end = ends[i];
        for (size_t j = 0; j < plans[i].loop_words.size(); ++j) {
            const Word& u = plans[i].loop_words[j];
            State cur = end;
            for (size_t k = 0; k + 1 < u.size(); ++k) {
                loopy.labels[at] = "z" + std::to_string(i) + "_" +
                                   std::to_string(j) + "_" + std::to_string(k);
                loopy.set_transition(cur, u[k], at);
                cur = at++;
            }
            loopy.set_transition(cur, u.back(), end);
        }
    }
    loopy.check_valid();

    Dfa grid = build_grid_dfa(a.alphabet, rep.finite_part);
    return product_union(complete(loopy), complete(grid));
}

Dfa unary_union_dfa(const std::vector<Dfa>& parts, bool accept_empty) {
    if (parts.empty()) throw std::invalid_argument("one part per letter required");
    const Alphabet& sigma = parts.front().alphabet;
    const int m = sigma.size();
    if (static_cast<int>(parts.size()) != m)
        throw std::invalid_argument("one part per letter required");
    int total = 1;
    for (const Dfa& u : parts) {
        u.check_valid();
        if (!(u.alphabet == sigma))
            throw std::invalid_argument("parts must share one alphabet");
        if (!u.complete) throw std::invalid_argument("parts must be complete");
        total += u.num_states;
    }

    Dfa au(sigma, total, 0);
    au.labels[0] = "eps";
    au.set_final(0, accept_empty);
    int offset = 1;
    for (Letter t = 0; t < m; ++t) {
        const Dfa& u = parts[static_cast<size_t>(t)];
        for (State q = 0; q < u.num_states; ++q) {
            au.labels[offset + q] = sigma.name(t) + ":" + u.labels[q];
            au.set_final(offset + q, u.is_final(q));
            for (Letter x = 0; x < m; ++x)
                au.set_transition(offset + q, x, offset + u.next(q, x));
        }
        au.set_transition(0, t, offset + u.next(u.initial, t));
        offset += u.num_states;
    }
    au.complete = true;
    au.check_valid();
    return au;
}

Dfa nfa_to_parikh_dfa(const Nfa& a) {
    const NfaDecomposition dec = decompose_nfa(a);
    const Dfa d0 = nonunary_to_dfa(dec.nonunary_part);

    std::vector<Dfa> unary;
    unary.reserve(dec.unary_parts.size());
    for (const Nfa& part : dec.unary_parts) unary.push_back(unary_nfa_to_dfa(part));

    return product_union(unary_union_dfa(unary, a.is_final(a.initial)), d0);
}

}  // namespace pareq
