#include "pareq/unary.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pareq {

bool UltimatelyPeriodicSet::accepts(Int length) const {
    if (length < 0) throw std::invalid_argument("length must be nonnegative");
    Int t = static_cast<Int>(tail.size());
    if (length < t) return tail[static_cast<size_t>(length)] != 0;
    return residues[static_cast<size_t>((length - t) % period)] != 0;
}

void UltimatelyPeriodicSet::check_valid() const {
    if (period < 1) throw std::logic_error("period must be positive");
    if (static_cast<Int>(residues.size()) != period)
        throw std::logic_error("one residue flag per period position required");
}

bool ChrobakNf::accepts(Int length) const {
    if (length < 0) throw std::invalid_argument("length must be nonnegative");
    Int s = static_cast<Int>(path.size());
    if (length < s) return path[static_cast<size_t>(length)] != 0;
    for (const ChrobakCycle& c : cycles) {
        Int pos = (c.entry + (length - s)) % c.length;
        if (c.flags[static_cast<size_t>(pos)] != 0) return true;
    }
    return false;
}

int ChrobakNf::cycle_state_count() const {
    int total = 0;
    for (const ChrobakCycle& c : cycles) total += c.length;
    return total;
}

Int ChrobakNf::cycle_lcm() const {
    Int l = 1;
    for (const ChrobakCycle& c : cycles) {
        Int g = std::gcd(l, static_cast<Int>(c.length));
        l = checked_mul(l / g, static_cast<Int>(c.length));
    }
    return l;
}

void ChrobakNf::check_valid() const {
    for (const ChrobakCycle& c : cycles) {
        if (c.length < 1) throw std::logic_error("cycle length must be positive");
        if (static_cast<int>(c.flags.size()) != c.length)
            throw std::logic_error("one flag per cycle state required");
        if (c.entry < 0 || c.entry >= c.length)
            throw std::logic_error("cycle entry out of range");
    }
}

bool is_unary_nfa(const Nfa& a) {
    int active = 0;
    for (Letter t = 0; t < a.alphabet.size(); ++t) {
        for (State q = 0; q < a.num_states; ++q) {
            if (!a.transitions[q][t].empty()) {
                ++active;
                break;
            }
        }
    }
    return active <= 1;
}

Letter active_letter(const Nfa& a) {
    for (Letter t = 0; t < a.alphabet.size(); ++t)
        for (State q = 0; q < a.num_states; ++q)
            if (!a.transitions[q][t].empty()) return t;
    return 0;
}

UltimatelyPeriodicSet unary_structure(const Nfa& a) {
    a.check_valid();
    if (!is_unary_nfa(a))
        throw std::invalid_argument(
            "automaton is not unary: several letters carry transitions");
    UltimatelyPeriodicSet u;
    if (a.alphabet.size() == 0) {
        u.tail = {static_cast<char>(a.is_final(a.initial) ? 1 : 0)};
        u.period = 1;
        u.residues = {0};
        return u;
    }
    const Letter act = active_letter(a);
    std::vector<State> cur = {a.initial};
    std::map<std::vector<State>, int> seen;
    std::vector<char> flags;
    for (;;) {
        auto [it, inserted] = seen.emplace(cur, static_cast<int>(flags.size()));
        if (!inserted) {
            int t = it->second;
            int total = static_cast<int>(flags.size());
            u.tail.assign(flags.begin(), flags.begin() + t);
            u.period = total - t;
            u.residues.assign(flags.begin() + t, flags.end());
            u.check_valid();
            return u;
        }
        bool accepting = false;
        for (State q : cur) accepting = accepting || a.is_final(q);
        flags.push_back(accepting ? 1 : 0);
        std::vector<char> mark(a.num_states, 0);
        for (State q : cur)
            for (State r : a.transitions[q][act]) mark[r] = 1;
        cur.clear();
        for (State q = 0; q < a.num_states; ++q)
            if (mark[q]) cur.push_back(q);
    }
}

namespace {

// One cover candidate: a cycle length together with the residues rho for
// which the whole progression {s + rho + k*c} is accepted.
struct ApCandidate {
    int length = 1;
    std::vector<char> flags;
};

constexpr Int kWindowGuard = 1'000'000;

Int guarded_lcm(Int a, Int b) {
    Int g = std::gcd(a, b);
    Int l = checked_mul(a / g, b);
    if (l > kWindowGuard)
        throw std::invalid_argument(
            "periodicity window exceeds the guard; periods too large");
    return l;
}

bool ap_valid(const UltimatelyPeriodicSet& u, Int s, int c, int rho) {
    Int t = static_cast<Int>(u.tail.size());
    Int step_lcm = guarded_lcm(c, u.period);
    Int limit = std::max(s + rho, t) + step_lcm;
    for (Int x = s + rho; x <= limit; x += c)
        if (!u.accepts(x)) return false;
    return true;
}

std::vector<ApCandidate> candidates_at(const UltimatelyPeriodicSet& u, Int s,
                                       int n) {
    std::vector<ApCandidate> out;
    for (int c = 1; c <= n; ++c) {
        ApCandidate cand;
        cand.length = c;
        cand.flags.assign(c, 0);
        bool any = false;
        for (int rho = 0; rho < c; ++rho) {
            if (ap_valid(u, s, c, rho)) {
                cand.flags[rho] = 1;
                any = true;
            }
        }
        if (any) out.push_back(std::move(cand));
    }
    return out;
}

using BitWords = std::vector<std::uint64_t>;

BitWords make_bits(Int bits) { return BitWords(static_cast<size_t>((bits + 63) / 64), 0); }

void set_bit(BitWords& b, Int i) {
    b[static_cast<size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
}

bool all_zero(const BitWords& b) {
    for (auto w : b)
        if (w) return false;
    return true;
}

// Both the accepted set (beyond the tail) and the candidate coverage are
// periodic, so checking one combined period past max(s, tail) decides
// coverage for every length >= s.
Int window_length(const UltimatelyPeriodicSet& u, Int s,
                  const std::vector<ApCandidate>& cands) {
    Int lam = 1;
    for (const ApCandidate& c : cands) lam = guarded_lcm(lam, c.length);
    Int l = guarded_lcm(lam, u.period);
    Int t = static_cast<Int>(u.tail.size());
    return (s < t ? t - s : 0) + l;
}

// Candidate indices (ascending) covering every accepted length >= s, of
// minimal total cycle length when the search space is small; nullopt when
// even all candidates together miss an accepted length.
std::optional<std::vector<int>> min_cover(const UltimatelyPeriodicSet& u, Int s,
                                          const std::vector<ApCandidate>& cands) {
    const Int window = window_length(u, s, cands);
    BitWords need = make_bits(window);
    for (Int i = 0; i < window; ++i)
        if (u.accepts(s + i)) set_bit(need, i);
    if (all_zero(need)) return std::vector<int>{};

    const int k = static_cast<int>(cands.size());
    std::vector<BitWords> cover(k, make_bits(window));
    for (int j = 0; j < k; ++j)
        for (Int i = 0; i < window; ++i)
            if (cands[j].flags[static_cast<size_t>(i % cands[j].length)])
                set_bit(cover[j], i);

    // Greedy pass, small periods first (candidates arrive sorted by length).
    std::vector<int> chosen;
    BitWords uncovered = need;
    for (int j = 0; j < k && !all_zero(uncovered); ++j) {
        bool helps = false;
        for (size_t w = 0; w < uncovered.size(); ++w)
            if (uncovered[w] & cover[j][w]) {
                helps = true;
                break;
            }
        if (!helps) continue;
        chosen.push_back(j);
        for (size_t w = 0; w < uncovered.size(); ++w) uncovered[w] &= ~cover[j][w];
    }
    if (!all_zero(uncovered)) return std::nullopt;

    // Drop choices that became redundant, largest period first.
    for (int pos = static_cast<int>(chosen.size()) - 1; pos >= 0; --pos) {
        bool redundant = true;
        for (size_t w = 0; w < need.size() && redundant; ++w) {
            std::uint64_t um = 0;
            for (size_t q = 0; q < chosen.size(); ++q)
                if (static_cast<int>(q) != pos) um |= cover[chosen[q]][w];
            if (need[w] & ~um) redundant = false;
        }
        if (redundant) chosen.erase(chosen.begin() + pos);
    }

    Int best_total = 0;
    for (int j : chosen) best_total += cands[j].length;

    // Exact minimum-total cover by subset enumeration when cheap enough.
    const Int words = static_cast<Int>(need.size());
    if (k <= 12 && (Int{1} << k) * words * k <= 50'000'000) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Int total = 0;
            for (int j = 0; j < k; ++j)
                if (mask & (1u << j)) total += cands[j].length;
            if (total >= best_total) continue;
            bool covers = true;
            for (size_t w = 0; w < need.size() && covers; ++w) {
                std::uint64_t um = 0;
                for (int j = 0; j < k; ++j)
                    if (mask & (1u << j)) um |= cover[j][w];
                if (need[w] & ~um) covers = false;
            }
            if (!covers) continue;
            best_total = total;
            chosen.clear();
            for (int j = 0; j < k; ++j)
                if (mask & (1u << j)) chosen.push_back(j);
        }
    }
    return chosen;
}

bool cover_feasible(const UltimatelyPeriodicSet& u, Int s, int n) {
    return min_cover(u, s, candidates_at(u, s, n)).has_value();
}

}  // namespace

ChrobakNf chrobak_normal_form(const Nfa& a) {
    UltimatelyPeriodicSet u = unary_structure(a);
    const int n = a.num_states;
    const Int s_max = static_cast<Int>(n) * n;
    if (!cover_feasible(u, s_max, n))
        throw std::logic_error(
            "no progression cover found within the quadratic path budget");
    Int lo = 0, hi = s_max;
    while (lo < hi) {
        Int mid = lo + (hi - lo) / 2;
        if (cover_feasible(u, mid, n))
            hi = mid;
        else
            lo = mid + 1;
    }
    const Int s = lo;

    std::vector<ApCandidate> cands = candidates_at(u, s, n);
    std::optional<std::vector<int>> chosen = min_cover(u, s, cands);
    if (!chosen) throw std::logic_error("cover vanished at the feasible path length");

    ChrobakNf nf;
    nf.path.resize(static_cast<size_t>(s));
    for (Int i = 0; i < s; ++i)
        nf.path[static_cast<size_t>(i)] = u.accepts(i) ? 1 : 0;
    for (int j : *chosen) {
        ChrobakCycle cycle;
        cycle.length = cands[j].length;
        cycle.flags = cands[j].flags;
        cycle.entry = 0;
        nf.cycles.push_back(std::move(cycle));
    }
    nf.check_valid();
    return nf;
}

Dfa unary_nfa_to_dfa(const Nfa& a) {
    UltimatelyPeriodicSet u = unary_structure(a);
    const int m = a.alphabet.size();
    if (m == 0) {
        Dfa d(a.alphabet, 1, 0);
        d.set_final(0, u.accepts(0));
        d.complete = true;
        d.check_valid();
        return d;
    }
    const Letter act = active_letter(a);
    const int t = static_cast<int>(u.tail.size());
    const int p = static_cast<int>(u.period);
    const bool need_dead = m > 1;
    Dfa d(a.alphabet, t + p + (need_dead ? 1 : 0), 0);
    for (int i = 0; i < t + p; ++i) {
        d.set_transition(i, act, i + 1 < t + p ? i + 1 : t);
        d.set_final(i, u.accepts(i));
        d.labels[i] = (i < t ? "t" + std::to_string(i)
                             : "r" + std::to_string(i - t));
    }
    if (need_dead) {
        const State dead = t + p;
        d.labels[dead] = "dead";
        for (Letter x = 0; x < m; ++x) {
            d.set_transition(dead, x, dead);
            if (x == act) continue;
            for (int i = 0; i < t + p; ++i) d.set_transition(i, x, dead);
        }
    }
    d.complete = true;
    d.check_valid();
    return d;
}

TwoWayDfa unary_nfa_to_2dfa(const Nfa& a) {
    const ChrobakNf nf = chrobak_normal_form(a);
    const int s = static_cast<int>(nf.path.size());
    const Letter act = a.alphabet.size() > 0 ? active_letter(a) : 0;
    const int k = static_cast<int>(nf.cycles.size());
    const bool always_beyond_path =
        std::any_of(nf.cycles.begin(), nf.cycles.end(), [](const ChrobakCycle& c) {
            return std::all_of(c.flags.begin(), c.flags.end(),
                               [](char f) { return f != 0; });
        });

    auto add_path = [&](TwoWayDfa& m, State beyond) {
        // Path state i sits on cell i+1; the right endmarker there means the
        // input has length exactly i.
        for (int i = 0; i < s; ++i) {
            m.labels[i] = "p" + std::to_string(i);
            if (beyond >= 0 || i + 1 < s)
                m.set_step(i, act, i + 1 < s ? i + 1 : beyond, Move::Right);
            if (nf.path[static_cast<size_t>(i)])
                m.set_step(i, m.right_marker(), m.accept, Move::Stay);
        }
    };

    if (always_beyond_path) {
        // Some cycle accepts every residue: every length >= s is in the
        // language, so one rightward run replaces all cycle sweeps.
        TwoWayDfa m(a.alphabet, s + 2, 0, s + 1);
        const State run = s;
        add_path(m, run);
        m.labels[run] = "run";
        m.labels[m.accept] = "acc";
        m.set_step(run, act, run, Move::Right);
        m.set_step(run, m.right_marker(), m.accept, Move::Stay);
        m.check_valid();
        return m;
    }

    if (k == 0) {
        if (s == 0) {
            // Empty language: a dead initial state next to the accept state.
            TwoWayDfa m(a.alphabet, 2, 0, 1);
            m.labels[0] = "dead";
            m.labels[1] = "acc";
            m.check_valid();
            return m;
        }
        TwoWayDfa m(a.alphabet, s + 1, 0, s);
        add_path(m, -1);
        m.labels[m.accept] = "acc";
        m.check_valid();
        return m;
    }

    // General shape: path, one run-right state, one sweep per cycle in
    // alternating directions, accept. Sweep j enters at (entry - s) mod c so
    // that after counting all input letters the state index at the far
    // endmarker is the exact cycle position for the input length.
    const int r = nf.cycle_state_count();
    TwoWayDfa m(a.alphabet, s + 2 + r, 0, s + 1 + r);
    const State run = s;
    std::vector<State> base(k);
    int at = s + 1;
    for (int j = 0; j < k; ++j) {
        base[j] = at;
        at += nf.cycles[j].length;
    }
    auto sweep_start = [&](int j) {
        const ChrobakCycle& c = nf.cycles[j];
        Int st = ((static_cast<Int>(c.entry) - s) % c.length + c.length) % c.length;
        return base[j] + static_cast<State>(st);
    };

    add_path(m, run);
    m.labels[run] = "run";
    m.labels[m.accept] = "acc";
    m.set_step(run, act, run, Move::Right);
    m.set_step(run, m.right_marker(), sweep_start(0), Move::Left);
    for (int j = 0; j < k; ++j) {
        const ChrobakCycle& c = nf.cycles[j];
        const bool leftward = (j % 2 == 0);
        const int far = leftward ? m.left_marker() : m.right_marker();
        for (int i = 0; i < c.length; ++i) {
            const State q = base[j] + i;
            m.labels[q] = "c" + std::to_string(j) + "_" + std::to_string(i);
            m.set_step(q, act, base[j] + (i + 1) % c.length,
                       leftward ? Move::Left : Move::Right);
            if (c.flags[static_cast<size_t>(i)]) {
                m.set_step(q, far, m.accept, Move::Stay);
            } else if (j + 1 < k) {
                m.set_step(q, far, sweep_start(j + 1),
                           leftward ? Move::Right : Move::Left);
            }
        }
    }
    m.check_valid();
    return m;
}

}  // namespace pareq
