#include "pareq/report.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pareq/automata.hpp"
#include "pareq/determinize.hpp"
#include "pareq/fixtures.hpp"
#include "pareq/grammar.hpp"
#include "pareq/parikh.hpp"
#include "pareq/twoway.hpp"
#include "pareq/unary.hpp"

namespace pareq {

namespace {

long long binomial(int n, int k) {
    long long b = 1;
    for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    return b;
}

BoundsRow hard_row(std::string conversion, int n, int m, long long states,
                   std::string bound_name, long long bound_value) {
    return {std::move(conversion), n,           m, states, std::move(bound_name),
            bound_value,           states <= bound_value ? "PASS" : "FAIL"};
}

BoundsRow soft_row(std::string conversion, int n, int m, long long states,
                   std::string bound_name, long long bound_value) {
    return {std::move(conversion), n,           m, states, std::move(bound_name),
            bound_value,           states <= bound_value ? "PASS" : "WARN"};
}

// Two fixed complete DFAs (a-count mod 3, b-count mod 4) for the product row.
Dfa modular_counter(const Alphabet& alphabet, Letter counted, int modulus) {
    Dfa d(alphabet, modulus, 0);
    for (State q = 0; q < modulus; ++q)
        for (Letter t = 0; t < alphabet.size(); ++t)
            d.set_transition(q, t, t == counted ? (q + 1) % modulus : q);
    d.set_final(0);
    d.complete = true;
    return d;
}

}  // namespace

std::vector<BoundsRow> standard_report(std::uint64_t seed) {
    std::vector<BoundsRow> rows;

    // Automaton decomposition on a 4-state, 2-letter instance.
    const Nfa a = random_nfa(seed, 4, 2);
    const int n = a.num_states;
    const int m = a.alphabet.size();
    const NfaDecomposition dec = decompose_nfa(a);
    rows.push_back(hard_row("A_0", n, m, dec.nonunary_part.num_states,
                            "n(m+1)+1", static_cast<long long>(n) * (m + 1) + 1));
    long long widest_unary = 0;
    for (const Nfa& part : dec.unary_parts)
        widest_unary = std::max(widest_unary,
                                static_cast<long long>(part.num_states));
    rows.push_back(hard_row("A_i", n, m, widest_unary, "n", n));

    // Grammar decomposition and the multiset automaton on corpus grammars.
    const std::vector<Cnfg> corpus = grammar_corpus();
    const Cnfg& g3 = corpus[0];  // three variables, two letters
    const int h3 = g3.num_variables();
    const int gm = g3.terminals.size();
    rows.push_back(hard_row("G_0", h3, gm,
                            decompose_cfg(g3).nonunary_part.num_variables(),
                            "mh-m+1",
                            static_cast<long long>(gm) * h3 - gm + 1));
    const Cnfg& g2 = corpus[2];  // two variables
    const int h2 = g2.num_variables();
    rows.push_back(hard_row(
        "grammar-nfa", h2, g2.terminals.size(),
        cfg_to_parikh_nfa(g2).num_states,
        "C(" + std::to_string(2 * h2 + 1) + "," + std::to_string(h2) + ")",
        binomial(2 * h2 + 1, h2)));

    // Unary conversions on a 6-state instance.
    const Nfa u = random_unary_nfa(seed + 3, 6);
    const int un = u.num_states;
    rows.push_back(hard_row("unary-2dfa", un, 1,
                            unary_nfa_to_2dfa(u).num_states, "n^2+1",
                            static_cast<long long>(un) * un + 1));
    const ChrobakNf nf = chrobak_normal_form(u);
    long long cycle_states = 0;
    for (const ChrobakCycle& c : nf.cycles) cycle_states += c.length;
    rows.push_back(soft_row("chrobak-path", un, 1,
                            static_cast<long long>(nf.path.size()), "n^2-n",
                            static_cast<long long>(un) * un - un));
    rows.push_back(soft_row("chrobak-cycles", un, 1, cycle_states, "n-1",
                            un - 1));

    // Two-way union of the decomposed parts: states add up exactly.
    const Nfa b = random_nfa(seed + 1, 3, 2);
    const NfaDecomposition bdec = decompose_nfa(b);
    long long part_sum =
        dfa_to_2dfa(nonunary_to_dfa(bdec.nonunary_part)).num_states;
    for (const Nfa& part : bdec.unary_parts)
        part_sum += unary_nfa_to_2dfa(part).num_states;
    rows.push_back(hard_row("seq-union", b.num_states, b.alphabet.size(),
                            nfa_to_parikh_2dfa(b).num_states, "sum n_i",
                            part_sum));

    // One-way product union of two fixed counters.
    const Alphabet ab({"a", "b"});
    const Dfa product = product_union(modular_counter(ab, 0, 3),
                                      modular_counter(ab, 1, 4));
    rows.push_back(hard_row("product-union", 3, 2, product.num_states,
                            "n1*n2", 12));

    // Offsets after normalization stay polynomial in the automaton size;
    // reported, not enforced.
    const Nfa c0 = decompose_nfa(random_nfa(seed + 2, 4, 2)).nonunary_part;
    const SemilinearRep rep =
        normalize_offsets(extract_semilinear(c0), c0.num_states);
    long long norm = 0;
    for (const LinearSet& z : rep.linear_parts)
        norm = std::max(norm, static_cast<long long>(inf_norm(z.offset)));
    rows.push_back(
        {"offset-norm", c0.num_states, m, norm, "p(n)", norm, "INFO"});

    // Grammar to two-way machine against the soft exponential bound.
    long long two_h2 = 1;
    for (int j = 0; j < h2 * h2; ++j) two_h2 *= 2;
    rows.push_back(soft_row("grammar-2dfa", h2, g2.terminals.size(),
                            cfg_to_parikh_2dfa(g2).num_states, "2^(h^2)",
                            two_h2));

    return rows;
}

std::string report_text(const std::vector<BoundsRow>& rows) {
    std::ostringstream out;
    for (const BoundsRow& row : rows) {
        if (row.status == "INFO")
            out << row.conversion << " = " << row.states << " ("
                << row.bound_name << ", reported only) INFO\n";
        else
            out << row.conversion << " states = " << row.states << " ≤ "
                << row.bound_name << " = " << row.bound_value << " "
                << row.status << "\n";
    }
    return out.str();
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string report_csv(const std::vector<BoundsRow>& rows) {
    std::ostringstream out;
    out << "conversion,input_n,input_m,states,bound_name,bound_value,status\n";
    for (const BoundsRow& row : rows)
        out << csv_field(row.conversion) << "," << row.input_n << ","
            << row.input_m << "," << row.states << ","
            << csv_field(row.bound_name) << "," << row.bound_value << ","
            << row.status << "\n";
    return out.str();
}

}  // namespace pareq
