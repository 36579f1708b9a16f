// End-to-end acceptance checks. Each criterion prints exactly one PASS or
// FAIL line; the process exits nonzero if any criterion fails. Tolerances
// and bounds are pinned as the constants below.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "pareq/automata.hpp"
#include "pareq/determinize.hpp"
#include "pareq/fixtures.hpp"
#include "pareq/grammar.hpp"
#include "pareq/parikh.hpp"
#include "pareq/twoway.hpp"
#include "pareq/unary.hpp"

using namespace pareq;

namespace {

// Pinned tolerances. Changing any of these changes what is being promised.
constexpr Int kExampleImageBound = 250;       // fixture image comparison
constexpr double kExampleSecondsLimit = 10.0;
constexpr int kPipelineCases = 200;           // random NFA -> DFA pipelines
constexpr Int kPipelineImageBound = 10;
constexpr double kPipelineSecondsLimit = 120.0;
constexpr int kShapeNfaCases = 12;            // decomposition spot checks
constexpr int kShapeWordLength = 8;
constexpr int kNormalizeCases = 100;          // random normalization inputs
constexpr Int kNormalizeBox = 10;
constexpr int kUnaryCases = 100;              // random unary conversions
constexpr Int kUnaryWindowCap = 40;
constexpr Int kCorpusImageBound = 8;          // grammar corpus comparisons
constexpr int kWitnessMinimalStates = 9;      // lower bound after minimize
constexpr Int kWitnessImageBound = 12;
constexpr Int kTwoWayImageBound = 8;          // full two-way enumerations
constexpr Int kExampleTwoWayBound = 60;       // sparse two-way enumeration
constexpr Int kExampleTwoWayRare = 2;
constexpr int kOracleCases = 30;              // oracle cross-checks
constexpr Int kOracleBound = 6;

int failures = 0;

void criterion(int number, const std::string& name, bool ok) {
    std::cout << "criterion " << number << " (" << name
              << "): " << (ok ? "PASS" : "FAIL") << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

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

// 1: the picture-book instance. 18-state NFA, its 212-state minimal DFA,
// the hand-built 22-state letter-count-equivalent DFA, and image equality
// at a bound beyond the largest cycle structure, all inside a time budget.
void check_example_fixture() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const Nfa a = example1_nfa();
    const Dfa fixture = example1_parikh_dfa();
    ok = ok && a.num_states == 18;
    ok = ok && fixture.num_states == 22;
    ok = ok && minimize(subset_construct(a)).num_states == 212;
    ok = ok && parikh_image_bounded(a, kExampleImageBound) ==
                   parikh_image_bounded(fixture, kExampleImageBound);
    ok = ok && seconds_since(start) < kExampleSecondsLimit;
    criterion(1, "example fixture pipeline", ok);
}

// 2: the full NFA -> DFA pipeline preserves bounded letter-count images
// across many random instances, inside a time budget.
void check_random_pipelines() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int i = 0; i < kPipelineCases; ++i) {
        const int m = i < kPipelineCases / 2 ? 2 : 3;
        const int n = i % 5 + 1;
        const Nfa a = random_nfa(static_cast<std::uint64_t>(i), n, m);
        const Dfa d = nfa_to_parikh_dfa(a);
        if (parikh_image_bounded(d, kPipelineImageBound) !=
            parikh_image_bounded(a, kPipelineImageBound)) {
            ok = false;
            break;
        }
    }
    ok = ok && seconds_since(start) < kPipelineSecondsLimit;
    criterion(2, "random pipeline image equality", ok);
}

// 3: decompositions have the advertised exact sizes and split the language
// by word shape.
void check_decompositions() {
    bool ok = true;
    for (int i = 0; i < kShapeNfaCases && ok; ++i) {
        const int m = i % 3 == 2 ? 3 : 2;
        const int n = i % 4 + 2;
        const Nfa a = random_nfa(static_cast<std::uint64_t>(100 + i), n, m);
        const NfaDecomposition dec = decompose_nfa(a);
        ok = ok && dec.nonunary_part.num_states == n * (m + 1) + 1;
        ok = ok && static_cast<int>(dec.unary_parts.size()) == m;
        for (const Nfa& part : dec.unary_parts)
            ok = ok && part.num_states == n;
        for (const Word& w : all_words(m, kShapeWordLength)) {
            const bool in_l = run_nfa(a, w);
            const bool unary = is_unary_vec(parikh_vector(m, w));
            bool in_parts = run_nfa(dec.nonunary_part, w);
            ok = ok && in_parts == (in_l && !unary);
            bool in_unary = false;
            for (const Nfa& part : dec.unary_parts)
                if (run_nfa(part, w)) in_unary = true;
            ok = ok && in_unary == (in_l && unary);
            if (!ok) break;
        }
    }
    for (const Cnfg& g : grammar_corpus()) {
        if (!ok) break;
        const int h = g.num_variables();
        const int m = g.terminals.size();
        const CfgDecomposition dec = decompose_cfg(g);
        ok = ok && dec.nonunary_part.num_variables() == m * h - m + 1;
        ok = ok && static_cast<int>(dec.unary_parts.size()) == m;
        for (const Cnfg& part : dec.unary_parts)
            ok = ok && part.num_variables() == h;
        for (const Word& w : all_words(m, kShapeWordLength)) {
            const bool in_l = cyk_member(g, w);
            const bool unary = is_unary_vec(parikh_vector(m, w));
            ok = ok && cyk_member(dec.nonunary_part, w) == (in_l && !unary);
            bool in_unary = false;
            for (const Cnfg& part : dec.unary_parts)
                if (cyk_member(part, w)) in_unary = true;
            ok = ok && in_unary == (in_l && unary);
            if (!ok) break;
        }
    }
    criterion(3, "decomposition sizes and shape split", ok);
}

// 4: offset normalization on the two-copies instance produces the pinned
// output, and random inputs keep their vector set while gaining pairwise
// distinct nonunary markers below the offsets with norms bounded by
// position.
void check_normalization() {
    bool ok = true;

    SemilinearRep two(2);
    two.linear_parts = {LinearSet({1, 1}, {{1, 0}}),
                        LinearSet({1, 1}, {{1, 0}})};
    const SemilinearRep normed = normalize_offsets(two, 2);
    ok = ok && normed.linear_parts.size() == 2;
    ok = ok && normed.linear_parts[0].offset == ParikhVec{1, 1};
    ok = ok && normed.linear_parts[1].offset == ParikhVec{3, 1};
    ok = ok && normed.finite_part == std::set<ParikhVec>{{1, 1}, {2, 1}};
    ok = ok && normed.chosen_preds.has_value();
    ok = ok && *normed.chosen_preds ==
                   std::vector<ParikhVec>{{1, 1}, {2, 1}};

    for (int i = 0; i < kNormalizeCases && ok; ++i) {
        const int dim = i % 2 == 0 ? 2 : 3;
        const SemilinearRep rep =
            random_nonunary_rep(static_cast<std::uint64_t>(i), dim);
        const SemilinearRep norm = normalize_offsets(rep, 4);
        norm.check_valid();
        if (!norm.chosen_preds ||
            norm.chosen_preds->size() != norm.linear_parts.size()) {
            ok = false;
            break;
        }
        std::set<ParikhVec> markers;
        for (size_t j = 0; j < norm.linear_parts.size(); ++j) {
            const ParikhVec& x = (*norm.chosen_preds)[j];
            ok = ok && !is_unary_vec(x);
            ok = ok && vec_leq(x, norm.linear_parts[j].offset);
            ok = ok && inf_norm(x) <= static_cast<Int>(j) + 1;
            ok = ok && markers.insert(x).second;
        }
        ok = ok && semilinear_box(rep, kNormalizeBox) ==
                       semilinear_box(norm, kNormalizeBox);
    }
    criterion(4, "offset normalization", ok);
}

// 5: unary conversions agree with the input automaton on an observation
// window covering the whole periodic structure; the two-way machine obeys
// its quadratic bound. The path/cycle size bounds are soft: violations are
// counted and reported but do not fail the criterion.
void check_unary_conversions() {
    bool ok = true;
    int soft_warnings = 0;
    for (int i = 0; i < kUnaryCases && ok; ++i) {
        const int n = i % 8 + 1;
        const Nfa a = random_unary_nfa(static_cast<std::uint64_t>(i), n);
        const ChrobakNf nf = chrobak_normal_form(a);
        const Dfa d = unary_nfa_to_dfa(a);
        const TwoWayDfa m = unary_nfa_to_2dfa(a);
        ok = ok && m.num_states <= n * n + 1;
        if (static_cast<Int>(nf.path.size()) > static_cast<Int>(n) * n - n ||
            nf.cycle_state_count() > n - 1)
            ++soft_warnings;
        const Int window = std::min(
            kUnaryWindowCap,
            static_cast<Int>(nf.path.size()) + 2 * nf.cycle_lcm());
        for (Int l = 0; l <= window && ok; ++l) {
            const Word w(static_cast<size_t>(l), 0);
            const bool expect = run_nfa(a, w);
            ok = ok && nf.accepts(l) == expect;
            ok = ok && run_dfa(d, w) == expect;
            const RunOutcome out = simulate_2dfa(m, w);
            ok = ok && out.verdict != Verdict::RejectLoop;
            ok = ok && (out.verdict == Verdict::Accept) == expect;
        }
    }
    if (soft_warnings > 0)
        std::cout << "  note: " << soft_warnings
                  << " instances exceeded a soft path/cycle size bound\n";
    criterion(5, "unary conversions", ok);
}

// 6: the grammar-to-NFA construction respects the binomial state bound and
// matches the enumeration oracle on the whole corpus.
void check_grammar_corpus() {
    bool ok = true;
    for (const Cnfg& g : grammar_corpus()) {
        const int h = g.num_variables();
        ok = ok && h <= 4;
        long long bound = 1;
        for (int j = 1; j <= h; ++j) bound = bound * (h + 1 + j) / j;
        const Nfa a = cfg_to_parikh_nfa(g);
        ok = ok && a.num_states <= bound;
        ok = ok && parikh_image_bounded(a, kCorpusImageBound) ==
                       parikh_image_bounded_words(g, kCorpusImageBound);
        if (!ok) break;
    }
    criterion(6, "grammar corpus conversions", ok);
}

// 7: the doubling grammar family witnesses that compact grammars force
// large equivalent DFAs: h variables for every h, and for h = 5 the
// minimal letter-count-equivalent DFA still needs many states while the
// image is the single vector (4,4).
void check_witness_family() {
    bool ok = true;
    for (int h = 3; h <= 6; ++h)
        ok = ok && witness_grammar(h).num_variables() == h;
    const Cnfg g5 = witness_grammar(5);
    const Dfa d = cfg_to_parikh_dfa(g5);
    ok = ok && minimize(d).num_states >= kWitnessMinimalStates;
    ok = ok && parikh_image_bounded(d, kWitnessImageBound) ==
                   std::set<ParikhVec>{{4, 4}};
    criterion(7, "doubling grammar witness", ok);
}

// 8: two-way conversions. Sequential union adds up component sizes
// exactly; the full-enumeration image matches the oracle on random
// automata and the grammar corpus; on the picture-book instance the
// machine matches the oracle over all words of length up to 60 with at
// most two letters besides a, and never loops.
void check_twoway_conversions() {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 10 && ok; ++seed) {
        const Nfa a = random_nfa(seed, 4, 2);
        const NfaDecomposition dec = decompose_nfa(a);
        long long part_sum =
            dfa_to_2dfa(nonunary_to_dfa(dec.nonunary_part)).num_states;
        for (const Nfa& part : dec.unary_parts)
            part_sum += unary_nfa_to_2dfa(part).num_states;
        const TwoWayDfa m = nfa_to_parikh_2dfa(a);
        ok = ok && m.num_states == part_sum;
        ok = ok && parikh_image_bounded_words(m, kTwoWayImageBound) ==
                       parikh_image_bounded(a, kTwoWayImageBound);
    }
    for (const Cnfg& g : grammar_corpus()) {
        if (!ok) break;
        const TwoWayDfa m = cfg_to_parikh_2dfa(g);
        ok = ok && parikh_image_bounded_words(m, kTwoWayImageBound) ==
                       parikh_image_bounded(g, kTwoWayImageBound);
    }
    if (ok) {
        const Nfa a = example1_nfa();
        const TwoWayDfa m = nfa_to_parikh_2dfa(a);
        std::set<ParikhVec> expect;
        for (const ParikhVec& v :
             parikh_image_bounded(a, kExampleTwoWayBound))
            if (v[1] <= kExampleTwoWayRare) expect.insert(v);
        ok = ok && parikh_image_sparse_words(m, kExampleTwoWayBound, 0,
                                             kExampleTwoWayRare) == expect;
        // The machine halts on every sampled word, accepted or not.
        for (const Word& w : all_words(2, 10)) {
            if (parikh_vector(2, w)[1] > kExampleTwoWayRare) continue;
            if (simulate_2dfa(m, w).verdict == Verdict::RejectLoop) {
                ok = false;
                break;
            }
        }
    }
    criterion(8, "two-way conversions", ok);
}

// 9: the two independent image oracles (graph walk and word enumeration)
// agree on random automata and on the grammar corpus.
void check_oracle_consistency() {
    bool ok = true;
    for (int i = 0; i < kOracleCases && ok; ++i) {
        const int m = i % 3 == 2 ? 3 : 2;
        const Nfa a = random_nfa(static_cast<std::uint64_t>(i), 4, m);
        ok = ok && parikh_image_bounded(a, kOracleBound) ==
                       parikh_image_bounded_words(a, kOracleBound);
        const Dfa d = subset_construct(a);
        ok = ok && parikh_image_bounded(d, kOracleBound) ==
                       parikh_image_bounded(a, kOracleBound);
    }
    for (const Cnfg& g : grammar_corpus()) {
        if (!ok) break;
        ok = ok && parikh_image_bounded(g, kOracleBound) ==
                       parikh_image_bounded_words(g, kOracleBound);
    }
    criterion(9, "oracle self-consistency", ok);
}

}  // namespace

int main() {
    check_example_fixture();
    check_random_pipelines();
    check_decompositions();
    check_normalization();
    check_unary_conversions();
    check_grammar_corpus();
    check_witness_family();
    check_twoway_conversions();
    check_oracle_consistency();
    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
