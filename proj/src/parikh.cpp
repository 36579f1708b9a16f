#include "pareq/parikh.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace pareq {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

ParikhVec vec_add(const ParikhVec& a, const ParikhVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimensions disagree");
    ParikhVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

ParikhVec vec_scale(const ParikhVec& v, Int k) {
    ParikhVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(v[i], k);
    return r;
}

bool vec_leq(const ParikhVec& a, const ParikhVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimensions disagree");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool vec_lex_less(const ParikhVec& a, const ParikhVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_unary_vec(const ParikhVec& v) {
    int nonzero = 0;
    for (Int c : v)
        if (c != 0) ++nonzero;
    return nonzero <= 1;
}

Int inf_norm(const ParikhVec& v) {
    Int best = 0;
    for (Int c : v) best = std::max(best, c);
    return best;
}

Int sum(const ParikhVec& v) {
    Int s = 0;
    for (Int c : v) s = checked_add(s, c);
    return s;
}

ParikhVec parikh_vector(int alphabet_size, const Word& word) {
    ParikhVec v(alphabet_size, 0);
    for (Letter t : word) {
        if (t < 0 || t >= alphabet_size)
            throw std::invalid_argument("letter index out of range in word");
        v[t] += 1;
    }
    return v;
}

LinearSet::LinearSet(ParikhVec offset_, std::vector<ParikhVec> generators_)
    : offset(std::move(offset_)) {
    for (auto& g : generators_) {
        if (g.size() != offset.size())
            throw std::invalid_argument("generator dimension disagrees with offset");
        for (Int c : g)
            if (c < 0) throw std::invalid_argument("generators must be nonnegative");
        if (inf_norm(g) > 0) generators.push_back(std::move(g));
    }
    for (Int c : offset)
        if (c < 0) throw std::invalid_argument("offset must be nonnegative");
}

void SemilinearRep::check_valid() const {
    for (const auto& v : finite_part)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("finite part vector has wrong dimension");
    for (const auto& z : linear_parts)
        if (z.dim() != dim) throw std::invalid_argument("linear part has wrong dimension");
    if (!chosen_preds) return;
    const auto& xs = *chosen_preds;
    if (xs.size() != linear_parts.size())
        throw std::invalid_argument("chosen_preds must align with linear_parts");
    for (size_t i = 0; i < xs.size(); ++i) {
        if (is_unary_vec(xs[i]))
            throw std::invalid_argument("chosen predecessor must be nonunary");
        if (!vec_leq(xs[i], linear_parts[i].offset))
            throw std::invalid_argument("chosen predecessor must precede its offset componentwise");
        if (inf_norm(xs[i]) > static_cast<Int>(i) + 1)
            throw std::invalid_argument("chosen predecessor norm exceeds its 1-based position");
        for (size_t j = 0; j < i; ++j)
            if (xs[j] == xs[i])
                throw std::invalid_argument("chosen predecessors must be pairwise distinct");
    }
}

namespace {

struct VecHash {
    size_t operator()(const ParikhVec& v) const {
        size_t h = 1469598103934665603ull;
        for (Int c : v) {
            h ^= static_cast<size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

struct IndexedVecHash {
    size_t operator()(const std::pair<size_t, ParikhVec>& c) const {
        return VecHash()(c.second) * 31 + c.first;
    }
};

using FailedMemo = std::unordered_set<std::pair<size_t, ParikhVec>, IndexedVecHash>;

// Depth-first search for nonnegative coefficients writing target as a
// combination of gens[j..]; memoizes failed (suffix, remainder) pairs.
bool cone_member(const ParikhVec& target, const std::vector<ParikhVec>& gens, size_t j,
                 FailedMemo& failed) {
    if (inf_norm(target) == 0) return true;
    if (j == gens.size()) return false;
    if (failed.count({j, target})) return false;

    const ParikhVec& g = gens[j];
    Int cap = -1;  // largest usable coefficient for g
    for (size_t c = 0; c < g.size(); ++c)
        if (g[c] > 0) {
            Int q = target[c] / g[c];
            cap = cap < 0 ? q : std::min(cap, q);
        }
    ParikhVec rem = target;
    for (Int k = 0; k <= cap; ++k) {
        if (cone_member(rem, gens, j + 1, failed)) return true;
        if (k < cap)
            for (size_t c = 0; c < g.size(); ++c) rem[c] -= g[c];
    }
    failed.insert({j, target});
    return false;
}

}  // namespace

bool linear_set_membership(const ParikhVec& v, const LinearSet& z) {
    if (v.size() != z.offset.size()) throw std::invalid_argument("vector dimensions disagree");
    if (!vec_leq(z.offset, v)) return false;
    ParikhVec target(v.size());
    for (size_t i = 0; i < v.size(); ++i) target[i] = v[i] - z.offset[i];
    FailedMemo failed;
    return cone_member(target, z.generators, 0, failed);
}

bool semilinear_membership(const ParikhVec& v, const SemilinearRep& rep) {
    if (static_cast<int>(v.size()) != rep.dim)
        throw std::invalid_argument("vector dimension disagrees with representation");
    if (rep.finite_part.count(v)) return true;
    for (const auto& z : rep.linear_parts)
        if (linear_set_membership(v, z)) return true;
    return false;
}

Word canonical_word(const ParikhVec& v) {
    Word w;
    for (size_t t = 0; t < v.size(); ++t) {
        if (v[t] < 0) throw std::invalid_argument("negative component has no spelling");
        for (Int k = 0; k < v[t]; ++k) w.push_back(static_cast<Letter>(t));
    }
    return w;
}

Word shifted_word(const ParikhVec& v) {
    Word w = canonical_word(v);
    if (w.empty()) return w;
    std::rotate(w.begin(), w.begin() + 1, w.end());
    return w;
}

Word rotate_to_letter(const ParikhVec& v, Letter t) {
    if (t < 0 || t >= static_cast<int>(v.size()))
        throw std::invalid_argument("rotation letter out of range");
    if (v[t] <= 0)
        throw std::invalid_argument("rotation letter must occur in the vector");
    Word w = canonical_word(v);
    auto it = std::find(w.begin(), w.end(), t);
    std::rotate(w.begin(), it, w.end());
    return w;
}

namespace {

// Fraction-free Gaussian elimination; returns the rank. Matrix entries are
// modified in place. Row echelon with previous pivot division keeps every
// intermediate value an exact integer.
int bareiss_rank(std::vector<ParikhVec> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Int num = checked_mul(m[r][c], m[i][j]);
                num = checked_add(num, -checked_mul(m[i][c], m[r][j]));
                if (num % prev != 0) throw std::logic_error("fraction-free elimination invariant broken");
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

// Exact determinant of a square integer matrix (Bareiss).
Int bareiss_det(std::vector<ParikhVec> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    Int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j) {
                Int num = checked_mul(m[c][c], m[i][j]);
                num = checked_add(num, -checked_mul(m[i][c], m[c][j]));
                if (num % prev != 0) throw std::logic_error("fraction-free elimination invariant broken");
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return checked_mul(sign, m[n - 1][n - 1]);
}

// Rows of `vectors` restricted to the component indices in `rows`, viewed as
// a matrix whose columns are the vectors.
std::vector<ParikhVec> submatrix(const std::vector<ParikhVec>& vectors,
                                 const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<ParikhVec> m(rows.size(), ParikhVec(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m[i][j] = vectors[cols[j]][rows[i]];
    return m;
}

// First (in lexicographic order) size-k subset of 0..m-1 for which the
// columns restricted to those rows are nonsingular.
std::vector<int> nonsingular_rows(const std::vector<ParikhVec>& vectors, int m, int k) {
    std::vector<int> cols(vectors.size());
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        if (bareiss_det(submatrix(vectors, pick, cols)) != 0) return pick;
        // next combination
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) throw std::logic_error("no nonsingular row subset for independent vectors");
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

void select_indices(const std::vector<ParikhVec>& vectors, std::vector<int> rows,
                    std::vector<int> cols, std::vector<int>& out) {
    if (cols.empty()) return;
    // Expand the determinant along the last column: some row with a nonzero
    // entry there leaves a nonsingular minor.
    int last = cols.back();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (vectors[last][rows[i]] == 0) continue;
        std::vector<int> sub_rows = rows;
        sub_rows.erase(sub_rows.begin() + i);
        std::vector<int> sub_cols(cols.begin(), cols.end() - 1);
        if (bareiss_det(submatrix(vectors, sub_rows, sub_cols)) != 0) {
            out[last] = rows[i];
            select_indices(vectors, std::move(sub_rows), std::move(sub_cols), out);
            return;
        }
    }
    throw std::logic_error("index selection failed on a nonsingular matrix");
}

}  // namespace

int integer_rank(const std::vector<ParikhVec>& vectors) {
    return bareiss_rank(vectors);
}

std::vector<int> independent_indices(const std::vector<ParikhVec>& vectors) {
    const int k = static_cast<int>(vectors.size());
    if (k == 0) return {};
    const int m = static_cast<int>(vectors[0].size());
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != m)
            throw std::invalid_argument("vector dimensions disagree");
    if (integer_rank(vectors) != k)
        throw std::invalid_argument("independent_indices requires linearly independent vectors");

    std::vector<int> rows = nonsingular_rows(vectors, m, k);
    std::vector<int> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<int> out(k, -1);
    select_indices(vectors, std::move(rows), std::move(cols), out);
    for (int j = 0; j < k; ++j) {
        assert(out[j] >= 0 && vectors[j][out[j]] != 0);
    }
    return out;
}

namespace {

Int vec_gcd(const ParikhVec& v) {
    Int g = 0;
    for (Int c : v) g = std::gcd(g, c < 0 ? -c : c);
    return g;
}

// An integer dependency among the given vectors: lambda != 0 with
// sum_j lambda[j] * vectors[j] = 0, entries gcd-reduced, and at least one
// positive entry. Requires the vectors to be linearly dependent.
ParikhVec integer_dependency(const std::vector<ParikhVec>& vectors) {
    const int k = static_cast<int>(vectors.size());
    const int m = static_cast<int>(vectors[0].size());

    // Shortest dependent prefix: its first l-1 vectors are independent, so
    // the dependency is a generalized cross product of signed minors.
    int l = 1;
    while (l <= k) {
        std::vector<ParikhVec> prefix(vectors.begin(), vectors.begin() + l);
        if (integer_rank(prefix) < l) break;
        ++l;
    }
    if (l > k) throw std::invalid_argument("integer_dependency requires dependent vectors");

    std::vector<ParikhVec> prefix(vectors.begin(), vectors.begin() + l);
    std::vector<int> rows;
    if (l == 1) {
        rows = {};  // the single vector is zero; lambda = (1)
    } else {
        std::vector<ParikhVec> head(vectors.begin(), vectors.begin() + l - 1);
        rows = nonsingular_rows(head, m, l - 1);
    }

    ParikhVec lambda(k, 0);
    std::vector<int> all_cols(l);
    std::iota(all_cols.begin(), all_cols.end(), 0);
    Int sign = 1;
    for (int j = l - 1; j >= 0; --j) {
        std::vector<int> cols;
        for (int c = 0; c < l; ++c)
            if (c != j) cols.push_back(c);
        lambda[j] = checked_mul(sign, bareiss_det(submatrix(prefix, rows, cols)));
        sign = -sign;
    }

    Int g = vec_gcd(lambda);
    if (g == 0) throw std::logic_error("degenerate dependency");
    for (Int& c : lambda) c /= g;
    bool has_positive = std::any_of(lambda.begin(), lambda.end(), [](Int c) { return c > 0; });
    if (!has_positive)
        for (Int& c : lambda) c = -c;

    // Cross-check the dependency exactly.
    for (int c = 0; c < m; ++c) {
        Int s = 0;
        for (int j = 0; j < k; ++j) s = checked_add(s, checked_mul(lambda[j], vectors[j][c]));
        if (s != 0) throw std::logic_error("dependency cross-check failed");
    }
    return lambda;
}

void reduce_rec(const LinearSet& z, std::vector<LinearSet>& out) {
    const int k = static_cast<int>(z.generators.size());
    if (integer_rank(z.generators) == k) {
        LinearSet done = z;
        done.independent = true;
        out.push_back(std::move(done));
        return;
    }
    ParikhVec lambda = integer_dependency(z.generators);

    // Every combination has a representative where some generator with a
    // positive dependency coefficient is used fewer than lambda[j] times:
    // otherwise subtract the positive part and add the negative part, which
    // keeps the value and strictly shrinks the coefficients on the positive
    // side. The negative side is nonempty because the generators are
    // nonnegative and nonzero.
    bool has_negative = std::any_of(lambda.begin(), lambda.end(), [](Int c) { return c < 0; });
    if (!has_negative) {
        // One-sided dependency can only come from a zero vector, which the
        // constructor filtered out.
        throw std::logic_error("one-sided dependency among nonzero nonnegative generators");
    }
    for (int j = 0; j < k; ++j) {
        if (lambda[j] <= 0) continue;
        std::vector<ParikhVec> rest;
        for (int i = 0; i < k; ++i)
            if (i != j) rest.push_back(z.generators[i]);
        ParikhVec offset = z.offset;
        for (Int c = 0; c < lambda[j]; ++c) {
            reduce_rec(LinearSet(offset, rest), out);
            offset = vec_add(offset, z.generators[j]);
        }
    }
}

}  // namespace

std::vector<LinearSet> independence_reduce(const LinearSet& z) {
    std::vector<LinearSet> out;
    reduce_rec(z, out);
    // Drop exact duplicates produced by symmetric branches.
    std::sort(out.begin(), out.end(), [](const LinearSet& a, const LinearSet& b) {
        if (a.offset != b.offset) return vec_lex_less(a.offset, b.offset);
        return a.generators < b.generators;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const LinearSet& a, const LinearSet& b) {
                              return a.offset == b.offset && a.generators == b.generators;
                          }),
              out.end());
    return out;
}

namespace {

struct ConfigHash {
    size_t operator()(const std::pair<int, ParikhVec>& c) const {
        return VecHash()(c.second) * 31 + static_cast<size_t>(c.first);
    }
};

template <typename Expand>
std::set<ParikhVec> image_walk(int num_states, int initial, const std::vector<char>& finals,
                               int alphabet_size, Int bound, Expand&& expand) {
    std::set<ParikhVec> image;
    std::unordered_set<std::pair<int, ParikhVec>, ConfigHash> seen;
    std::vector<std::pair<int, ParikhVec>> stack;
    ParikhVec zero(alphabet_size, 0);
    stack.emplace_back(initial, zero);
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto [q, v] = std::move(stack.back());
        stack.pop_back();
        if (finals[q]) image.insert(v);
        if (sum(v) == bound) continue;
        expand(q, v, [&](int p, Letter t) {
            ParikhVec w = v;
            w[t] += 1;
            auto cfg = std::make_pair(p, std::move(w));
            if (seen.insert(cfg).second) stack.push_back(std::move(cfg));
        });
    }
    return image;
}

}  // namespace

std::set<ParikhVec> parikh_image_bounded(const Nfa& a, Int bound) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    return image_walk(a.num_states, a.initial, a.finals, a.alphabet.size(), bound,
                      [&](int q, const ParikhVec&, auto&& push) {
                          for (Letter t = 0; t < a.alphabet.size(); ++t)
                              for (State p : a.transitions[q][t]) push(p, t);
                      });
}

std::set<ParikhVec> parikh_image_bounded(const Dfa& d, Int bound) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    return image_walk(d.num_states, d.initial, d.finals, d.alphabet.size(), bound,
                      [&](int q, const ParikhVec&, auto&& push) {
                          for (Letter t = 0; t < d.alphabet.size(); ++t)
                              if (d.transitions[q][t] != -1) push(d.transitions[q][t], t);
                      });
}

std::set<ParikhVec> parikh_image_bounded_words(const Nfa& a, Int bound) {
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    std::set<ParikhVec> image;
    const int m = a.alphabet.size();
    Word word;
    std::function<void()> go = [&] {
        if (run_nfa(a, word)) image.insert(parikh_vector(m, word));
        if (static_cast<Int>(word.size()) == bound) return;
        for (Letter t = 0; t < m; ++t) {
            word.push_back(t);
            go();
            word.pop_back();
        }
    };
    go();
    return image;
}

std::set<ParikhVec> semilinear_box(const SemilinearRep& rep, Int box_max) {
    if (box_max < 0) throw std::invalid_argument("box bound must be nonnegative");
    std::set<ParikhVec> out;
    ParikhVec v(rep.dim, 0);
    std::function<void(int)> go = [&](int pos) {
        if (pos == rep.dim) {
            if (semilinear_membership(v, rep)) out.insert(v);
            return;
        }
        for (Int c = 0; c <= box_max; ++c) {
            v[pos] = c;
            go(pos + 1);
        }
        v[pos] = 0;
    };
    go(0);
    return out;
}

}  // namespace pareq
