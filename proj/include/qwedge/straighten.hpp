#pragma once

// Normal ordering of q-wedge words.
//
// The defining relations rewrite an out-of-order product u_{k2} ^ u_{k1}
// (k2 < k1) as +-q^{alpha} u_{k1} ^ u_{k2} plus, when the two factors sit on
// different abacus rows, a telescoping sum of products whose indices lie
// strictly between k2 and k1.  Equal adjacent factors square to zero.  Every
// rewrite strictly decreases sum_{i<j} max(k_j - k_i, 0), so normal ordering
// terminates; the relations present the module, so the normal form does not
// depend on the rewriting strategy.

#include <array>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "indexing.hpp"

namespace qwedge {

/// A finite Z[q,q^-1]-combination of words, keyed by the word itself.
/// The map never stores a zero coefficient.
using WedgeExpansion = std::map<std::vector<int>, LaurentPoly>;

inline void add_term(WedgeExpansion& acc, const std::vector<int>& word, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = acc.find(word);
    if (it == acc.end()) {
        acc.emplace(word, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) acc.erase(it);
    }
}

/// Number of coincident pairs #{ i < j : a_i == a_j } in a sequence.
inline int kappa(const std::vector<int>& seq) {
    int pairs = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j]) ++pairs;
    return pairs;
}

namespace detail {

/// One application of the defining relation to u_{k2} ^ u_{k1} with k2 < k1.
/// Terms may themselves be out of order; the first is the leading swap.
inline std::vector<std::pair<std::array<int, 2>, LaurentPoly>>
raw_pair_terms(int k2, int k1, int n, int level) {
    QWEDGE_ASSERT(k2 < k1, "raw_pair_terms wants an out-of-order pair");
    const TripleCoord t1 = split_index(k1, n, level);
    const TripleCoord t2 = split_index(k2, n, level);
    const int nl = n * level;

    // (-q^{-1}) ^ [d1 == d2]
    const LaurentPoly pre = (t1.d == t2.d) ? LaurentPoly::monomial(-1, -1) : LaurentPoly::one();
    const int alpha = (t1.c == t2.c) ? 1 : 0; // sign of k1 - k2, and k1 > k2 here

    std::vector<std::pair<std::array<int, 2>, LaurentPoly>> out;
    LaurentPoly lead = pre;
    lead.shift(alpha);
    out.push_back({{k1, k2}, std::move(lead)});

    // k2 < k1 constrains the rows: |c1-c2| + n|d1-d2| < n*level forces m1 <= m2.
    QWEDGE_ASSERT(t1.m <= t2.m, "out-of-order pair with inverted abacus rows");

    // Window of the telescoping sum.  beta drops to 0 exactly when the runner
    // order opposes the row order; gamma trims the top exactly when the sector
    // order agrees with it (same-sector pairs behave like the d1 < d2 case,
    // which the level-one examples pin down).  Equal rows are NOT exempt:
    // when c1 > c2 and d1 > d2 the window closes to the single j = 0 term,
    // whose (q - q^-1) correction the tensor-model reduction leaves behind.
    const int beta = (t1.c > t2.c) ? 0 : 1;
    const int gamma = (t1.d <= t2.d) ? 1 : 0;
    const LaurentPoly coeff = pre * q_minus_qinv();
    for (int j = beta; j <= t2.m - t1.m - gamma; ++j) {
        const int a = k1 - t1.c + t2.c - nl * j;
        const int b = k2 + t1.c - t2.c + nl * j;
        QWEDGE_ASSERT(k2 < a && a < k1 && k2 < b && b < k1,
                      "correction index escapes the straightened pair");
        out.push_back({{a, b}, coeff});
    }
    return out;
}

} // namespace detail

/// Fully normal-ordered expansion of the two-factor product u_{k2} ^ u_{k1}.
inline WedgeExpansion straighten_pair(int k2, int k1, int n, int level) {
    require_rank_level(n, level);
    WedgeExpansion done;
    std::vector<std::pair<std::array<int, 2>, LaurentPoly>> pending;
    pending.push_back({{k2, k1}, LaurentPoly::one()});
    while (!pending.empty()) {
        auto [word, coeff] = std::move(pending.back());
        pending.pop_back();
        if (word[0] > word[1]) {
            add_term(done, {word[0], word[1]}, coeff);
        } else if (word[0] < word[1]) {
            for (auto& [next, c] : detail::raw_pair_terms(word[0], word[1], n, level))
                pending.push_back({next, coeff * c});
        }
        // equal factors vanish
    }
    return done;
}

/// Normal-ordering engine for one (n, level).
///
/// Words are ordered by inserting factors one at a time into an ordered
/// prefix; each insertion either appends, kills an adjacent repeat, or fires
/// the defining relation and recurses.  Insertions are memoized on the
/// (ordered word, new factor) pair — words of one block share their frozen
/// staircase, so the cache carries most of the work between bar images.
class Straightener {
public:
    Straightener(int n, int level) : n_(n), level_(level) { require_rank_level(n, level); }

    int n() const { return n_; }
    int level() const { return level_; }

    /// Expansion of an arbitrary word in the strictly-decreasing basis.
    WedgeExpansion normal_order(const std::vector<int>& word) {
        WedgeExpansion acc;
        acc.emplace(std::vector<int>{}, LaurentPoly::one());
        for (int k : word) {
            WedgeExpansion next;
            for (const auto& [prefix, c] : acc)
                for (const auto& [w, ci] : insert(prefix, k)) add_term(next, w, c * ci);
            acc = std::move(next);
            if (acc.empty()) break;
        }
        return acc;
    }

    /// Normal form of (ordered word) ^ u_k.  The reference stays valid for
    /// the lifetime of the Straightener.
    const WedgeExpansion& insert(const std::vector<int>& ordered, int k) {
        const auto key = std::make_pair(ordered, k);
        if (auto it = memo_.find(key); it != memo_.end()) return *it->second;

        WedgeExpansion out;
        if (ordered.empty()) {
            out.emplace(std::vector<int>{k}, LaurentPoly::one());
        } else if (const int tail = ordered.back(); k < tail) {
            std::vector<int> w = ordered;
            w.push_back(k);
            out.emplace(std::move(w), LaurentPoly::one());
        } else if (k > tail) {
            const std::vector<int> prefix(ordered.begin(), ordered.end() - 1);
            auto terms = detail::raw_pair_terms(tail, k, n_, level_);
            // Leading swap: prefix ^ u_k, then re-append the tail.  Everything
            // produced from values above the tail stays above it.
            for (const auto& [w, c] : insert(prefix, k)) {
                QWEDGE_ASSERT(w.back() > tail, "straightened prefix fell below the tail");
                std::vector<int> appended = w;
                appended.push_back(tail);
                add_term(out, appended, terms[0].second * c);
            }
            for (std::size_t i = 1; i < terms.size(); ++i) {
                const auto [a, b] = std::array<int, 2>{terms[i].first[0], terms[i].first[1]};
                for (const auto& [w1, c1] : insert(prefix, a)) {
                    const LaurentPoly scaled = terms[i].second * c1;
                    for (const auto& [w2, c2] : insert(w1, b)) add_term(out, w2, scaled * c2);
                }
            }
        }
        // k == tail: adjacent repeat, the product is zero.

        auto stored = std::make_shared<const WedgeExpansion>(std::move(out));
        const auto& ref = *stored;
        memo_.emplace(key, std::move(stored));
        return ref;
    }

    std::size_t cache_size() const { return memo_.size(); }

private:
    int n_, level_;
    std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const WedgeExpansion>> memo_;
};

/// One-shot normal ordering.
inline WedgeExpansion normal_order(const std::vector<int>& word, int n, int level) {
    Straightener engine(n, level);
    return engine.normal_order(word);
}

/// Commutation statistic between two words on disjoint sector sets: the
/// number of factor pairs on a common runner whose global order is u before v.
/// Calling this with a sector occurring on both sides is a caller bug.
inline int xi(const std::vector<int>& u, const std::vector<int>& v, int n, int level) {
    require_rank_level(n, level);
    std::vector<TripleCoord> tu, tv;
    tu.reserve(u.size());
    tv.reserve(v.size());
    for (int k : u) tu.push_back(split_index(k, n, level));
    for (int k : v) tv.push_back(split_index(k, n, level));
    for (const auto& a : tu)
        for (const auto& b : tv)
            if (a.d == b.d)
                throw EngineError("xi requires words with disjoint sector sets");
    int count = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (tu[i].c == tv[j].c && u[i] < v[j]) ++count;
    return count;
}

} // namespace qwedge
