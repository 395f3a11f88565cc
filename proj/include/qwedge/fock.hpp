#pragma once

// Vectors in one block of the level-l Fock space, and the bar involution.
//
// A vector is stored label-first: multipartition -> coefficient.  Index words
// are regenerated through encode at whatever truncation a computation needs,
// which keeps semantics truncation-free; bar(bar(v)) == v is an equality of
// label maps, not of words at a particular depth.

#include <algorithm>
#include <vector>

#include "blocks.hpp"
#include "straighten.hpp"

namespace qwedge {

struct FockVector {
    BlockSpec block;
    std::map<MultiPartition, LaurentPoly> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const MultiPartition& mp, const LaurentPoly& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms.find(mp);
        if (it == terms.end()) {
            terms.emplace(mp, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    const LaurentPoly& coefficient(const MultiPartition& mp) const {
        static const LaurentPoly kZero;
        auto it = terms.find(mp);
        return it == terms.end() ? kZero : it->second;
    }

    FockVector& operator+=(const FockVector& o) {
        QWEDGE_ASSERT(block == o.block, "adding vectors from different blocks");
        for (const auto& [mp, c] : o.terms) add(mp, c);
        return *this;
    }

    FockVector scaled(const LaurentPoly& f) const {
        FockVector out{block, {}};
        for (const auto& [mp, c] : terms) out.add(mp, c * f);
        return out;
    }

    bool operator==(const FockVector& o) const {
        return block == o.block && terms == o.terms;
    }

    /// Terms listed leading-first (index word descending at the block
    /// truncation), each as {multipartition, coeff}.
    nlohmann::ordered_json to_json() const {
        const int r = choose_truncation(block);
        std::vector<std::pair<std::vector<int>, const MultiPartition*>> sorted;
        sorted.reserve(terms.size());
        for (const auto& [mp, c] : terms)
            sorted.push_back({encode(mp, block.charge, block.n, r), &mp});
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        nlohmann::ordered_json j;
        j["block"] = block.to_json();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [word, mp] : sorted) {
            nlohmann::ordered_json term;
            term["multipartition"] = to_json_mp(*mp);
            term["coeff"] = terms.at(*mp).to_json();
            arr.push_back(std::move(term));
        }
        j["terms"] = std::move(arr);
        return j;
    }

private:
    static nlohmann::ordered_json to_json_mp(const MultiPartition& mp) {
        return qwedge::to_json(mp);
    }
};

/// The basis ket |lambda; charge> as a vector.
inline FockVector unit_vector(const BlockSpec& spec, const MultiPartition& mp) {
    spec.validate();
    validate_multipartition(mp, spec.level);
    if (multipartition_size(mp) != spec.size)
        throw InputError("multipartition has " + std::to_string(multipartition_size(mp)) +
                         " boxes, block expects " + std::to_string(spec.size));
    FockVector v{spec, {}};
    v.add(mp, LaurentPoly::one());
    return v;
}

// ---------------------------------------------------------------------------
// Bar involution
// ---------------------------------------------------------------------------

namespace detail {

/// Bar image of one frozen word: (-q)^{kappa(d)} q^{-kappa(c)} times the
/// normal ordering of the reversed word, where the kappas count coincident
/// pairs in the runner and sector sequences of the factors.
inline WedgeExpansion bar_word(const std::vector<int>& word, Straightener& engine) {
    std::vector<int> cs, ds;
    cs.reserve(word.size());
    ds.reserve(word.size());
    for (int k : word) {
        const TripleCoord t = split_index(k, engine.n(), engine.level());
        cs.push_back(t.c);
        ds.push_back(t.d);
    }
    const int kd = kappa(ds), kc = kappa(cs);
    LaurentPoly pre = LaurentPoly::monomial(kd - kc, (kd % 2 == 0) ? 1 : -1);

    std::vector<int> reversed(word.rbegin(), word.rend());
    WedgeExpansion out;
    for (const auto& [w, c] : engine.normal_order(reversed)) add_term(out, w, pre * c);
    return out;
}

} // namespace detail

/// Bar image of a vector: semilinear (coefficients through q -> q^-1), each
/// ket expanded at truncation r (0 = the block default).  The result does not
/// depend on r as long as the tail freezes, which encode enforces.
inline FockVector bar_vector(const FockVector& v, Straightener& engine, int r = 0) {
    QWEDGE_ASSERT(engine.n() == v.block.n && engine.level() == v.block.level,
                  "straightener parameters do not match the block");
    if (r == 0) r = choose_truncation(v.block);
    FockVector out{v.block, {}};
    for (const auto& [mp, coeff] : v.terms) {
        const auto word = encode(mp, v.block.charge, v.block.n, r);
        const LaurentPoly barred = coeff.bar();
        for (const auto& [w, c] : detail::bar_word(word, engine))
            out.add(decode_in_block(w, v.block).mp, barred * c);
    }
    return out;
}

inline FockVector bar_vector(const FockVector& v, int r = 0) {
    Straightener engine(v.block.n, v.block.level);
    return bar_vector(v, engine, r);
}

// ---------------------------------------------------------------------------
// Level reduction: the check map and sector columns
// ---------------------------------------------------------------------------

/// Remove every sector-j factor from a word and relabel the remaining sectors
/// {1..level}\{j} to {1..level-1}, preserving runner and row.  The image of a
/// strictly decreasing word is again strictly decreasing; anything else is an
/// engine bug.
inline std::vector<int> check_word(const std::vector<int>& word, int n, int level, int j) {
    require_rank_level(n, level);
    if (level < 2) throw InputError("check map needs level at least 2");
    if (j < 1 || j > level) throw InputError("sector out of range in check map");
    std::vector<int> out;
    out.reserve(word.size());
    for (int k : word) {
        const TripleCoord t = split_index(k, n, level);
        if (t.d == j) continue;
        const int d2 = t.d - (t.d > j ? 1 : 0);
        out.push_back(join_index({t.c, d2, t.m}, n, level - 1));
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        QWEDGE_ASSERT(out[i] < out[i - 1], "check map broke the word order");
    return out;
}

/// The first `depth` factors of the vacuum column of sector j at charge s_j,
/// as a word in the ambient level: beta numbers s_j, s_j - 1, ..., all in
/// sector j.
inline std::vector<int> empty_column(int n, const MultiCharge& charge, int j, int depth) {
    const int level = static_cast<int>(charge.size());
    require_rank_level(n, level);
    if (j < 1 || j > level) throw InputError("sector out of range");
    if (depth < 0) throw InputError("column depth must be non-negative");
    std::vector<int> out;
    out.reserve(depth);
    for (int a = 1; a <= depth; ++a)
        out.push_back(detail::beta_to_index(charge[j - 1] - a + 1, j, n, level));
    for (std::size_t i = 1; i < out.size(); ++i)
        QWEDGE_ASSERT(out[i] < out[i - 1], "sector column out of order");
    return out;
}

} // namespace qwedge
