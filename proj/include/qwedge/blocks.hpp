#pragma once

// Blocks of the level-l Fock space and their two coordinate systems.
//
// A block is (n, level, charge vector, total box count N).  Its basis is
// indexed either by multipartitions with N boxes, or by strictly decreasing
// index words of a fixed truncation depth r whose tail has "frozen" into the
// staircase s - r + 1, s - r, ...  (s = sum of the charges).  encode/decode
// convert between the two through per-sector beta-sets: the a-th beta number
// of sector d is lambda^(d)_a + s_d - a + 1, mapped into the global index line
// by the three-coordinate chart and merged across sectors in decreasing order.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "indexing.hpp"
#include "partitions.hpp"

namespace qwedge {

struct BlockSpec {
    int n = 2;
    int level = 1;
    MultiCharge charge;
    int size = 0; // total number of boxes N

    void validate() const {
        require_rank_level(n, level);
        if (static_cast<int>(charge.size()) != level)
            throw InputError("charge vector length must equal the level");
        if (size < 0) throw InputError("block size must be non-negative");
    }

    int total_charge() const { return charge_sum(charge); }

    /// Stable identifier, e.g. "n2-l2-s3,-3-N6"; used as the cache key.
    std::string key() const {
        return "n" + std::to_string(n) + "-l" + std::to_string(level) + "-s" +
               charge_to_string(charge) + "-N" + std::to_string(size);
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["level"] = level;
        j["charge"] = charge;
        j["size"] = size;
        return j;
    }

    bool operator==(const BlockSpec&) const = default;
    bool operator<(const BlockSpec& o) const {
        return std::tie(n, level, charge, size) < std::tie(o.n, o.level, o.charge, o.size);
    }
};

/// Truncation depth guaranteeing a frozen tail for every multipartition in the
/// block: the least multiple of n*level that is at least
/// level * (N + max(s) - min(s) + 1).
inline int choose_truncation(const BlockSpec& spec) {
    spec.validate();
    const auto [lo, hi] = std::minmax_element(spec.charge.begin(), spec.charge.end());
    const int need = spec.level * (spec.size + *hi - *lo + 1);
    const int nl = spec.n * spec.level;
    const int r = ((need + nl - 1) / nl) * nl;
    return r > 0 ? r : nl;
}

// ---------------------------------------------------------------------------
// encode / decode
// ---------------------------------------------------------------------------

namespace detail {

/// Index of the global factor carrying beta number b of sector d.
inline int beta_to_index(int b, int d, int n, int level) {
    const int c = ((b % n) + n - 1) % n + 1; // 1 <= c <= n, c == b mod n
    const int m = (c - b) / n;
    return join_index({c, d, m}, n, level);
}

/// The first `depth` beta numbers of one sector.
inline std::vector<int> sector_betas(const Partition& p, int s_d, int depth) {
    std::vector<int> out;
    out.reserve(depth);
    for (int a = 1; a <= depth; ++a) {
        const int part = a <= static_cast<int>(p.size()) ? p[a - 1] : 0;
        out.push_back(part + s_d - a + 1);
    }
    return out;
}

} // namespace detail

/// The index word of |lambda; charge> truncated to its first r factors.
///
/// Errors if r is too small for the tail to freeze: the word must end exactly
/// on the staircase (checked over a full abacus row past position r) and must
/// contain every excited bead of every sector.
inline std::vector<int> encode(const MultiPartition& mp, const MultiCharge& charge, int n, int r) {
    const int level = static_cast<int>(charge.size());
    require_rank_level(n, level);
    validate_multipartition(mp, level);
    const int nl = n * level;
    if (r < 1) throw InputError("truncation depth must be positive");

    const int depth = r + 2 * nl; // enough betas to see past the window check
    std::vector<int> all;
    all.reserve(static_cast<std::size_t>(depth) * level);
    for (int d = 1; d <= level; ++d)
        for (int b : detail::sector_betas(mp[d - 1], charge[d - 1], depth))
            all.push_back(detail::beta_to_index(b, d, n, level));
    std::sort(all.begin(), all.end(), std::greater<int>());

    // Strict decrease is automatic (beta triples are distinct); the real
    // checks are that the tail has frozen by position r.
    const int s = charge_sum(charge);
    for (int pos = r + 1; pos <= r + nl; ++pos)
        if (all[pos - 1] != s - pos + 1)
            throw InputError("truncation depth r=" + std::to_string(r) +
                             " too small: tail not frozen for " + to_string(mp) +
                             " at charge (" + charge_to_string(charge) + ")");

    std::vector<int> word(all.begin(), all.begin() + r);
    std::vector<int> taken(level, 0);
    for (int k : word) ++taken[split_index(k, n, level).d - 1];
    for (int d = 1; d <= level; ++d)
        if (taken[d - 1] < static_cast<int>(mp[d - 1].size()))
            throw InputError("truncation depth r=" + std::to_string(r) +
                             " too small: sector " + std::to_string(d) +
                             " still excited below the cut");
    return word;
}

struct DecodeResult {
    MultiPartition mp;
    MultiCharge charge;
};

/// Recover (multipartition, charge vector) from a strictly decreasing word,
/// reading the word as the first r factors of the ket whose remaining factors
/// are the staircase total - r, total - r - 1, ...  The word must stay above
/// that staircase.  Every strictly decreasing word is valid for exactly one
/// charge vector, which the caller is expected to cross-check.
inline DecodeResult decode_with_total(const std::vector<int>& word, int n, int level, int total) {
    require_rank_level(n, level);
    const int r = static_cast<int>(word.size());
    if (r == 0) throw InputError("cannot decode an empty word");
    for (int i = 1; i < r; ++i)
        if (word[i] >= word[i - 1]) throw InputError("index word must be strictly decreasing");
    if (word.back() < total - r + 1)
        throw EngineError("index word dips below its truncation window");

    const int nl = n * level;
    // Per-sector beta lists: word entries first (in order), then the staircase
    // extension, which visits every runner twice.
    std::vector<std::vector<int>> betas(level);
    for (int k : word) {
        const TripleCoord t = split_index(k, n, level);
        betas[t.d - 1].push_back(sector_label(t, n));
    }
    for (int j = 0; j < 2 * nl; ++j) {
        const int k = total - r - j;
        const TripleCoord t = split_index(k, n, level);
        betas[t.d - 1].push_back(sector_label(t, n));
    }

    DecodeResult out;
    out.mp.resize(level);
    out.charge.resize(level);
    for (int d = 0; d < level; ++d) {
        const auto& bs = betas[d];
        const int count = static_cast<int>(bs.size());
        QWEDGE_ASSERT(count >= 2, "staircase extension missed a sector");
        for (int a = 1; a < count; ++a)
            QWEDGE_ASSERT(bs[a] < bs[a - 1], "sector beta numbers out of order");
        const int sigma = bs.back() + count - 1; // deepest beta is unexcited
        Partition p;
        for (int a = 1; a <= count; ++a) {
            const int part = bs[a - 1] - sigma + a - 1;
            QWEDGE_ASSERT(part >= 0, "negative part while decoding");
            if (part > 0) p.push_back(part);
        }
        for (std::size_t i = 1; i < p.size(); ++i)
            QWEDGE_ASSERT(p[i] <= p[i - 1], "non-monotone parts while decoding");
        out.mp[d] = std::move(p);
        out.charge[d] = sigma;
    }
    QWEDGE_ASSERT(charge_sum(out.charge) == total, "decoded charges do not sum to the total");
    return out;
}

/// Frozen-word decode: the truncation charge is read off the last factor.
inline DecodeResult decode(const std::vector<int>& word, int n, int level) {
    if (word.empty()) throw InputError("cannot decode an empty word");
    const int total = word.back() + static_cast<int>(word.size()) - 1;
    return decode_with_total(word, n, level, total);
}

/// Decode a straightening-output word against a known block; errors if the
/// word leaves the block (an engine bug when fed normal-ordered terms).
inline DecodeResult decode_in_block(const std::vector<int>& word, const BlockSpec& spec) {
    DecodeResult res = decode_with_total(word, spec.n, spec.level, spec.total_charge());
    if (res.charge != spec.charge)
        throw EngineError("word decodes to charge (" + charge_to_string(res.charge) +
                          "), expected (" + charge_to_string(spec.charge) + ")");
    if (multipartition_size(res.mp) != spec.size)
        throw EngineError("word decodes outside the block: wrong box count");
    return res;
}

// ---------------------------------------------------------------------------
// Dominance
// ---------------------------------------------------------------------------

enum class DomRel { greater, less, equal, incomparable };

namespace detail {

/// The charged beta numbers of lambda — the same per-sector coordinates the
/// index words are built from — pooled across sectors, padded per sector to
/// the depths in `pad` (which must majorize both partitions' lengths), sorted
/// decreasing.
inline std::vector<int> beta_multiset(const MultiPartition& mp, const MultiCharge& s,
                                      const std::vector<int>& pad) {
    std::vector<int> out;
    for (std::size_t d = 0; d < mp.size(); ++d) {
        const auto bs = sector_betas(mp[d], s[d], pad[d]);
        out.insert(out.end(), bs.begin(), bs.end());
    }
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

/// Partial-sum comparison of two equal-length, equal-sum sequences:
/// (+1) first dominates, (-1) second dominates, 0 equal, 2 incomparable.
inline int prefix_compare(const std::vector<int>& a, const std::vector<int>& b) {
    QWEDGE_ASSERT(a.size() == b.size(), "prefix_compare on unequal lengths");
    bool a_ge = true, b_ge = true;
    long pa = 0, pb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) a_ge = false;
        if (pb < pa) b_ge = false;
    }
    if (a_ge && b_ge) return 0;
    if (a_ge) return 1;
    if (b_ge) return -1;
    return 2;
}

} // namespace detail

/// Dominance comparison of two multipartitions at a common charge.
///
/// Multipartitions of different total size are incomparable.  Otherwise the
/// charged beta multisets (padded per sector to the pairwise-maximal length)
/// are compared by partial sums of their decreasing rearrangements; on equal
/// multisets the tie is broken by partial sums of the index words.  Both
/// layers are invariant under the padding depth, and the first layer is
/// invariant under a common shift of the row convention, so the comparison
/// depends only on the abacus configurations.
inline DomRel dominance_leq(const MultiPartition& lambda, const MultiPartition& mu,
                            const MultiCharge& charge, int n) {
    const int level = static_cast<int>(charge.size());
    validate_multipartition(lambda, level);
    validate_multipartition(mu, level);
    if (lambda == mu) return DomRel::equal;
    if (multipartition_size(lambda) != multipartition_size(mu)) return DomRel::incomparable;

    std::vector<int> pad(level);
    for (int d = 0; d < level; ++d)
        pad[d] = static_cast<int>(std::max(lambda[d].size(), mu[d].size()));
    const auto la = detail::beta_multiset(lambda, charge, pad);
    const auto mu_ = detail::beta_multiset(mu, charge, pad);

    if (la != mu_) {
        switch (detail::prefix_compare(la, mu_)) {
            case 1: return DomRel::greater;
            case -1: return DomRel::less;
            case 0: QWEDGE_ASSERT(false, "equal prefix sums with distinct multisets");
            default: return DomRel::incomparable;
        }
    }

    BlockSpec spec{n, level, charge, multipartition_size(lambda)};
    const int r = choose_truncation(spec);
    const auto ka = encode(lambda, charge, n, r);
    const auto kb = encode(mu, charge, n, r);
    switch (detail::prefix_compare(ka, kb)) {
        case 1: return DomRel::greater;
        case -1: return DomRel::less;
        case 0: QWEDGE_ASSERT(false, "equal index prefix sums for distinct multipartitions");
        default: return DomRel::incomparable;
    }
}

// ---------------------------------------------------------------------------
// Block enumeration
// ---------------------------------------------------------------------------

namespace detail {

inline void partitions_of(int total, int max_part, Partition& scratch,
                          std::vector<Partition>& out) {
    if (total == 0) {
        out.push_back(scratch);
        return;
    }
    for (int part = std::min(total, max_part); part >= 1; --part) {
        scratch.push_back(part);
        partitions_of(total - part, part, scratch, out);
        scratch.pop_back();
    }
}

inline std::vector<Partition> all_partitions(int total) {
    std::vector<Partition> out;
    Partition scratch;
    partitions_of(total, total == 0 ? 1 : total, scratch, out);
    return out;
}

} // namespace detail

/// All multipartitions of the block, listed in a fixed descending linear
/// extension of dominance: the first entry is dominance-maximal.
///
/// Sort key, compared lexicographically in this order:
///   1. charged beta multiset padded to uniform depth N, decreasing — a
///      strict separator whenever dominance is decided by partial sums of
///      beta numbers (padding both sides with a common multiset preserves
///      both majorization and distinctness);
///   2. the index word at the block truncation — separates everything else,
///      since distinct multipartitions have distinct words and dominance with
///      equal beta multisets is decided by word partial sums.
inline std::vector<MultiPartition> enumerate_block(const BlockSpec& spec) {
    spec.validate();
    const int level = spec.level;

    std::vector<MultiPartition> blocks;
    MultiPartition scratch(level);
    // Distribute spec.size boxes over sectors, depth-first in sector order.
    auto fill = [&](auto&& self, int d, int remaining) -> void {
        if (d == level) {
            if (remaining == 0) blocks.push_back(scratch);
            return;
        }
        for (int here = remaining; here >= 0; --here)
            for (const Partition& p : detail::all_partitions(here)) {
                scratch[d] = p;
                self(self, d + 1, remaining - here);
                scratch[d].clear();
            }
    };
    fill(fill, 0, spec.size);

    const int r = choose_truncation(spec);
    std::vector<int> pad(level, spec.size);
    struct Keyed {
        std::vector<int> betas;
        std::vector<int> word;
        MultiPartition mp;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(blocks.size());
    for (auto& mp : blocks) {
        Keyed k;
        k.betas = detail::beta_multiset(mp, spec.charge, pad);
        k.word = encode(mp, spec.charge, spec.n, r);
        k.mp = std::move(mp);
        keyed.push_back(std::move(k));
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.betas != b.betas) return a.betas > b.betas;
        if (a.word != b.word) return a.word > b.word;
        return a.mp < b.mp;
    });

    std::vector<MultiPartition> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.mp));
    return out;
}

// ---------------------------------------------------------------------------
// Abacus
// ---------------------------------------------------------------------------

/// Bead positions of an index word on the n*level-runner abacus, as
/// (column, row) pairs; column c + n*(d-1) in 1..n*level, row = m.
inline std::set<std::pair<int, int>> abacus_beads(const std::vector<int>& word, int n, int level) {
    std::set<std::pair<int, int>> beads;
    for (int k : word) {
        const TripleCoord t = split_index(k, n, level);
        beads.emplace(t.c + n * (t.d - 1), t.m);
    }
    return beads;
}

/// ASCII abacus sketch: columns grouped by sector, one row per abacus level,
/// higher rows (more negative indices) drawn lower.  Presentation only.
inline std::string render_abacus(const std::vector<int>& word, int n, int level) {
    const auto beads = abacus_beads(word, n, level);
    if (beads.empty()) return "(empty)\n";
    int row_lo = beads.begin()->second, row_hi = row_lo;
    for (const auto& [col, row] : beads) {
        row_lo = std::min(row_lo, row);
        row_hi = std::max(row_hi, row);
    }
    std::string out;
    for (int row = row_lo; row <= row_hi; ++row) {
        std::string line = "m=" + std::to_string(row) + (row >= 0 ? "  " : " ");
        while (line.size() < 8) line += ' ';
        for (int col = 1; col <= n * level; ++col) {
            line += beads.count({col, row}) ? 'o' : '.';
            line += (col % n == 0 && col != n * level) ? " | " : " ";
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace qwedge
