#pragma once

// The three-coordinate chart on wedge indices.
//
// Fock space factors u_k are indexed by k in Z.  For parameters n >= 2 (the
// quantum affine rank is n-1... the code only ever needs n itself) and level
// l >= 1, every k decomposes uniquely as
//
//     k = c + n*(d - 1) - n*l*m,      1 <= c <= n,  1 <= d <= l,  m in Z.
//
// c is the runner inside a sector, d the sector, m the abacus row.  The
// sector-local label of the factor is b = c - n*m, so u_k is "factor b of
// sector d": the level-l space is an interleaving of l level-one spaces.

#include <array>
#include <string>

#include "laurent.hpp"

namespace qwedge {

struct TripleCoord {
    int c; // runner within the sector, 1-based
    int d; // sector, 1-based
    int m; // abacus row (0 = the row containing the charge bead)

    bool operator==(const TripleCoord&) const = default;
};

namespace detail {
/// Mathematical floor division (rounds toward -infinity for all signs).
inline int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
} // namespace detail

inline void require_rank_level(int n, int level) {
    if (n < 2) throw InputError("n must be at least 2");
    if (level < 1) throw InputError("level must be at least 1");
}

/// k -> (c, d, m).  Total: every integer k has exactly one chart triple.
inline TripleCoord split_index(int k, int n, int level) {
    require_rank_level(n, level);
    const int nl = n * level;
    const int p = k - nl * detail::floor_div(k - 1, nl); // 1 <= p <= nl
    TripleCoord t;
    t.m = (p - k) / nl;
    t.c = ((p - 1) % n) + 1;
    t.d = (p - 1) / n + 1;
    return t;
}

/// (c, d, m) -> k, inverse of split_index.
inline int join_index(const TripleCoord& t, int n, int level) {
    require_rank_level(n, level);
    QWEDGE_ASSERT(1 <= t.c && t.c <= n, "runner out of range in join_index");
    QWEDGE_ASSERT(1 <= t.d && t.d <= level, "sector out of range in join_index");
    return t.c + n * (t.d - 1) - n * level * t.m;
}

/// Sector-local label b = c - n*m of u_k; u_k is factor u^(d)_b.
inline int sector_label(const TripleCoord& t, int n) { return t.c - n * t.m; }

inline int sector_label(int k, int n, int level) {
    return sector_label(split_index(k, n, level), n);
}

} // namespace qwedge
