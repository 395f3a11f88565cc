#pragma once

// Brute-force oracle for canonical basis rows: write the bar-fixedness
// equations as an exact rational linear system over a fixed exponent window
// and solve by Gaussian elimination.  No triangular recurrence, no lattice
// splitting trick — just linear algebra, so the production solver has an
// independent referee on small blocks.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <qwedge/canonical.hpp>

namespace qwedge::testing {

using Rat = boost::multiprecision::cpp_rational;

/// Canonical row for order[i]: the unique vector b with b_i = 1, b_k supported
/// on exponents >= 1 (plus) or <= -1 (minus) for k > i, zero for k < i, and
/// b_k = sum_j bar(b_j) a_{jk}.  Throws if the window system is singular.
inline std::vector<LaurentPoly> dense_canonical_row(const BarMatrix& A, Sign sign, int row) {
    const int B = A.dim();
    QWEDGE_ASSERT(0 <= row && row < B, "row out of range");

    int spread = 1;
    for (int i = 0; i < B; ++i)
        for (int k = 0; k < B; ++k)
            if (!A.a[i][k].is_zero())
                spread = std::max({spread, std::abs(A.a[i][k].min_exp()),
                                   std::abs(A.a[i][k].max_exp())});
    const int M = spread * (B + 1) + 1;   // exponent window for unknowns
    const int E = M + spread;             // exponent window for equations

    // Unknowns: (k, e) for k in (row, B), e in the lattice window.
    struct Var {
        int k, e;
    };
    std::vector<Var> vars;
    std::map<std::pair<int, int>, int> var_index;
    for (int k = row + 1; k < B; ++k)
        for (int e = 1; e <= M; ++e) {
            const int exp = (sign == Sign::plus) ? e : -e;
            var_index[{k, exp}] = static_cast<int>(vars.size());
            vars.push_back({k, exp});
        }
    const int V = static_cast<int>(vars.size());

    // coefficient of q^e in b_k as a linear form over the unknowns (+ const).
    auto coeff_of = [&](int k, int e) {
        std::vector<Rat> form(V + 1, Rat(0)); // last slot = constant
        if (k == row) {
            if (e == 0) form[V] = 1;
        } else if (auto it = var_index.find({k, e}); it != var_index.end()) {
            form[it->second] = 1;
        }
        return form;
    };

    // Equations: for k in [row, B), e in [-E, E]:
    //   b_k[e] - sum_{row<=j<=k} sum_f b_j[-f] * a_{jk}[e-f] = 0.
    std::vector<std::vector<Rat>> rows;
    for (int k = row; k < B; ++k)
        for (int e = -E; e <= E; ++e) {
            std::vector<Rat> eq = coeff_of(k, e);
            for (int j = row; j <= k; ++j) {
                const auto& a = A.a[j][k];
                for (const auto& [ae, ac] : a.terms()) {
                    const int f = e - ae; // need b_j[-f] ... bar picks exponent -f
                    const auto part = coeff_of(j, -f);
                    const Rat scale(ac);
                    for (int v = 0; v <= V; ++v)
                        if (part[v] != 0) eq[v] -= scale * part[v];
                }
            }
            bool nonzero = false;
            for (const auto& x : eq)
                if (x != 0) {
                    nonzero = true;
                    break;
                }
            if (nonzero) rows.push_back(std::move(eq));
        }

    // Gaussian elimination to reduced row echelon form.
    int lead = 0;
    for (int col = 0; col < V && lead < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int rr = lead; rr < static_cast<int>(rows.size()); ++rr)
            if (rows[rr][col] != 0) {
                pivot = rr;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[lead], rows[pivot]);
        const Rat p = rows[lead][col];
        for (auto& x : rows[lead]) x /= p;
        for (int rr = 0; rr < static_cast<int>(rows.size()); ++rr)
            if (rr != lead && rows[rr][col] != 0) {
                const Rat f = rows[rr][col];
                for (int v = 0; v <= V; ++v) rows[rr][v] -= f * rows[lead][v];
            }
        ++lead;
    }

    // Read off: every unknown must be pinned, the rest must be 0 = 0.
    std::vector<Rat> solution(V, Rat(0));
    std::vector<bool> pinned(V, false);
    for (const auto& eq : rows) {
        int first = -1;
        for (int v = 0; v < V; ++v)
            if (eq[v] != 0) {
                first = v;
                break;
            }
        if (first < 0) {
            if (eq[V] != 0) throw EngineError("dense oracle: inconsistent system");
            continue;
        }
        for (int v = first + 1; v < V; ++v)
            if (eq[v] != 0) throw EngineError("dense oracle: underdetermined system");
        solution[first] = -eq[V]; // row is x_first + const = 0 after rref
        pinned[first] = true;
    }
    for (int v = 0; v < V; ++v)
        if (!pinned[v] && solution[v] == 0) {
            // Unpinned variable: only acceptable if forced zero by uniqueness;
            // with a correct window the rref pins everything that can be
            // nonzero, so treat a free variable as a failure.
            bool appears = false;
            for (const auto& eq : rows)
                if (eq[v] != 0) appears = true;
            if (!appears) continue; // never constrained and zero: fine
            throw EngineError("dense oracle: free variable in system");
        }

    std::vector<LaurentPoly> out(B);
    out[row] = LaurentPoly::one();
    for (int v = 0; v < V; ++v) {
        if (solution[v] == 0) continue;
        const Rat& val = solution[v];
        QWEDGE_ASSERT(denominator(val) == 1, "dense oracle: non-integral solution");
        out[vars[v].k] += LaurentPoly::monomial(vars[v].e, BigInt(numerator(val)));
    }
    return out;
}

} // namespace qwedge::testing
