#pragma once

// Level comparison: dropping a sector from a block and comparing
// q-decomposition numbers across levels, plus the finite quotient space in
// which the comparison becomes an equality of whole matrices.
//
// Checker semantics.  Fix a block (n, level, charge, N), a sector j and a
// sign.  With charge_j large enough for a row lambda (resp. small enough for
// a column mu with empty j-th component), every decomposition number of that
// row (resp. column) either transports to the level-(level-1) block obtained
// by deleting sector j, or is forced to vanish because the partner label
// still occupies sector j.  The check computes both matrices independently
// and compares entry by entry, exactly.

#include <atomic>
#include <chrono>
#include <future>
#include <random>
#include <vector>

#include "canonical.hpp"

namespace qwedge {

// ---------------------------------------------------------------------------
// Charge conditions and sector omission
// ---------------------------------------------------------------------------

/// charge_j dominates every other charge by at least the first part of the
/// corresponding component (and the j-th component must be empty).
inline bool is_sufficiently_large(const MultiCharge& charge, int j, const MultiPartition& mp) {
    const int level = static_cast<int>(charge.size());
    validate_multipartition(mp, level);
    if (j < 1 || j > level) throw InputError("sector out of range");
    for (int i = 1; i <= level; ++i) {
        const int top = mp[i - 1].empty() ? 0 : mp[i - 1][0];
        if (charge[j - 1] - charge[i - 1] < top) return false;
    }
    return true;
}

/// Every other charge exceeds charge_j by at least `boxes`.
inline bool is_sufficiently_small(const MultiCharge& charge, int j, int boxes) {
    const int level = static_cast<int>(charge.size());
    if (j < 1 || j > level) throw InputError("sector out of range");
    for (int i = 1; i <= level; ++i)
        if (i != j && charge[i - 1] - charge[j - 1] < boxes) return false;
    return true;
}

inline MultiCharge omit_component(const MultiCharge& charge, int j) {
    const int level = static_cast<int>(charge.size());
    if (level < 2) throw InputError("cannot omit a component at level 1");
    if (j < 1 || j > level) throw InputError("sector out of range");
    MultiCharge out;
    for (int i = 1; i <= level; ++i)
        if (i != j) out.push_back(charge[i - 1]);
    return out;
}

inline MultiPartition omit_component(const MultiPartition& mp, int j) {
    const int level = static_cast<int>(mp.size());
    if (level < 2) throw InputError("cannot omit a component at level 1");
    if (j < 1 || j > level) throw InputError("sector out of range");
    MultiPartition out;
    for (int i = 1; i <= level; ++i)
        if (i != j) out.push_back(mp[i - 1]);
    return out;
}

inline MultiPartition insert_empty_component(const MultiPartition& mp, int j) {
    MultiPartition out;
    const int level = static_cast<int>(mp.size()) + 1;
    if (j < 1 || j > level) throw InputError("sector out of range");
    for (int i = 1; i <= level; ++i) {
        if (i == j)
            out.push_back({});
        else
            out.push_back(mp[i - 1 - (i > j ? 1 : 0)]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem checks
// ---------------------------------------------------------------------------

struct TheoremCase {
    int n = 2;
    int level = 2;
    MultiCharge charge;
    int size = 0;
    int j = 1;
    Sign sign = Sign::minus;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json out;
        out["n"] = n;
        out["level"] = level;
        out["charge"] = charge;
        out["size"] = size;
        out["j"] = j;
        out["sign"] = qwedge::to_string(sign);
        return out;
    }
};

struct Comparison {
    MultiPartition lambda; // level-l row label
    MultiPartition mu;     // level-l column label
    LaurentPoly lhs;       // level-l decomposition number
    LaurentPoly rhs;       // transported lower-level value (or forced zero)
    bool pass = false;
};

struct TheoremReport {
    char theorem = 'A';
    TheoremCase c;
    int r_upper = 0, r_lower = 0;
    int qualifying = 0; // rows (A) / columns (B) meeting the charge condition
    std::vector<Comparison> comparisons;
    bool all_pass = true;

    nlohmann::ordered_json to_json(bool with_labels = true) const {
        nlohmann::ordered_json out;
        out["theorem"] = std::string(1, theorem);
        out["case"] = c.to_json();
        out["r_upper"] = r_upper;
        out["r_lower"] = r_lower;
        out["qualifying"] = qualifying;
        out["checked"] = comparisons.size();
        out["pass"] = all_pass;
        if (with_labels) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& cmp : comparisons) {
                nlohmann::ordered_json e;
                e["lambda"] = qwedge::to_json(cmp.lambda);
                e["mu"] = qwedge::to_json(cmp.mu);
                e["lhs"] = cmp.lhs.to_json();
                e["rhs"] = cmp.rhs.to_json();
                e["pass"] = cmp.pass;
                arr.push_back(std::move(e));
            }
            out["comparisons"] = std::move(arr);
        }
        return out;
    }
};

namespace detail {

struct LevelPair {
    DecompMatrix upper, lower;
};

inline LevelPair decomp_pair(const TheoremCase& c) {
    if (c.level < 2) throw InputError("level comparison needs level at least 2");
    BlockSpec upper{c.n, c.level, c.charge, c.size};
    BlockSpec lower{c.n, c.level - 1, omit_component(c.charge, c.j), c.size};
    LevelPair out;
    out.upper = canonical_basis(bar_matrix(upper), c.sign);
    out.lower = canonical_basis(bar_matrix(lower), c.sign);
    return out;
}

} // namespace detail

/// Rows whose charge condition holds transport to the lower level.
inline TheoremReport check_theorem_A(const TheoremCase& c) {
    const auto [upper, lower] = detail::decomp_pair(c);
    TheoremReport rep;
    rep.theorem = 'A';
    rep.c = c;
    rep.r_upper = upper.r;
    rep.r_lower = lower.r;
    for (int i = 0; i < upper.dim(); ++i) {
        const MultiPartition& lambda = upper.order[i];
        if (!is_sufficiently_large(c.charge, c.j, lambda)) continue;
        ++rep.qualifying;
        const int li = lower.index_of(omit_component(lambda, c.j));
        for (int k = 0; k < upper.dim(); ++k) {
            const MultiPartition& mu = upper.order[k];
            Comparison cmp;
            cmp.lambda = lambda;
            cmp.mu = mu;
            cmp.lhs = upper.delta[i][k];
            if (mu[c.j - 1].empty())
                cmp.rhs = lower.delta[li][lower.index_of(omit_component(mu, c.j))];
            // else: the transported value is zero — sector j is still occupied
            cmp.pass = (cmp.lhs == cmp.rhs);
            if (!cmp.pass) rep.all_pass = false;
            rep.comparisons.push_back(std::move(cmp));
        }
    }
    return rep;
}

/// Columns with empty j-th component and small enough charge transport to the
/// lower level.
inline TheoremReport check_theorem_B(const TheoremCase& c) {
    const auto [upper, lower] = detail::decomp_pair(c);
    TheoremReport rep;
    rep.theorem = 'B';
    rep.c = c;
    rep.r_upper = upper.r;
    rep.r_lower = lower.r;
    for (int k = 0; k < upper.dim(); ++k) {
        const MultiPartition& mu = upper.order[k];
        if (!mu[c.j - 1].empty()) continue;
        if (!is_sufficiently_small(c.charge, c.j, multipartition_size(mu))) continue;
        ++rep.qualifying;
        const int lk = lower.index_of(omit_component(mu, c.j));
        for (int i = 0; i < upper.dim(); ++i) {
            const MultiPartition& lambda = upper.order[i];
            Comparison cmp;
            cmp.lambda = lambda;
            cmp.mu = mu;
            cmp.lhs = upper.delta[i][k];
            if (lambda[c.j - 1].empty())
                cmp.rhs = lower.delta[lower.index_of(omit_component(lambda, c.j))][lk];
            cmp.pass = (cmp.lhs == cmp.rhs);
            if (!cmp.pass) rep.all_pass = false;
            rep.comparisons.push_back(std::move(cmp));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quotient by the occupied-sector kernel
// ---------------------------------------------------------------------------

/// Projection killing every ket whose j-th component is non-empty.
inline FockVector project_quotient(const FockVector& v, int j) {
    if (j < 1 || j > v.block.level) throw InputError("sector out of range");
    FockVector out{v.block, {}};
    for (const auto& [mp, c] : v.terms)
        if (mp[j - 1].empty()) out.add(mp, c);
    return out;
}

struct QuotientResult {
    DecompMatrix delta;       // canonical basis of the quotient, sub-block order
    bool kernel_stable = true; // bar maps the kernel into the kernel
    std::vector<MultiPartition> kernel_violations;
};

/// Canonical basis of the quotient spanned by kets with empty j-th component,
/// under the transported involution pi(bar(.)).  Also reports whether the
/// transport is well defined on this block: bar of every kernel ket must
/// project to zero.
inline QuotientResult quotient_canonical_basis(const BlockSpec& spec, int j, Sign sign,
                                               int r = 0) {
    spec.validate();
    if (j < 1 || j > spec.level) throw InputError("sector out of range");
    const BarMatrix full = bar_matrix(spec, r);
    QuotientResult out;

    std::vector<int> keep; // indices of the sub-block, in inherited order
    for (int i = 0; i < full.dim(); ++i)
        if (full.order[i][j - 1].empty()) keep.push_back(i);

    for (int i = 0; i < full.dim(); ++i) {
        if (full.order[i][j - 1].empty()) continue;
        for (int col : keep)
            if (!full.a[i][col].is_zero()) {
                out.kernel_stable = false;
                out.kernel_violations.push_back(full.order[i]);
                break;
            }
    }

    BarMatrix sub;
    sub.spec = spec;
    sub.r = full.r;
    for (int i : keep) sub.order.push_back(full.order[i]);
    sub.a.assign(keep.size(), std::vector<LaurentPoly>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t k = 0; k < keep.size(); ++k)
            sub.a[i][k] = full.a[keep[i]][keep[k]];
    out.delta = canonical_basis(sub, sign);
    return out;
}

// ---------------------------------------------------------------------------
// Randomized campaigns
// ---------------------------------------------------------------------------

struct CampaignConfig {
    char theorem = 'A';
    int count = 50;
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<TheoremReport> reports;
    bool all_pass = true;
    long elapsed_ms = 0;

    nlohmann::ordered_json to_json(bool with_labels, bool with_timings) const {
        nlohmann::ordered_json out;
        out["theorem"] = std::string(1, config.theorem);
        out["cases"] = config.count;
        out["seed"] = config.seed;
        out["pass"] = all_pass;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json(with_labels));
        out["reports"] = std::move(arr);
        if (with_timings) out["elapsed_ms"] = elapsed_ms;
        return out;
    }
};

/// Draw one qualifying case.  Charges start uniform in [-N-3, N+3]; the
/// distinguished charge is then pushed above (A) or below (B) the rest by N,
/// which makes every row (A) / every size-N empty-sector column (B) qualify.
inline TheoremCase random_theorem_case(char theorem, std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    TheoremCase c;
    c.n = pick(2, 3);
    c.level = pick(2, 3);
    c.size = pick(1, 5);
    c.j = pick(1, c.level);
    c.sign = pick(0, 1) ? Sign::plus : Sign::minus;
    c.charge.resize(c.level);
    for (int i = 0; i < c.level; ++i) c.charge[i] = pick(-c.size - 3, c.size + 3);
    int extreme = 0;
    bool first = true;
    for (int i = 1; i <= c.level; ++i) {
        if (i == c.j) continue;
        extreme = first ? c.charge[i - 1]
                        : (theorem == 'A' ? std::max(extreme, c.charge[i - 1])
                                          : std::min(extreme, c.charge[i - 1]));
        first = false;
    }
    c.charge[c.j - 1] = (theorem == 'A') ? extreme + c.size : extreme - c.size;
    return c;
}

inline CampaignReport run_theorem_campaign(const CampaignConfig& config) {
    if (config.theorem != 'A' && config.theorem != 'B')
        throw InputError("theorem must be A or B");
    if (config.count < 1) throw InputError("campaign needs at least one case");
    const auto t0 = std::chrono::steady_clock::now();

    std::mt19937_64 rng(config.seed);
    std::vector<TheoremCase> cases;
    cases.reserve(config.count);
    for (int i = 0; i < config.count; ++i)
        cases.push_back(random_theorem_case(config.theorem, rng));

    CampaignReport rep;
    rep.config = config;
    rep.reports.resize(cases.size());
    const auto run_one = [&](const TheoremCase& c) {
        return config.theorem == 'A' ? check_theorem_A(c) : check_theorem_B(c);
    };
    if (config.jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) rep.reports[i] = run_one(cases[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cases.size()) break;
                rep.reports[i] = run_one(cases[i]);
            }
        };
        std::vector<std::future<void>> pool;
        for (int t = 0; t < config.jobs; ++t)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }
    for (const auto& r : rep.reports)
        if (!r.all_pass) rep.all_pass = false;
    rep.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count());
    return rep;
}

} // namespace qwedge
