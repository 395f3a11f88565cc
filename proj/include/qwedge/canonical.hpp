#pragma once

// Bar matrices, canonical bases, q-decomposition matrices.
//
// Fix a block and its descending dominance extension lambda_0 > lambda_1 > ...
// The bar matrix A has rows a_{ij} = coefficient of |lambda_j> in
// bar|lambda_i>; unitriangularity puts the support at j >= i with a_{ii} = 1.
//
// The canonical basis of sign epsilon solves, row by row,
//     G(lambda_i) = |lambda_i> + sum_{j>i} b_j |lambda_j>,  bar(G) = G,
// with b_j in qZ[q] (plus) or q^-1 Z[q^-1] (minus).  Writing the fixed-point
// condition coefficientwise gives the back-substitution
//     b_k - bar(b_k) = R_k := sum_{i<=j<k} bar(b_j) a_{jk},
// which determines b_k uniquely inside either lattice provided R_k is
// bar-antisymmetric with no constant term — a property the solver checks and
// refuses to paper over.

#include <string>
#include <vector>

#include "fock.hpp"

namespace qwedge {

enum class Sign { plus, minus };

inline const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

inline Sign sign_from_string(const std::string& text) {
    if (text == "plus" || text == "+") return Sign::plus;
    if (text == "minus" || text == "-") return Sign::minus;
    throw InputError("sign must be plus or minus");
}

struct BarMatrix {
    BlockSpec spec;
    int r = 0;                              // truncation the rows were computed at
    std::vector<MultiPartition> order;      // descending dominance extension
    std::vector<std::vector<LaurentPoly>> a; // a[i][j], dense upper-unitriangular

    int dim() const { return static_cast<int>(order.size()); }

    int index_of(const MultiPartition& mp) const {
        for (int i = 0; i < dim(); ++i)
            if (order[i] == mp) return i;
        throw InputError("multipartition " + to_string(mp) + " is not in block " + spec.key());
    }
};

/// Compute the bar matrix of a block (r = 0 means the block truncation).
/// Optionally computes rows in a caller-supplied order, which must be a
/// descending linear extension of dominance for the result to be triangular.
inline BarMatrix bar_matrix(const BlockSpec& spec, int r = 0,
                            const std::vector<MultiPartition>* custom_order = nullptr) {
    spec.validate();
    BarMatrix A;
    A.spec = spec;
    A.r = (r == 0) ? choose_truncation(spec) : r;
    A.order = custom_order ? *custom_order : enumerate_block(spec);
    const int B = A.dim();

    std::map<MultiPartition, int> index;
    for (int i = 0; i < B; ++i) index.emplace(A.order[i], i);
    if (static_cast<int>(index.size()) != B)
        throw InputError("block order contains duplicates");

    Straightener engine(spec.n, spec.level);
    A.a.assign(B, std::vector<LaurentPoly>(B));
    for (int i = 0; i < B; ++i) {
        const auto word = encode(A.order[i], spec.charge, spec.n, A.r);
        for (const auto& [w, c] : detail::bar_word(word, engine)) {
            const auto it = index.find(decode_in_block(w, spec).mp);
            QWEDGE_ASSERT(it != index.end(), "bar image left the block");
            A.a[i][it->second] += c;
        }
        if (A.a[i][i] != LaurentPoly::one())
            throw EngineError("bar matrix is not unitriangular: diagonal entry at row " +
                              std::to_string(i) + " is " + A.a[i][i].to_string());
        for (int j = 0; j < i; ++j)
            if (!A.a[i][j].is_zero())
                throw EngineError("bar matrix is not unitriangular: nonzero below-diagonal entry (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
    }
    return A;
}

/// Involutivity of bar as a matrix identity: conj(A) * A == identity, where
/// conj applies q -> q^-1 entrywise.  Equivalent to bar(bar(v)) == v for
/// every vector of the block.
inline bool bar_involutive(const BarMatrix& A) {
    const int B = A.dim();
    for (int i = 0; i < B; ++i)
        for (int k = i; k < B; ++k) { // triangularity forces zero below
            LaurentPoly acc;
            for (int j = i; j <= k; ++j) acc += A.a[i][j].bar() * A.a[j][k];
            if (i == k ? acc != LaurentPoly::one() : !acc.is_zero()) return false;
        }
    return true;
}

struct DecompMatrix {
    BlockSpec spec;
    Sign sign = Sign::plus;
    int r = 0;
    std::vector<MultiPartition> order;
    std::vector<std::vector<LaurentPoly>> delta; // delta[i][j] = coeff of |mu_j> in G(lambda_i)

    int dim() const { return static_cast<int>(order.size()); }

    int index_of(const MultiPartition& mp) const {
        for (int i = 0; i < dim(); ++i)
            if (order[i] == mp) return i;
        throw InputError("multipartition " + to_string(mp) + " is not in block " + spec.key());
    }

    const LaurentPoly& entry(const MultiPartition& lambda, const MultiPartition& mu) const {
        return delta[index_of(lambda)][index_of(mu)];
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["block"] = spec.to_json();
        j["sign"] = qwedge::to_string(sign);
        j["r"] = r;
        auto ord = nlohmann::ordered_json::array();
        for (const auto& mp : order) ord.push_back(qwedge::to_json(mp));
        j["order"] = std::move(ord);
        auto entries = nlohmann::ordered_json::array();
        for (int i = 0; i < dim(); ++i)
            for (int k = 0; k < dim(); ++k)
                if (!delta[i][k].is_zero()) {
                    nlohmann::ordered_json e = nlohmann::ordered_json::array();
                    e.push_back(i);
                    e.push_back(k);
                    e.push_back(delta[i][k].to_json());
                    entries.push_back(std::move(e));
                }
        j["entries"] = std::move(entries);
        return j;
    }

    std::string to_csv() const {
        std::string out = "row,col,row_label,col_label,coeff\n";
        for (int i = 0; i < dim(); ++i)
            for (int k = 0; k < dim(); ++k)
                if (!delta[i][k].is_zero()) {
                    out += std::to_string(i) + "," + std::to_string(k) + ",\"" +
                           to_string(order[i]) + "\",\"" + to_string(order[k]) + "\",\"" +
                           delta[i][k].to_string() + "\"\n";
                }
        return out;
    }

    std::string to_latex() const {
        std::string out = "\\begin{array}{r|";
        out += std::string(static_cast<std::size_t>(dim()), 'c');
        out += "}\n";
        for (int i = 0; i < dim(); ++i) {
            out += "\\lambda_{" + std::to_string(i) + "}";
            for (int k = 0; k < dim(); ++k) {
                out += " & ";
                out += delta[i][k].is_zero() ? "\\cdot" : latex_poly(delta[i][k]);
            }
            out += " \\\\\n";
        }
        out += "\\end{array}\n";
        return out;
    }

private:
    static std::string latex_poly(const LaurentPoly& p) {
        // to_string already reads as math; just brace the exponents.
        std::string src = p.to_string(), out;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] == '^') {
                std::size_t j = i + 1;
                if (j < src.size() && (src[j] == '-' || src[j] == '+')) ++j;
                while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
                out += "^{" + src.substr(i + 1, j - i - 1) + "}";
                i = j - 1;
            } else if (src[i] == '*') {
                out += ' ';
            } else {
                out += src[i];
            }
        }
        return out;
    }
};

/// Solve for the canonical basis of one sign from a bar matrix.
inline DecompMatrix canonical_basis(const BarMatrix& A, Sign sign) {
    const int B = A.dim();
    DecompMatrix D;
    D.spec = A.spec;
    D.sign = sign;
    D.r = A.r;
    D.order = A.order;
    D.delta.assign(B, std::vector<LaurentPoly>(B));
    for (int i = 0; i < B; ++i) {
        auto& b = D.delta[i];
        b[i] = LaurentPoly::one();
        for (int k = i + 1; k < B; ++k) {
            LaurentPoly R;
            for (int j = i; j < k; ++j)
                if (!b[j].is_zero() && !A.a[j][k].is_zero()) R += b[j].bar() * A.a[j][k];
            if (R.is_zero()) continue;
            if (R.bar() != -R || R.coefficient(0) != 0)
                throw EngineError("canonical basis row " + std::to_string(i) +
                                  " is unsolvable at column " + std::to_string(k) +
                                  ": residual " + R.to_string() +
                                  " is not bar-antisymmetric with zero constant term");
            b[k] = (sign == Sign::plus) ? R.positive_part() : R.negative_part();
        }
    }
    return D;
}

/// Independent verification of a decomposition matrix against its bar matrix:
/// unitriangularity, the lattice condition on every off-diagonal entry, and
/// bar-fixedness of every row checked as a full matrix identity (not via the
/// solver's recurrence).  Reports per-row results.
struct VerifyReport {
    std::vector<bool> row_ok;
    std::vector<std::string> failures;
    bool all_ok = true;

    void fail(int row, const std::string& why) {
        row_ok[row] = false;
        all_ok = false;
        failures.push_back("row " + std::to_string(row) + ": " + why);
    }
};

inline VerifyReport verify_canonical(const BarMatrix& A, const DecompMatrix& D) {
    const int B = A.dim();
    if (D.dim() != B || D.order != A.order)
        throw InputError("decomposition matrix does not match the bar matrix block");
    VerifyReport rep;
    rep.row_ok.assign(B, true);
    for (int i = 0; i < B; ++i) {
        if (D.delta[i][i] != LaurentPoly::one())
            rep.fail(i, "diagonal entry is " + D.delta[i][i].to_string());
        for (int k = 0; k < i; ++k)
            if (!D.delta[i][k].is_zero()) {
                rep.fail(i, "nonzero entry left of the diagonal at column " + std::to_string(k));
                break;
            }
        for (int k = i + 1; k < B; ++k) {
            const auto& e = D.delta[i][k];
            const bool ok = (D.sign == Sign::plus) ? e.in_positive_part() : e.in_negative_part();
            if (!ok) {
                rep.fail(i, "entry at column " + std::to_string(k) + " = " + e.to_string() +
                                " violates the " +
                                (D.sign == Sign::plus ? "qZ[q]" : "q^-1 Z[q^-1]") + " lattice");
                break;
            }
        }
        // bar(G_i) == G_i through the bar matrix.
        for (int k = i; k < B; ++k) {
            LaurentPoly lhs;
            for (int j = i; j <= k; ++j)
                if (!D.delta[i][j].is_zero() && !A.a[j][k].is_zero())
                    lhs += D.delta[i][j].bar() * A.a[j][k];
            if (lhs != D.delta[i][k]) {
                rep.fail(i, "not bar-fixed at column " + std::to_string(k));
                break;
            }
        }
    }
    return rep;
}

} // namespace qwedge
