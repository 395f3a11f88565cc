#pragma once

// Exact arithmetic in Z[q, q^-1].
//
// Coefficients are arbitrary-precision integers; there is deliberately no
// division anywhere in this file.  Every algorithm built on top of this ring
// stays integral, and anything that would need a rational number is a bug in
// the caller, not a feature request here.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace qwedge {

using BigInt = boost::multiprecision::cpp_int;

/// Engine-side failure: a broken internal invariant or a precondition violated
/// by library code.  Reaching one of these means a bug, not bad user input.
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// User-side failure: malformed input that survived flag parsing but cannot be
/// given a mathematical meaning (bad partitions, inconsistent dimensions, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

#define QWEDGE_ASSERT(cond, msg)                                            \
    do {                                                                    \
        if (!(cond)) throw ::qwedge::EngineError(std::string("invariant: ") + (msg)); \
    } while (0)

/// A Laurent polynomial in one variable q with BigInt coefficients.
///
/// Invariant: the exponent->coefficient map is canonical — it never stores a
/// zero coefficient, so equality of values is equality of maps.  All mutating
/// operations re-establish this before returning.
class LaurentPoly {
public:
    LaurentPoly() = default;

    /// c * q^e  (the zero polynomial if c == 0).
    static LaurentPoly monomial(int exp, BigInt coeff = 1) {
        LaurentPoly p;
        if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
        return p;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of q^e (zero if absent).
    const BigInt& coefficient(int exp) const {
        static const BigInt kZero = 0;
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? kZero : it->second;
    }

    int min_exp() const {
        QWEDGE_ASSERT(!coeffs_.empty(), "min_exp of zero polynomial");
        return coeffs_.begin()->first;
    }
    int max_exp() const {
        QWEDGE_ASSERT(!coeffs_.empty(), "max_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    /// True when every exponent is >= 1.  The zero polynomial qualifies.
    bool in_positive_part() const {
        return coeffs_.empty() || coeffs_.begin()->first >= 1;
    }

    /// True when every exponent is <= -1.  The zero polynomial qualifies.
    bool in_negative_part() const {
        return coeffs_.empty() || coeffs_.rbegin()->first <= -1;
    }

    /// The terms with exponent >= 1.
    LaurentPoly positive_part() const {
        LaurentPoly p;
        for (auto it = coeffs_.upper_bound(0); it != coeffs_.end(); ++it)
            p.coeffs_.insert(*it);
        return p;
    }

    /// The terms with exponent <= -1.
    LaurentPoly negative_part() const {
        LaurentPoly p;
        for (auto it = coeffs_.begin(); it != coeffs_.end() && it->first <= -1; ++it)
            p.coeffs_.insert(*it);
        return p;
    }

    /// The bar involution on coefficients: q -> q^-1.
    LaurentPoly bar() const {
        LaurentPoly p;
        for (const auto& [e, c] : coeffs_) p.coeffs_[-e] = c;
        return p;
    }

    LaurentPoly operator-() const {
        LaurentPoly p;
        for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) {
            auto it = coeffs_.find(e);
            if (it == coeffs_.end()) {
                coeffs_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) coeffs_.erase(it);
            }
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) {
                auto& slot = p.coeffs_[ea + eb];
                slot += ca * cb;
            }
        for (auto it = p.coeffs_.begin(); it != p.coeffs_.end();)
            it = (it->second == 0) ? p.coeffs_.erase(it) : std::next(it);
        return p;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiply by q^e in place.
    LaurentPoly& shift(int e) {
        if (e == 0 || coeffs_.empty()) return *this;
        std::map<int, BigInt> shifted;
        for (auto& [exp, c] : coeffs_) shifted.emplace(exp + e, std::move(c));
        coeffs_ = std::move(shifted);
        return *this;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    /// Ordering is only used to put polynomials in ordered containers.
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    const std::map<int, BigInt>& terms() const { return coeffs_; }

    /// Human-readable form, exponents ascending: "-q^-1 + 2*q^3", "q + 1" never
    /// (ascending means "1 + q"), the zero polynomial prints as "0".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            const bool neg = c < 0;
            BigInt mag = neg ? BigInt(-c) : c;
            if (first) {
                if (neg) out += '-';
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit = (mag == 1);
            if (e == 0) {
                out += mag.str();
            } else {
                if (!unit) {
                    out += mag.str();
                    out += '*';
                }
                out += 'q';
                if (e != 1) {
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
        return out;
    }

    /// Parse the format produced by to_string (whitespace around +/- optional).
    /// Accepts e.g. "0", "-q^-1 + 2*q^3", "3", "q^2-q".  Throws InputError.
    static LaurentPoly parse(std::string_view text);

    /// JSON form: [[exp, coeff], ...] with exponents ascending.  Coefficients
    /// that fit in 64 bits are numbers; larger ones are decimal strings.
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        static const BigInt kLo = std::numeric_limits<std::int64_t>::min();
        static const BigInt kHi = std::numeric_limits<std::int64_t>::max();
        for (const auto& [e, c] : coeffs_) {
            nlohmann::ordered_json term = nlohmann::ordered_json::array();
            term.push_back(e);
            if (c >= kLo && c <= kHi)
                term.push_back(c.convert_to<std::int64_t>());
            else
                term.push_back(c.str());
            arr.push_back(std::move(term));
        }
        return arr;
    }

    static LaurentPoly from_json(const nlohmann::json& arr) {
        if (!arr.is_array()) throw InputError("Laurent polynomial JSON must be an array of [exp, coeff] pairs");
        LaurentPoly p;
        for (const auto& term : arr) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
                throw InputError("Laurent polynomial term must be [integer exponent, coefficient]");
            const int e = term[0].get<int>();
            BigInt c;
            if (term[1].is_number_integer())
                c = BigInt(term[1].get<std::int64_t>());
            else if (term[1].is_string())
                c = BigInt(term[1].get<std::string>());
            else
                throw InputError("Laurent coefficient must be an integer or a decimal string");
            if (c == 0) throw InputError("Laurent polynomial JSON must not contain zero coefficients");
            if (!p.coeffs_.emplace(e, std::move(c)).second)
                throw InputError("Laurent polynomial JSON repeats an exponent");
        }
        return p;
    }

private:
    std::map<int, BigInt> coeffs_;
};

namespace detail {

inline bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

/// One term of the textual form: [integer][*]["q"["^" integer]].
struct TermParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    // Signed decimal integer; sign must already be consumed by the caller.
    BigInt magnitude() {
        std::size_t start = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (pos == start) throw InputError("expected a number in Laurent polynomial at offset " + std::to_string(pos));
        return BigInt(std::string(s.substr(start, pos - start)));
    }

    int exponent() {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = (s[pos] == '-');
            ++pos;
        }
        std::size_t start = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (pos == start) throw InputError("expected an exponent after '^' at offset " + std::to_string(pos));
        long v = std::stol(std::string(s.substr(start, pos - start)));
        return static_cast<int>(neg ? -v : v);
    }
};

} // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
    detail::TermParser tp{text};
    LaurentPoly out;
    bool any = false;
    while (!tp.done()) {
        // Sign separating / leading this term.
        bool neg = false;
        if (tp.s[tp.pos] == '+' || tp.s[tp.pos] == '-') {
            neg = (tp.s[tp.pos] == '-');
            ++tp.pos;
            tp.skip_ws();
        } else if (any) {
            throw InputError("expected '+' or '-' between Laurent polynomial terms");
        }
        if (tp.pos >= tp.s.size()) throw InputError("dangling sign in Laurent polynomial");

        BigInt mag = 1;
        bool have_mag = false;
        bool saw_star = false;
        if (detail::is_digit(tp.s[tp.pos])) {
            mag = tp.magnitude();
            have_mag = true;
            tp.skip_ws();
            if (tp.pos < tp.s.size() && tp.s[tp.pos] == '*') {
                ++tp.pos;
                saw_star = true;
                tp.skip_ws();
            }
        }
        int exp = 0;
        if (saw_star && (tp.pos >= tp.s.size() || tp.s[tp.pos] != 'q'))
            throw InputError("expected 'q' after '*' in Laurent polynomial at offset " + std::to_string(tp.pos));
        if (tp.pos < tp.s.size() && tp.s[tp.pos] == 'q') {
            ++tp.pos;
            exp = 1;
            if (tp.pos < tp.s.size() && tp.s[tp.pos] == '^') {
                ++tp.pos;
                exp = tp.exponent();
            }
        } else if (!have_mag) {
            throw InputError("expected a coefficient or 'q' in Laurent polynomial at offset " + std::to_string(tp.pos));
        }
        if (neg) mag = -mag;
        out += monomial(exp, mag);
        any = true;
    }
    if (!any) throw InputError("empty Laurent polynomial text (use \"0\")");
    return out;
}

/// q - q^-1, the ubiquitous straightening coefficient.
inline const LaurentPoly& q_minus_qinv() {
    static const LaurentPoly p = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    return p;
}

} // namespace qwedge
