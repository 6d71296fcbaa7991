#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mdseries/errors.hpp"
#include "mdseries/monomial.hpp"
#include "mdseries/rational.hpp"

namespace mdseries {

/// Multivariate Laurent polynomial in d (integer exponents of either sign)
/// and the indexed families b_i, J_i (non-negative exponents), with exact
/// rational coefficients. Canonical form: no zero coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    /*implicit*/ MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_[Monomial::unit()] = c;
    }
    /*implicit*/ MultiPoly(long long c) : MultiPoly(Rational(c)) {}

    static MultiPoly constant(const Rational& c) { return MultiPoly(c); }
    static MultiPoly d_pow(int e, const Rational& c = Rational(1)) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_[Monomial::d(e)] = c;
        return p;
    }
    static MultiPoly b(int i, int e = 1) {
        MultiPoly p;
        p.terms_[Monomial::b(i, e)] = Rational(1);
        return p;
    }
    static MultiPoly j(int i, int e = 1) {
        MultiPoly p;
        p.terms_[Monomial::j(i, e)] = Rational(1);
        return p;
    }
    static MultiPoly term(const Monomial& m, const Rational& c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    /// Constant term (coefficient of the unit monomial).
    Rational constant_term() const {
        auto it = terms_.find(Monomial::unit());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    MultiPoly& scale(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a.scale(c); }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a.scale(c); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Largest exponent of d across all terms (0 for the zero polynomial).
    int degree_in_d() const {
        int deg = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (first || m.d_exp > deg) deg = m.d_exp;
            first = false;
        }
        return deg;
    }

    /// Largest exponent of the given symbol across all terms.
    int degree_in(Symbol s) const {
        int deg = 0;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(s);
            if (e > deg) deg = e;
        }
        return deg;
    }

    /// Largest index i such that some term involves b_i (or J_i); 0 if none.
    int max_index(SymbolKind kind) const {
        int best = 0;
        for (const auto& [m, c] : terms_) {
            const auto& exps = (kind == SymbolKind::b) ? m.b_exps : m.j_exps;
            if (!exps.empty()) best = std::max(best, exps.rbegin()->first);
        }
        return best;
    }

    bool d_free() const {
        for (const auto& [m, c] : terms_)
            if (m.d_exp != 0) return false;
        return true;
    }

    /// Collect the coefficient of s^power (a polynomial in the remaining
    /// symbols).
    MultiPoly coefficient_in(Symbol s, int power) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.exponent_of(s) != power) continue;
            Monomial rest = m;
            auto& exps = (s.kind == SymbolKind::b) ? rest.b_exps : rest.j_exps;
            exps.erase(s.index);
            r.add_term(rest, c);
        }
        return r;
    }

    /// Substitute a polynomial for every occurrence of symbol s. Powers of
    /// the replacement are memoized across terms.
    MultiPoly substitute(Symbol s, const MultiPoly& value) const {
        std::vector<MultiPoly> powers{MultiPoly(Rational(1))}; // powers[k] = value^k
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(s);
            if (e == 0) {
                r.add_term(m, c);
                continue;
            }
            while ((int)powers.size() <= e) powers.push_back(powers.back() * value);
            Monomial rest = m;
            auto& exps = (s.kind == SymbolKind::b) ? rest.b_exps : rest.j_exps;
            exps.erase(s.index);
            r += MultiPoly::term(rest, c) * powers[e];
        }
        return r;
    }

    /// Evaluate at concrete rational values. Every b_i/J_i that occurs must
    /// be present in the corresponding map; d = 0 with a negative d-exponent
    /// is rejected.
    Rational eval(const Rational& d_val, const std::map<int, Rational>& b_vals = {},
                  const std::map<int, Rational>& j_vals = {}) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            if (m.d_exp != 0) {
                if (d_val.is_zero() && m.d_exp < 0) throw UsageError("evaluation at d = 0 with a negative d power");
                v *= d_val.pow(m.d_exp);
            }
            for (const auto& [i, e] : m.b_exps) v *= lookup(b_vals, i, "b").pow(e);
            for (const auto& [i, e] : m.j_exps) v *= lookup(j_vals, i, "J").pow(e);
            total += v;
        }
        return total;
    }

    /// Canonical text form, deterministic: terms in the canonical monomial
    /// order, "+"/"-" separated, e.g. "-2*d^2 + 1/4*b_2". Zero prints "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c.abs();
            if (first) {
                if (c.is_negative()) out << "-";
            } else {
                out << (c.is_negative() ? " - " : " + ");
            }
            first = false;
            std::string factors = monomial_str(m);
            if (factors.empty()) {
                out << a.str();
            } else if (a.is_one()) {
                out << factors;
            } else {
                out << a.str() << "*" << factors;
            }
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

private:
    TermMap terms_;

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static const Rational& lookup(const std::map<int, Rational>& vals, int i, const char* family) {
        auto it = vals.find(i);
        if (it == vals.end())
            throw UsageError(std::string("missing value for ") + family + "_" + std::to_string(i));
        return it->second;
    }

    static std::string monomial_str(const Monomial& m) {
        std::ostringstream out;
        bool first = true;
        auto emit = [&](const std::string& base, int e) {
            if (!first) out << "*";
            first = false;
            out << base;
            if (e != 1) out << "^" << e;
        };
        if (m.d_exp != 0) emit("d", m.d_exp);
        for (const auto& [i, e] : m.b_exps) emit("b_" + std::to_string(i), e);
        for (const auto& [i, e] : m.j_exps) emit("J_" + std::to_string(i), e);
        return out.str();
    }
};

} // namespace mdseries
