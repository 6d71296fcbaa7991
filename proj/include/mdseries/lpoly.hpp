#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "mdseries/errors.hpp"
#include "mdseries/multipoly.hpp"
#include "mdseries/ring.hpp"

namespace mdseries {

/// Dense polynomial in the auxiliary size parameter L with MultiPoly
/// coefficients. Canonical form: no trailing zero coefficients.
class LPoly {
public:
    LPoly() = default;
    /*implicit*/ LPoly(const MultiPoly& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    /*implicit*/ LPoly(const Rational& c) : LPoly(MultiPoly(c)) {}
    /*implicit*/ LPoly(long long c) : LPoly(MultiPoly(Rational(c))) {}

    static LPoly L_pow(int k, const MultiPoly& c = MultiPoly(Rational(1))) {
        if (k < 0) throw UsageError("L power must be non-negative");
        LPoly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(k + 1, MultiPoly());
            p.coeffs_[k] = c;
        }
        return p;
    }

    /// (L - 1)^k, expanded.
    static LPoly L_minus_one_pow(int k) {
        if (k < 0) throw UsageError("L power must be non-negative");
        LPoly base;
        base.coeffs_ = {MultiPoly(Rational(-1)), MultiPoly(Rational(1))};
        LPoly r(MultiPoly(Rational(1)));
        for (int i = 0; i < k; ++i) r = r * base;
        return r;
    }

    /// Product of `count` consecutive monic linear factors,
    /// (L + c0)(L + c0 + 1) ... (L + c0 + count - 1). Empty product is 1.
    static LPoly linear_product(int c0, int count) {
        if (count < 0) throw UsageError("factor count must be non-negative");
        LPoly r(MultiPoly(Rational(1)));
        for (int j = 0; j < count; ++j) {
            LPoly f;
            f.coeffs_ = {MultiPoly(Rational(c0 + j)), MultiPoly(Rational(1))};
            r = r * f;
        }
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in L; -1 for the zero polynomial.
    int degree() const { return (int)coeffs_.size() - 1; }
    MultiPoly coeff(int k) const {
        return (k >= 0 && k < (int)coeffs_.size()) ? coeffs_[k] : MultiPoly();
    }
    /// Leading coefficient (zero polynomial if *this is zero).
    MultiPoly leading() const { return coeffs_.empty() ? MultiPoly() : coeffs_.back(); }

    LPoly& operator+=(const LPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        normalize();
        return *this;
    }
    LPoly& operator-=(const LPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        normalize();
        return *this;
    }
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator-(const LPoly& a) {
        LPoly r;
        r.coeffs_.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) r.coeffs_.push_back(-c);
        return r;
    }
    friend LPoly operator*(const LPoly& a, const LPoly& b) {
        LPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.normalize();
        return r;
    }
    LPoly& operator*=(const LPoly& o) { return *this = *this * o; }

    LPoly& scale(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v.scale(c);
        return *this;
    }
    friend LPoly operator*(LPoly a, const Rational& c) { return a.scale(c); }
    friend LPoly operator*(const Rational& c, LPoly a) { return a.scale(c); }

    friend bool operator==(const LPoly& a, const LPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Evaluate at a concrete rational L, leaving d/b_i/J_i symbolic.
    MultiPoly eval(const Rational& l_val) const {
        MultiPoly r;
        Rational p(1);
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            r += coeffs_[k] * p;
            p *= l_val;
        }
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            if (coeffs_[k].is_zero()) continue;
            if (!first) out << " + ";
            first = false;
            out << "(" << coeffs_[k].str() << ")";
            if (k >= 1) out << "*L";
            if (k >= 2) out << "^" << k;
        }
        return out.str();
    }

private:
    std::vector<MultiPoly> coeffs_;

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

/// The descending product (L-2r+1)(L-2r+2)...(L-2r+2(r-p)) — the number of
/// ordered ways to seat 2(r-p) further objects once 2r slots are spoken for,
/// written as a monic polynomial of degree 2(r-p). Empty product for p = r.
inline LPoly falling_factorial(int r, int p) {
    if (p < 0 || p > r) throw UsageError("falling factorial requires 0 <= p <= r");
    return LPoly::linear_product(1 - 2 * r, 2 * (r - p));
}

/// Rational function of L of the controlled shape num(L) / (L^a (L-1)^b).
/// Kept unreduced: arithmetic only ever grows the denominator exponents, and
/// equality is decided by cross-multiplication, so no polynomial division is
/// needed. The L -> infinity limit is read off by comparing the numerator
/// degree against a + b.
class LControlled {
public:
    LControlled() = default;
    /*implicit*/ LControlled(const LPoly& num) : num_(num) {}
    /*implicit*/ LControlled(const MultiPoly& c) : num_(c) {}
    /*implicit*/ LControlled(const Rational& c) : num_(c) {}
    LControlled(LPoly num, int a_pow, int b_pow) : num_(std::move(num)), a_(a_pow), b_(b_pow) {
        if (a_ < 0 || b_ < 0) throw UsageError("denominator exponents must be non-negative");
        if (num_.is_zero()) a_ = b_ = 0;
    }

    const LPoly& num() const { return num_; }
    int a_pow() const { return a_; }
    int b_pow() const { return b_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Divide by L (recorded in the denominator; the numerator is untouched).
    LControlled div_L(int k = 1) const {
        if (is_zero()) return *this;
        return LControlled(num_, a_ + k, b_);
    }
    /// Multiply by L (as a numerator factor; denominators stay unreduced).
    LControlled mul_L() const { return LControlled(num_ * LPoly::L_pow(1), a_, b_); }

    friend LControlled operator+(const LControlled& x, const LControlled& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        int a = std::max(x.a_, y.a_);
        int b = std::max(x.b_, y.b_);
        LPoly n = x.num_ * LPoly::L_pow(a - x.a_) * LPoly::L_minus_one_pow(b - x.b_) +
                  y.num_ * LPoly::L_pow(a - y.a_) * LPoly::L_minus_one_pow(b - y.b_);
        return LControlled(std::move(n), a, b);
    }
    friend LControlled operator-(const LControlled& x, const LControlled& y) { return x + (-y); }
    friend LControlled operator-(const LControlled& x) {
        return x.is_zero() ? x : LControlled(-x.num_, x.a_, x.b_);
    }
    friend LControlled operator*(const LControlled& x, const LControlled& y) {
        if (x.is_zero() || y.is_zero()) return LControlled();
        return LControlled(x.num_ * y.num_, x.a_ + y.a_, x.b_ + y.b_);
    }
    LControlled& operator+=(const LControlled& o) { return *this = *this + o; }
    LControlled& operator-=(const LControlled& o) { return *this = *this - o; }
    LControlled& operator*=(const LControlled& o) { return *this = *this * o; }

    LControlled& scale(const Rational& c) {
        num_.scale(c);
        if (num_.is_zero()) a_ = b_ = 0;
        return *this;
    }
    friend LControlled operator*(LControlled x, const Rational& c) { return x.scale(c); }
    friend LControlled operator*(const Rational& c, LControlled x) { return x.scale(c); }

    /// Equality as rational functions, by cross-multiplication.
    friend bool operator==(const LControlled& x, const LControlled& y) {
        return x.num_ * LPoly::L_pow(y.a_) * LPoly::L_minus_one_pow(y.b_) ==
               y.num_ * LPoly::L_pow(x.a_) * LPoly::L_minus_one_pow(x.b_);
    }

    /// Exact L -> infinity limit. Finite iff deg(num) <= a + b; the limit is
    /// the leading numerator coefficient when degrees match, zero when the
    /// numerator degree falls short.
    MultiPoly limit_at_infinity() const {
        if (is_zero()) return MultiPoly();
        int deg = num_.degree();
        int den = a_ + b_;
        if (deg < den) return MultiPoly();
        if (deg == den) return num_.leading();
        throw DivergenceError("no finite large-L limit: numerator degree " + std::to_string(deg) +
                              " exceeds denominator degree " + std::to_string(den));
    }

    /// Evaluate at a concrete rational L, leaving d/b_i/J_i symbolic.
    MultiPoly eval_at(const Rational& l_val) const {
        if (is_zero()) return MultiPoly();
        Rational den = l_val.pow(a_) * (l_val - Rational(1)).pow(b_);
        if (den.is_zero()) throw UsageError("evaluation at a pole of the L denominator");
        return num_.eval(l_val) * (Rational(1) / den);
    }

private:
    LPoly num_;
    int a_ = 0;
    int b_ = 0;
};

template <>
struct RingOps<LControlled> {
    static LControlled zero() { return LControlled(); }
    static LControlled one() { return LControlled(Rational(1)); }
    static bool is_zero(const LControlled& v) { return v.is_zero(); }
    static LControlled scale(const LControlled& v, const Rational& c) {
        LControlled r = v;
        return r.scale(c);
    }
};

} // namespace mdseries
