#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "mdseries/errors.hpp"
#include "mdseries/ring.hpp"

namespace mdseries {

/// Formal variable a series is expanded in.
enum class Var { x, z, p };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::z: return "z";
        case Var::p: return "p";
    }
    return "?";
}

/// Truncated formal power series sum_{k=0}^{order} c_k var^k over a
/// coefficient ring R. All binary operations require matching variable and
/// truncation order; results are exact through the stored order.
template <CoefficientRing R>
class Series {
public:
    Series(Var var, int order) : var_(var), order_(order) {
        if (order < 0) throw UsageError("series order must be non-negative");
        coeffs_.assign(order + 1, RingOps<R>::zero());
    }

    Var var() const { return var_; }
    int order() const { return order_; }

    const R& coeff(int k) const {
        check_index(k);
        return coeffs_[k];
    }
    void set_coeff(int k, R value) {
        check_index(k);
        coeffs_[k] = std::move(value);
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!RingOps<R>::is_zero(c)) return false;
        return true;
    }

    Series& operator+=(const Series& o) {
        check_compatible(o);
        for (int k = 0; k <= order_; ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_compatible(o);
        for (int k = 0; k <= order_; ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(const Series& a) {
        Series r(a.var_, a.order_);
        for (int k = 0; k <= a.order_; ++k) r.coeffs_[k] = RingOps<R>::zero() - a.coeffs_[k];
        return r;
    }

    /// Cauchy product, truncated to the common order.
    friend Series operator*(const Series& a, const Series& b) {
        a.check_compatible(b);
        Series r(a.var_, a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (RingOps<R>::is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (RingOps<R>::is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend bool operator==(const Series& a, const Series& b) {
        return a.var_ == b.var_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Scale every coefficient by an exact rational.
    Series& scale(const Rational& c) {
        for (auto& v : coeffs_) v = RingOps<R>::scale(v, c);
        return *this;
    }
    friend Series operator*(Series a, const Rational& c) { return a.scale(c); }
    friend Series operator*(const Rational& c, Series a) { return a.scale(c); }

    /// Scale every coefficient by a ring element.
    Series& scale_by(const R& c) {
        for (auto& v : coeffs_) v = v * c;
        return *this;
    }

    /// exp of a series with zero constant term, via the standard
    /// differential recurrence e_n = (1/n) sum_{k=1}^{n} k s_k e_{n-k}.
    Series exp() const {
        if (!RingOps<R>::is_zero(coeffs_[0]))
            throw UsageError("exp requires a zero constant term");
        Series e(var_, order_);
        e.coeffs_[0] = RingOps<R>::one();
        for (int n = 1; n <= order_; ++n) {
            R acc = RingOps<R>::zero();
            for (int k = 1; k <= n; ++k) {
                if (RingOps<R>::is_zero(coeffs_[k])) continue;
                acc = acc + RingOps<R>::scale(coeffs_[k] * e.coeffs_[n - k], Rational(k));
            }
            e.coeffs_[n] = RingOps<R>::scale(acc, Rational(1, n));
        }
        return e;
    }

    /// log(1 + s) for a series s with zero constant term, via
    /// y_n = s_n - (1/n) sum_{k=1}^{n-1} k y_k s_{n-k}.
    Series log1p() const {
        if (!RingOps<R>::is_zero(coeffs_[0]))
            throw UsageError("log1p requires a zero constant term");
        Series y(var_, order_);
        for (int n = 1; n <= order_; ++n) {
            R acc = RingOps<R>::zero();
            for (int k = 1; k < n; ++k) {
                if (RingOps<R>::is_zero(y.coeffs_[k]) || RingOps<R>::is_zero(coeffs_[n - k]))
                    continue;
                acc = acc + RingOps<R>::scale(y.coeffs_[k] * coeffs_[n - k], Rational(k));
            }
            y.coeffs_[n] = coeffs_[n] - RingOps<R>::scale(acc, Rational(1, n));
        }
        return y;
    }

    /// Multiplicative inverse; requires the constant term to be exactly one.
    Series inverse() const {
        if (!(coeffs_[0] == RingOps<R>::one()))
            throw UsageError("inverse requires a unit constant term");
        Series u(var_, order_);
        u.coeffs_[0] = RingOps<R>::one();
        for (int n = 1; n <= order_; ++n) {
            R acc = RingOps<R>::zero();
            for (int k = 1; k <= n; ++k) {
                if (RingOps<R>::is_zero(coeffs_[k])) continue;
                acc = acc + coeffs_[k] * u.coeffs_[n - k];
            }
            u.coeffs_[n] = RingOps<R>::zero() - acc;
        }
        return u;
    }

    /// Integer power by binary exponentiation; negative exponents go through
    /// inverse() and therefore require a unit constant term.
    Series pow(long long k) const {
        if (k < 0) return inverse().pow(-k);
        Series r(var_, order_);
        r.coeffs_[0] = RingOps<R>::one();
        Series base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    /// Exact division by var^m: requires the bottom m coefficients to vanish.
    /// The order is kept; the top m coefficients of the result are beyond
    /// what the input determines and are filled with zero, so callers must
    /// only rely on the result through order - m (every use here multiplies
    /// back by at least var^m before reading coefficients).
    Series shift_div(int m) const {
        if (m < 0) throw UsageError("shift exponent must be non-negative");
        if (m > order_) throw UsageError("shift exceeds series order");
        for (int k = 0; k < m; ++k)
            if (!RingOps<R>::is_zero(coeffs_[k]))
                throw UsageError("inexact division by " + std::string(var_name(var_)) + "^" +
                                 std::to_string(m));
        Series r(var_, order_);
        for (int k = m; k <= order_; ++k) r.coeffs_[k - m] = coeffs_[k];
        return r;
    }

    /// Multiply by var^m, dropping coefficients pushed past the order.
    Series mul_var_pow(int m) const {
        if (m < 0) throw UsageError("shift exponent must be non-negative");
        Series r(var_, order_);
        for (int k = 0; k + m <= order_; ++k) r.coeffs_[k + m] = coeffs_[k];
        return r;
    }

    /// Restrict to a lower truncation order.
    Series truncate(int new_order) const {
        if (new_order > order_) throw UsageError("cannot truncate to a higher order");
        Series r(var_, new_order);
        for (int k = 0; k <= new_order; ++k) r.coeffs_[k] = coeffs_[k];
        return r;
    }

    std::string str() const {
        std::ostringstream out;
        bool first = true;
        for (int k = 0; k <= order_; ++k) {
            if (RingOps<R>::is_zero(coeffs_[k])) continue;
            if (!first) out << " + ";
            first = false;
            out << "(" << coeffs_[k] << ")";
            if (k >= 1) out << "*" << var_name(var_);
            if (k >= 2) out << "^" << k;
        }
        if (first) out << "0";
        out << " + O(" << var_name(var_) << "^" << (order_ + 1) << ")";
        return out.str();
    }

private:
    Var var_;
    int order_;
    std::vector<R> coeffs_;

    void check_index(int k) const {
        if (k < 0 || k > order_)
            throw UsageError("coefficient index " + std::to_string(k) + " outside order " +
                             std::to_string(order_));
    }
    void check_compatible(const Series& o) const {
        if (var_ != o.var_)
            throw UsageError(std::string("variable mismatch: ") + var_name(var_) + " vs " +
                             var_name(o.var_));
        if (order_ != o.order_)
            throw UsageError("order mismatch: " + std::to_string(order_) + " vs " +
                             std::to_string(o.order_));
    }
};

/// Generalized binomial coefficient binom(alpha, k) for rational alpha.
inline Rational binomial(const Rational& alpha, int k) {
    if (k < 0) throw UsageError("binomial index must be non-negative");
    Rational r(1);
    for (int j = 0; j < k; ++j) r *= (alpha - Rational(j)) / Rational(j + 1);
    return r;
}

/// (1 + u)^alpha for a series u with zero constant term, via the binomial
/// series sum_k binom(alpha, k) u^k (a finite sum at fixed order).
template <CoefficientRing R>
Series<R> binomial_pow(const Series<R>& u, const Rational& alpha) {
    if (!RingOps<R>::is_zero(u.coeff(0)))
        throw UsageError("binomial series requires a zero constant term");
    Series<R> r(u.var(), u.order());
    Series<R> u_pow(u.var(), u.order());
    u_pow.set_coeff(0, RingOps<R>::one());
    for (int k = 0; k <= u.order(); ++k) {
        Series<R> term = u_pow;
        r += term.scale(binomial(alpha, k));
        if (k < u.order()) u_pow *= u;
    }
    return r;
}

} // namespace mdseries
