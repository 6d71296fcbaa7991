#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <utility>

#include "mdseries/errors.hpp"

namespace mdseries {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, the scalar field of every module.
/// Canonical form is maintained by the backend: gcd(|num|, den) = 1 and
/// den > 0. All arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT: implicit by design
    Rational(long long n) : v_(n) {}          // NOLINT
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw UsageError("Rational: zero denominator");
        // the backend requires a positive denominator
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                     : boost::multiprecision::cpp_rational(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "n" or "n/m" with optional leading '-'.
    static Rational parse(const std::string& s) {
        const auto slash = s.find('/');
        const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
        const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (num.empty() || den.empty())
            throw UsageError("Rational: cannot parse '" + s + "'");
        try {
            return Rational(BigInt(num), BigInt(den));
        } catch (const std::runtime_error&) {
            throw UsageError("Rational: cannot parse '" + s + "'");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(cpp_rat(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw UsageError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return is_negative() ? -*this : *this; }

    /// Integer power; k < 0 inverts (zero base -> UsageError).
    Rational pow(long k) const {
        if (k < 0) {
            if (is_zero()) throw UsageError("Rational: 0 raised to a negative power");
            return (Rational(1) / *this).pow(-k);
        }
        Rational base = *this, acc = 1;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// "n" when integral, otherwise "n/m".
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    using cpp_rat = boost::multiprecision::cpp_rational;
    explicit Rational(cpp_rat v) : v_(std::move(v)) {}
    cpp_rat v_;
};

inline BigInt factorial(int n) {
    if (n < 0) throw UsageError("factorial of a negative integer");
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

/// Non-negative gcd, sign-insensitive; gcd(0, n) = |n|.
inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                      boost::multiprecision::abs(b));
}

} // namespace mdseries
