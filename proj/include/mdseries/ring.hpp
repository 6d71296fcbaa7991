#pragma once

#include <concepts>

#include "mdseries/multipoly.hpp"
#include "mdseries/rational.hpp"

namespace mdseries {

/// Trait bundle a coefficient ring must provide to be usable inside a
/// truncated power series: additive/multiplicative identities, a zero test,
/// and scaling by an exact rational. Specialized per ring type.
template <class R>
struct RingOps; // primary template intentionally undefined

template <>
struct RingOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational scale(const Rational& v, const Rational& c) { return v * c; }
};

template <>
struct RingOps<MultiPoly> {
    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(Rational(1)); }
    static bool is_zero(const MultiPoly& v) { return v.is_zero(); }
    static MultiPoly scale(const MultiPoly& v, const Rational& c) { return v * c; }
};

/// A ring is series-ready when RingOps is specialized for it and the usual
/// arithmetic operators are available.
template <class R>
concept CoefficientRing = requires(const R& a, const R& b, const Rational& q) {
    { RingOps<R>::zero() } -> std::convertible_to<R>;
    { RingOps<R>::one() } -> std::convertible_to<R>;
    { RingOps<R>::is_zero(a) } -> std::convertible_to<bool>;
    { RingOps<R>::scale(a, q) } -> std::convertible_to<R>;
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
};

} // namespace mdseries
