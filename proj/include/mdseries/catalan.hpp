#pragma once

#include <vector>

#include "mdseries/errors.hpp"
#include "mdseries/multipoly.hpp"
#include "mdseries/series.hpp"
#include "mdseries/transforms.hpp"

namespace mdseries {

/// C_n = (2n)! / ((n+1)! n!), exactly.
inline Rational catalan_number(int n) {
    if (n < 0) throw UsageError("Catalan index must be non-negative");
    return Rational(factorial(2 * n)) / Rational(factorial(n + 1) * factorial(n));
}

/// The Catalan-weighted coefficient table: the sequence
///   bt_n = ((-1)^{n+1} / n) 2^{n-1} C_n d^n
/// (so bt_1 = d) conjectured to map to the all-zero cluster kernels.
struct CatalanData {
    int order;
    std::vector<Rational> catalans; // C_0..C_order
    BSequence btilde;

    explicit CatalanData(int n) : order(n), btilde(n) {
        if (n < 1) throw UsageError("order must be >= 1");
        catalans.reserve(n + 1);
        for (int k = 0; k <= n; ++k) catalans.push_back(catalan_number(k));
        for (int k = 2; k <= n; ++k) {
            Rational c = Rational(k % 2 == 0 ? -1 : 1, k) * Rational(2).pow(k - 1) * catalans[k];
            btilde.set(k, MultiPoly::d_pow(k, c));
        }
    }
};

inline BSequence catalan_b(int order) { return CatalanData(order).btilde; }

/// The defining sum e(x) = sum_i bt_i (x/(2d))^i, in which d cancels
/// term-by-term, leaving exact rational coefficients.
inline Series<Rational> e_series(int order) {
    BSequence bt = catalan_b(order);
    Series<Rational> e(Var::x, order);
    for (int i = 1; i <= order; ++i) {
        MultiPoly c = bt.at(i) * MultiPoly::d_pow(-i, Rational(1, 2).pow(i));
        if (!c.is_constant())
            throw InternalConsistencyError("d failed to cancel in the Catalan weight sum");
        e.set_coeff(i, c.constant_term());
    }
    return e;
}

/// Closed form of the same sum:
///   1/(1 + (1+4x)^{1/2}) + log(1 + (1+4x)^{1/2}) - 1/2 - log 2,
/// expanded with the exact binomial series. Writing t = (1+4x)^{1/2} - 1
/// removes the constants: (1/2)(1 + t/2)^{-1} + log(1 + t/2) - 1/2.
inline Series<Rational> e_closed_form(int order) {
    Series<Rational> four_x(Var::x, order);
    if (order >= 1) four_x.set_coeff(1, Rational(4));
    Series<Rational> t = binomial_pow(four_x, Rational(1, 2));
    t.set_coeff(0, Rational(0)); // t = (1+4x)^{1/2} - 1
    Series<Rational> half_t = t * Rational(1, 2);
    Series<Rational> one(Var::x, order);
    one.set_coeff(0, Rational(1));
    return (one + half_t).inverse() * Rational(1, 2) + half_t.log1p() - one * Rational(1, 2);
}

/// Generating function sum_{n=0}^{N} C_n x^n from the number table.
inline Series<Rational> catalan_gf(int order) {
    Series<Rational> g(Var::x, order);
    for (int n = 0; n <= order; ++n) g.set_coeff(n, catalan_number(n));
    return g;
}

/// Closed form 2/(1 + (1-4x)^{1/2}) of the generating function, expanded
/// with the exact binomial series (= (1 + t/2)^{-1} for t = (1-4x)^{1/2}-1).
inline Series<Rational> catalan_gf_closed_form(int order) {
    Series<Rational> minus_four_x(Var::x, order);
    if (order >= 1) minus_four_x.set_coeff(1, Rational(-4));
    Series<Rational> t = binomial_pow(minus_four_x, Rational(1, 2));
    t.set_coeff(0, Rational(0));
    Series<Rational> one(Var::x, order);
    one.set_coeff(0, Rational(1));
    return (one + t * Rational(1, 2)).inverse();
}

} // namespace mdseries
