#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "mdseries/errors.hpp"
#include "mdseries/expression_one.hpp"
#include "mdseries/expression_two.hpp"
#include "mdseries/rational.hpp"
#include "mdseries/transforms.hpp"

namespace mdseries {

/// Arbitrary-precision decimal used only at the output boundary; everything
/// upstream is exact rational arithmetic.
using Decimal = boost::multiprecision::mpfr_float;

/// Decimal working precision for a requested digit count (with guard digits).
inline void set_decimal_precision(unsigned digits) {
    Decimal::default_precision(digits + 20);
}

inline Decimal to_decimal(const Rational& r) {
    return Decimal(r.numerator().str()) / Decimal(r.denominator().str());
}

/// "0" for an exact zero, otherwise fixed-point with `digits` fractional
/// digits (correctly rounded by the backend).
inline std::string format_decimal(const Decimal& v, unsigned digits) {
    if (v == 0) return "0";
    return v.str(digits, std::ios_base::fixed);
}

/// Closed-form part of the free energy:
///   (1/2)(p log(2d) - p log p - 2 (1-p) log(1-p) - p),
/// evaluated in high-precision decimal arithmetic. p = 0 returns exactly 0
/// (the p log p limit). Accepts any d > 0; the CLI additionally restricts
/// its numeric runs to d >= 1.
inline Decimal q1_eval(const Rational& d, const Rational& p, unsigned digits = 50) {
    if (!(d > Rational(0))) throw UsageError("d must be positive");
    if (p < Rational(0) || p >= Rational(1)) throw UsageError("p must lie in [0, 1)");
    set_decimal_precision(digits);
    if (p.is_zero()) return Decimal(0);
    Decimal dp = to_decimal(p);
    Decimal two_d = to_decimal(d * Rational(2));
    Decimal q = to_decimal(Rational(1) - p);
    return (dp * log(two_d) - dp * log(dp) - 2 * q * log(q) - dp) / 2;
}

/// Both route evaluations at numeric (d, p): the interaction sums are exact
/// rationals (coefficients evaluated at d, summed against powers of p);
/// decimals appear only in the rendered strings.
struct LambdaEstimate {
    int order = 0;
    Rational q2_first_exact;
    Rational q2_second_exact;
    std::string q1;
    std::string q2_first;
    std::string q2_second;
    std::string lambda_first;
    std::string lambda_second;
};

inline LambdaEstimate lambda_eval(const BSequence& b, const Rational& d, const Rational& p,
                                  unsigned digits = 50) {
    int n = b.order();
    LambdaEstimate est;
    est.order = n;

    std::vector<MultiPoly> a = a_coeffs(jbar_from_b(b));
    std::vector<MultiPoly> ap = a_prime_coeffs(b);
    Rational pk = p * p;
    for (int k = 2; k <= n; ++k) {
        est.q2_first_exact += a[k].eval(d) * pk;
        est.q2_second_exact += ap[k].eval(d) * pk;
        pk *= p;
    }

    Decimal q1 = q1_eval(d, p, digits);
    est.q1 = format_decimal(q1, digits);
    est.q2_first = format_decimal(to_decimal(est.q2_first_exact), digits);
    est.q2_second = format_decimal(to_decimal(est.q2_second_exact), digits);
    est.lambda_first = format_decimal(q1 + to_decimal(est.q2_first_exact), digits);
    est.lambda_second = format_decimal(q1 + to_decimal(est.q2_second_exact), digits);
    return est;
}

} // namespace mdseries
