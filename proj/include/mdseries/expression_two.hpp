#pragma once

#include <vector>

#include "mdseries/errors.hpp"
#include "mdseries/multipoly.hpp"
#include "mdseries/series.hpp"
#include "mdseries/transforms.hpp"

namespace mdseries {

/// Power-series reversion of the density relation p = 2 sum_n n b_n z^n and
/// the derived pieces the second form is assembled from.
struct MayerInversion {
    Series<MultiPoly> z_of_p;   // activity as a series in the density p
    Series<MultiPoly> f_factor; // F with z = (p/(2d))(1 + F); exact through order-1 only
    Series<MultiPoly> pressure; // sum_n b_n z^n

    explicit MayerInversion(int order)
        : z_of_p(Var::p, order), f_factor(Var::p, order), pressure(Var::p, order) {}
};

/// Substitute a given z(p) into the pressure sum P = sum_{n=1}^{N} b_n z^n.
inline Series<MultiPoly> pressure_series(const BSequence& b, const Series<MultiPoly>& z_of_p) {
    int n = b.order();
    Series<MultiPoly> pressure(Var::p, n);
    Series<MultiPoly> z_pow = z_of_p;
    for (int k = 1; k <= n; ++k) {
        Series<MultiPoly> t = z_pow;
        t.scale_by(b.at(k));
        pressure += t;
        if (k < n) z_pow *= z_of_p;
    }
    return pressure;
}

inline Series<MultiPoly> pressure_series(const BSequence& b, const MayerInversion& inv) {
    return pressure_series(b, inv.z_of_p);
}

/// Invert p = 2 sum_{n=1}^{N} n b_n z^n for z(p) by the contraction
///   z <- p/(2d) - sum_{n=2}^{N} (n b_n / d) z^n,
/// iterated from z = 0; each pass gains at least one exact order. The
/// defining relation is re-checked exactly through the working order before
/// anything derived is returned.
inline MayerInversion invert_mayer(const BSequence& b) {
    int n = b.order();
    MayerInversion out(n);

    Series<MultiPoly> lead(Var::p, n);
    lead.set_coeff(1, MultiPoly::d_pow(-1, Rational(1, 2)));
    Series<MultiPoly> z(Var::p, n);
    for (int pass = 0; pass < n; ++pass) {
        Series<MultiPoly> acc = lead;
        Series<MultiPoly> z_pow = z * z;
        for (int k = 2; k <= n; ++k) {
            Series<MultiPoly> t = z_pow;
            t.scale_by(b.at(k) * MultiPoly::d_pow(-1, Rational(k)));
            acc -= t;
            if (k < n) z_pow *= z;
        }
        if (acc == z) break;
        z = acc;
    }

    // 2 sum_n n b_n z^n must reproduce p exactly through the order.
    Series<MultiPoly> density(Var::p, n);
    Series<MultiPoly> z_pow = z;
    for (int k = 1; k <= n; ++k) {
        Series<MultiPoly> t = z_pow;
        t.scale_by(b.at(k) * Rational(2 * k));
        density += t;
        if (k < n) z_pow *= z;
    }
    Series<MultiPoly> p_series(Var::p, n);
    p_series.set_coeff(1, MultiPoly(Rational(1)));
    if (!(density == p_series))
        throw InternalConsistencyError("reversion failed to reproduce the density relation");

    out.z_of_p = z;
    Series<MultiPoly> scaled = z; // 2d z / p - 1
    scaled.scale_by(MultiPoly::d_pow(1, Rational(2)));
    Series<MultiPoly> one(Var::p, n);
    one.set_coeff(0, MultiPoly(Rational(1)));
    out.f_factor = scaled.shift_div(1) - one;
    out.pressure = pressure_series(b, z);
    return out;
}

/// Second form of the interaction part: series in p,
///   Q = (1/2)(2 (1-p) log(1-p) + p) + P - (p/2) log(1 + F)
/// with P the pressure sum and F the scaled-activity factor. The constant
/// and linear coefficients vanish identically (asserted).
inline Series<MultiPoly> q2_second(const BSequence& b) {
    int n = b.order();
    MayerInversion inv = invert_mayer(b);

    // (1-p) log(1-p) + p/2 = -p/2 + sum_{k>=2} p^k / (k(k-1))
    Series<MultiPoly> q(Var::p, n);
    if (n >= 1) q.set_coeff(1, MultiPoly(Rational(-1, 2)));
    for (int k = 2; k <= n; ++k)
        q.set_coeff(k, MultiPoly(Rational(1, (long long)k * (k - 1))));

    q += inv.pressure;
    q -= inv.f_factor.log1p().mul_var_pow(1).scale(Rational(1, 2));
    if (!q.coeff(0).is_zero() || (n >= 1 && !q.coeff(1).is_zero()))
        throw InternalConsistencyError("second-form series must start at order two");
    return q;
}

/// Coefficients a'_k of the second form, k = 0..order (a'_0 = a'_1 = 0).
/// With a symbolic input sequence each a'_k is a Laurent polynomial in d and
/// a polynomial in b_2..b_k.
inline std::vector<MultiPoly> a_prime_coeffs(const BSequence& b) {
    Series<MultiPoly> q = q2_second(b);
    std::vector<MultiPoly> a(b.order() + 1);
    for (int k = 0; k <= b.order(); ++k) a[k] = q.coeff(k);
    return a;
}

} // namespace mdseries
