#pragma once

#include <vector>

#include "mdseries/errors.hpp"
#include "mdseries/multipoly.hpp"
#include "mdseries/series.hpp"
#include "mdseries/transforms.hpp"

namespace mdseries {

/// Solved occupation system: the self-consistent weights alpha_k (series in
/// p, truncated at the working order) together with the two auxiliary
/// combinations they are coupled through,
///   u = 2 sum_k k alpha_k,   v = u / p.
struct AlphaSystem {
    std::vector<Series<MultiPoly>> alpha; // index k = 2..order; lower slots are zero
    Series<MultiPoly> u;
    Series<MultiPoly> v;
    int sweeps = 0; // sweeps needed to stabilize

    explicit AlphaSystem(int order)
        : u(Var::p, order), v(Var::p, order) {
        alpha.assign(order + 1, Series<MultiPoly>(Var::p, order));
    }
};

/// Solve the coupled fixed-point system
///   alpha_k = J_k p^k (1 - u)^{-2k} (1 - v)^k
/// by full-vector sweeps. Each sweep extends the correct p-order of every
/// alpha_k by at least one, so the system stabilizes within order sweeps; a
/// sweep that changes nothing ends the iteration.
inline AlphaSystem alpha_fixed_point(const JSequence& j) {
    int n = j.order();
    AlphaSystem sys(n);
    Series<MultiPoly> one(Var::p, n);
    one.set_coeff(0, MultiPoly(Rational(1)));

    int max_sweeps = n + 1;
    bool stable = false;
    for (int sweep = 1; sweep <= max_sweeps && !stable; ++sweep) {
        sys.sweeps = sweep;
        Series<MultiPoly> u(Var::p, n);
        for (int k = 2; k <= n; ++k) {
            Series<MultiPoly> t = sys.alpha[k];
            u += t.scale(Rational(2 * k));
        }
        Series<MultiPoly> v = u.shift_div(1);
        Series<MultiPoly> inv_u = (one - u).inverse(); // (1-u)^{-1}
        Series<MultiPoly> inv_u2 = inv_u * inv_u;
        Series<MultiPoly> one_minus_v = one - v;

        // running powers: pw_u = (1-u)^{-2k}, pw_v = (1-v)^k
        Series<MultiPoly> pw_u = inv_u2 * inv_u2;
        Series<MultiPoly> pw_v = one_minus_v * one_minus_v;
        stable = true;
        for (int k = 2; k <= n; ++k) {
            Series<MultiPoly> next = (pw_u * pw_v).mul_var_pow(k);
            next.scale_by(j.at(k));
            if (!(next == sys.alpha[k])) {
                stable = false;
                sys.alpha[k] = next;
            }
            if (k < n) {
                pw_u *= inv_u2;
                pw_v *= one_minus_v;
            }
        }
        sys.u = u;
        sys.v = v;
    }
    if (!stable) throw InternalConsistencyError("occupation fixed point failed to stabilize");

    // Recompute u/v from the converged weights (the stored pair lags one sweep).
    Series<MultiPoly> u(Var::p, n);
    for (int k = 2; k <= n; ++k) {
        Series<MultiPoly> t = sys.alpha[k];
        u += t.scale(Rational(2 * k));
    }
    sys.u = u;
    sys.v = u.shift_div(1);
    return sys;
}

/// First form of the interaction part: series in p,
///   Q = sum_k alpha_k + [log(1-u) + u] - (p/2) [log(1-v) + v].
/// The constant and linear coefficients vanish identically (asserted).
inline Series<MultiPoly> q2_first(const JSequence& j) {
    int n = j.order();
    AlphaSystem sys = alpha_fixed_point(j);
    Series<MultiPoly> q(Var::p, n);
    for (int k = 2; k <= n; ++k) q += sys.alpha[k];
    q += (-sys.u).log1p() + sys.u;
    Series<MultiPoly> w = (-sys.v).log1p() + sys.v;
    q -= w.mul_var_pow(1).scale(Rational(1, 2));
    if (!q.coeff(0).is_zero() || (n >= 1 && !q.coeff(1).is_zero()))
        throw InternalConsistencyError("first-form series must start at order two");
    return q;
}

/// Coefficients a_k of the first form, k = 0..order (a_0 = a_1 = 0). With a
/// symbolic input sequence each a_k is a polynomial in J_2..J_k.
inline std::vector<MultiPoly> a_coeffs(const JSequence& j) {
    Series<MultiPoly> q = q2_first(j);
    std::vector<MultiPoly> a(j.order() + 1);
    for (int k = 0; k <= j.order(); ++k) a[k] = q.coeff(k);
    return a;
}

} // namespace mdseries
