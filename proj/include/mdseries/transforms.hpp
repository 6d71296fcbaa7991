#pragma once

#include <vector>

#include "mdseries/errors.hpp"
#include "mdseries/lpoly.hpp"
#include "mdseries/multipoly.hpp"
#include "mdseries/series.hpp"

namespace mdseries {

/// Coefficient sequence b_1..b_N of the activity-side expansion. The leading
/// coefficient is structurally fixed: b_1 = d. Entries are polynomials in d
/// (and possibly in the symbols b_i / J_i when working symbolically).
class BSequence {
public:
    explicit BSequence(int order) : vals_(check(order) + 1) { vals_[1] = MultiPoly::d_pow(1); }

    /// b_i = the symbol b_i for every i >= 2 (b_1 stays d).
    static BSequence symbolic(int order) {
        BSequence s(order);
        for (int i = 2; i <= order; ++i) s.vals_[i] = MultiPoly::b(i);
        return s;
    }

    int order() const { return (int)vals_.size() - 1; }
    const MultiPoly& at(int i) const {
        check_range(i);
        return vals_[i];
    }
    void set(int i, MultiPoly v) {
        check_range(i);
        if (i == 1) throw UsageError("the first coefficient is fixed to d");
        vals_[i] = std::move(v);
    }

private:
    std::vector<MultiPoly> vals_;

    static int check(int order) {
        if (order < 1) throw UsageError("sequence order must be >= 1");
        return order;
    }
    void check_range(int i) const {
        if (i < 1 || i > order()) throw UsageError("sequence index out of range");
    }
};

/// Coefficient sequence J_1..J_N of the cluster-kernel side. The leading
/// coefficient is structurally fixed: J_1 = 0.
class JSequence {
public:
    explicit JSequence(int order) : vals_(check(order) + 1) {}

    /// J_i = the symbol J_i for every i >= 2 (J_1 stays 0).
    static JSequence symbolic(int order) {
        JSequence s(order);
        for (int i = 2; i <= order; ++i) s.vals_[i] = MultiPoly::j(i);
        return s;
    }

    int order() const { return (int)vals_.size() - 1; }
    const MultiPoly& at(int i) const {
        check_range(i);
        return vals_[i];
    }
    void set(int i, MultiPoly v) {
        check_range(i);
        if (i == 1) throw UsageError("the first coefficient is fixed to zero");
        vals_[i] = std::move(v);
    }

private:
    std::vector<MultiPoly> vals_;

    static int check(int order) {
        if (order < 1) throw UsageError("sequence order must be >= 1");
        return order;
    }
    void check_range(int i) const {
        if (i < 1 || i > order()) throw UsageError("sequence index out of range");
    }
};

/// exp(L * sum_{i=1}^{N} b_i (x/(2d))^i) as a series over polynomials in L.
inline Series<LControlled> weighted_exp_series(const BSequence& b) {
    int n = b.order();
    Series<LControlled> arg(Var::x, n);
    for (int i = 1; i <= n; ++i) {
        MultiPoly c = b.at(i) * MultiPoly::d_pow(-i, Rational(1, 2).pow(i));
        if (!c.is_zero()) arg.set_coeff(i, LControlled(LPoly::L_pow(1, c)));
    }
    return arg.exp();
}

/// The r-th cluster sum assembled from the coefficients of E:
///   S_r = sum_{m=0}^{r} E_m * falling_factorial(r, m)
///                       * (-1/(2(L-1)))^{r-m} / (r-m)!
/// Each summand keeps the controlled denominator shape.
inline LControlled cluster_sum(const Series<LControlled>& e, int r) {
    if (r < 1 || r > e.order()) throw UsageError("cluster sum index out of range");
    LControlled s;
    for (int m = 0; m <= r; ++m) {
        if (e.coeff(m).is_zero()) continue;
        int k = r - m;
        Rational c = Rational(-1, 2).pow(k) / Rational(factorial(k));
        s += e.coeff(m) * LControlled(falling_factorial(r, m) * c, 0, k);
    }
    return s;
}

/// Convenience form of the r-th cluster sum straight from a b-sequence.
inline LControlled s_r(int r, const BSequence& b) {
    if (r < 1 || r > b.order()) throw UsageError("cluster sum index exceeds sequence order");
    return cluster_sum(weighted_exp_series(b), r);
}

/// Forward transform output: the exact large-L limits together with the
/// finite-L rational functions they came from (index r, 1-based).
struct ForwardResult {
    JSequence jbar;
    std::vector<LControlled> finite_l;

    explicit ForwardResult(int order) : jbar(order), finite_l(order + 1) {}
};

/// Forward map b -> J: peel the coefficients J^L_r off the exponential
/// identity exp(L sum_i J^L_i x^i)|_r = S_r one order at a time, then take
/// the large-L limit of each. The r = 1 coefficient must vanish identically
/// (a builtin check that b_1 = d was wired through correctly).
inline ForwardResult jbar_from_b_full(const BSequence& b) {
    int n = b.order();
    ForwardResult out(n);
    Series<LControlled> e = weighted_exp_series(b);
    Series<LControlled> exp_j(Var::x, n);
    exp_j.set_coeff(0, RingOps<LControlled>::one());
    for (int r = 1; r <= n; ++r) {
        LControlled jl = (cluster_sum(e, r) - exp_j.coeff(r)).div_L();
        MultiPoly lim;
        try {
            lim = jl.limit_at_infinity();
        } catch (const DivergenceError& ex) {
            throw DivergenceError(std::string(ex.what()) + " (forward step r=" +
                                  std::to_string(r) + ")");
        }
        if (r == 1) {
            if (!jl.is_zero())
                throw InternalConsistencyError("first cluster coefficient must vanish when b_1 = d");
        } else {
            out.jbar.set(r, lim);
        }
        out.finite_l[r] = jl;
        if (r < n && !jl.is_zero()) {
            Series<LControlled> factor(Var::x, n);
            factor.set_coeff(r, jl.mul_L());
            exp_j *= factor.exp();
        }
    }
    return out;
}

inline JSequence jbar_from_b(const BSequence& b) { return jbar_from_b_full(b).jbar; }

/// Inverse map J -> b, one order at a time. At step r the unknown b_r enters
/// the r-th limit linearly with diagonal coefficient exactly (2d)^-r; that
/// coefficient is asserted, the linear equation is solved, and at the end a
/// full forward pass re-checks every target. Targets may carry b_i symbols
/// (they are treated as opaque constants): triangularity keeps the probe
/// symbol b_r unambiguous, and any contamination a hand-built target smuggles
/// into an earlier step is caught by the diagonal assertion or the re-check.
inline BSequence b_from_jbar(const JSequence& targets) {
    int n = targets.order();
    BSequence solved(n);
    for (int r = 2; r <= n; ++r) {
        BSequence probe(r);
        for (int i = 2; i < r; ++i) probe.set(i, solved.at(i));
        probe.set(r, MultiPoly::b(r));
        MultiPoly phi = jbar_from_b_full(probe).jbar.at(r);

        Symbol unknown = b_sym(r);
        if (phi.degree_in(unknown) > 1)
            throw InternalConsistencyError("inverse step " + std::to_string(r) +
                                           " is not linear in the unknown");
        MultiPoly diag = phi.coefficient_in(unknown, 1);
        if (!(diag == MultiPoly::d_pow(-r, Rational(1, 2).pow(r))))
            throw InternalConsistencyError("inverse step " + std::to_string(r) +
                                           " has an unexpected diagonal coefficient");
        MultiPoly rest = phi.coefficient_in(unknown, 0);
        solved.set(r, (targets.at(r) - rest) * MultiPoly::d_pow(r, Rational(2).pow(r)));
    }
    JSequence check = jbar_from_b(solved);
    for (int r = 2; r <= n; ++r)
        if (!(check.at(r) == targets.at(r)))
            throw InternalConsistencyError("inverse map failed to reproduce target " +
                                           std::to_string(r));
    return solved;
}

} // namespace mdseries
