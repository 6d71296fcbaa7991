// L-polynomial layer: falling-factorial products, controlled-denominator
// rational functions in L, exact large-L limits. The heavyweight check is a
// differential oracle: the whole forward pipeline re-implemented at concrete
// integer L over plain power series (no L-algebra, no limits) must agree with
// the symbolic finite-L results evaluated at that same L.

#include <catch2/catch_amalgamated.hpp>

#include "mdseries/transforms.hpp"

using namespace mdseries;

TEST_CASE("lpoly basics") {
    LPoly L = LPoly::L_pow(1);
    LPoly p = L * L - LPoly(MultiPoly::constant(Rational(1)));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == MultiPoly::constant(Rational(-1)));
    CHECK(p.coeff(1).is_zero());
    CHECK(p.eval(Rational(3)) == MultiPoly::constant(Rational(8)));
    CHECK((p - p).is_zero());
    CHECK(LPoly().degree() == -1);
}

TEST_CASE("linear products expand correctly") {
    // (L-1)L = L^2 - L
    LPoly q = LPoly::linear_product(-1, 2);
    CHECK(q.degree() == 2);
    CHECK(q.coeff(2) == MultiPoly::constant(Rational(1)));
    CHECK(q.coeff(1) == MultiPoly::constant(Rational(-1)));
    CHECK(q.coeff(0).is_zero());
    CHECK(LPoly::linear_product(5, 0) == LPoly(MultiPoly::constant(Rational(1))));
}

TEST_CASE("falling factorial products") {
    // r=2, p=1: product of (L-3)(L-2) = L^2 - 5L + 6
    LPoly f = falling_factorial(2, 1);
    CHECK(f.degree() == 2);
    CHECK(f.coeff(1) == MultiPoly::constant(Rational(-5)));
    CHECK(f.coeff(0) == MultiPoly::constant(Rational(6)));
    // p=r is the empty product
    CHECK(falling_factorial(4, 4) == LPoly(MultiPoly::constant(Rational(1))));
    // evaluated at L = 2r the product telescopes to (2(r-p))!
    for (int r = 1; r <= 5; ++r)
        for (int p = 0; p <= r; ++p)
            CHECK(falling_factorial(r, p).eval(Rational(2 * r)) ==
                  MultiPoly::constant(Rational(BigInt(factorial(2 * (r - p))), BigInt(1))));
    CHECK_THROWS_AS(falling_factorial(3, 4), UsageError);
    CHECK_THROWS_AS(falling_factorial(3, -1), UsageError);
}

TEST_CASE("controlled fractions add over common denominators") {
    // L/(L-1) + 1/L = (L^2 + L - 1) / (L(L-1))
    LControlled x(LPoly::L_pow(1), 0, 1);
    LControlled y(LPoly(MultiPoly::constant(Rational(1))), 1, 0);
    LControlled s = x + y;
    // cross-multiplied equality against the expected fraction
    LPoly num = LPoly::L_pow(2) + LPoly::L_pow(1) - LPoly(MultiPoly::constant(Rational(1)));
    CHECK(s == LControlled(num, 1, 1));
    CHECK(s.eval_at(Rational(3)) == MultiPoly::constant(Rational(11, 6)));
    CHECK_THROWS_AS(s.eval_at(Rational(1)), UsageError); // pole at L = 1
    CHECK_THROWS_AS(s.eval_at(Rational(0)), UsageError); // pole at L = 0
}

TEST_CASE("large-L limits: degree drop, balance, divergence") {
    LPoly L = LPoly::L_pow(1);
    MultiPoly c2 = MultiPoly::b(2, 1);
    // degree 1 over degree 2 -> 0
    CHECK(LControlled(L, 1, 1).limit_at_infinity().is_zero());
    // balanced degrees -> ratio of leading coefficients
    CHECK(LControlled(L * L * c2 + L, 1, 1).limit_at_infinity() == c2);
    // numerator degree too high -> divergence
    CHECK_THROWS_AS(LControlled(L * L * L, 1, 1).limit_at_infinity(), DivergenceError);
    // zero numerator -> 0 regardless of controls
    CHECK(LControlled(LPoly(), 3, 2).limit_at_infinity().is_zero());
}

TEST_CASE("equality is cross-multiplied, not structural") {
    // L/(L-1) written two ways
    LControlled a(LPoly::L_pow(1), 0, 1);
    LControlled b(LPoly::L_pow(1) * LPoly::L_pow(1), 1, 1); // L^2 / (L (L-1))
    CHECK(a == b);
    CHECK_FALSE(a == LControlled(LPoly::L_pow(1, MultiPoly::constant(Rational(2))), 0, 1));
}

namespace {

/// Independent re-derivation of the forward pipeline at one concrete integer
/// L value, using nothing but truncated power series over MultiPoly: build
/// E = exp(L sum_i b_i (x/2d)^i), peel S_r with numerically evaluated
/// falling-factorial weights, divide by the concrete L. No LPoly, no
/// LControlled, no limits — so agreement with the symbolic route exercises
/// the whole L-algebra layer.
std::vector<MultiPoly> concrete_l_pipeline(const BSequence& b, long long l0) {
    int n = b.order();
    Rational L(l0);
    Series<MultiPoly> arg(Var::x, n);
    for (int i = 1; i <= n; ++i) {
        MultiPoly c = b.at(i) * MultiPoly::d_pow(-i, Rational(1, 2).pow(i));
        c.scale(L);
        arg.set_coeff(i, c);
    }
    Series<MultiPoly> e = arg.exp();

    auto ff_at = [&](int r, int m) {
        Rational prod(1);
        for (int jj = 0; jj < 2 * (r - m); ++jj) prod = prod * (L + Rational(1 - 2 * r + jj));
        return prod;
    };

    std::vector<MultiPoly> out(n + 1);
    Series<MultiPoly> exp_j(Var::x, n);
    exp_j.set_coeff(0, MultiPoly::constant(Rational(1)));
    Rational lm1 = L - Rational(1);
    for (int r = 1; r <= n; ++r) {
        MultiPoly s;
        for (int m = 0; m <= r; ++m) {
            int k = r - m;
            Rational w = ff_at(r, m) * Rational(-1, 2).pow(k) / Rational(BigInt(factorial(k)), BigInt(1)) /
                         lm1.pow(k);
            MultiPoly term = e.coeff(m);
            term.scale(w);
            s += term;
        }
        MultiPoly jl = s - exp_j.coeff(r);
        jl.scale(Rational(1) / L);
        out[r] = jl;
        if (r < n && !jl.is_zero()) {
            Series<MultiPoly> factor(Var::x, n);
            MultiPoly scaled = jl;
            scaled.scale(L);
            factor.set_coeff(r, scaled);
            exp_j *= factor.exp();
        }
    }
    return out;
}

} // namespace

TEST_CASE("differential oracle: symbolic finite-L matches concrete-L pipeline") {
    BSequence b = BSequence::symbolic(6);
    ForwardResult full = jbar_from_b_full(b);
    for (long long l0 : {5LL, 7LL, 11LL, 13LL}) {
        std::vector<MultiPoly> concrete = concrete_l_pipeline(b, l0);
        for (int r = 1; r <= 6; ++r) {
            INFO("L = " << l0 << ", r = " << r);
            CHECK(full.finite_l[r].eval_at(Rational(l0)) == concrete[r]);
        }
    }
}

TEST_CASE("finite-L values approach the limit monotonically like 1/L") {
    BSequence b(5);
    for (int i = 2; i <= 5; ++i) b.set(i, MultiPoly::constant(Rational(1)));
    ForwardResult full = jbar_from_b_full(b);
    std::map<int, Rational> bv{{2, Rational(1)}, {3, Rational(1)}, {4, Rational(1)}, {5, Rational(1)}};
    for (int r = 2; r <= 5; ++r) {
        Rational limit = full.jbar.at(r).eval(Rational(1), bv, {});
        Rational prev_gap;
        bool first = true;
        Rational first_gap, last_gap;
        for (long long l : {1000LL, 10000LL, 100000LL, 1000000LL}) {
            Rational val = full.finite_l[r].eval_at(Rational(l)).eval(Rational(1), bv, {});
            Rational gap = (val - limit).abs();
            if (first) {
                first_gap = gap;
                first = false;
            } else {
                CHECK(gap < prev_gap);
            }
            prev_gap = gap;
            last_gap = gap;
        }
        // three decades of L must buy at least two decades of accuracy
        CHECK(last_gap * Rational(100) < first_gap);
    }
}
