// Forward and inverse maps between b-sequences and cluster-kernel sequences.
// The golden tables through order six are asserted exactly, in the factored
// form they are usually quoted in; structural invariants (triangularity,
// diagonal coefficients, scaling weight) are scanned at higher order.

#include <catch2/catch_amalgamated.hpp>

#include "mdseries/catalan.hpp"
#include "mdseries/transforms.hpp"

using namespace mdseries;

namespace {
MultiPoly D(int e) { return MultiPoly::d_pow(e); }
MultiPoly C(long long n, long long den = 1) { return MultiPoly::constant(Rational(n, den)); }
MultiPoly B(int i, int e = 1) { return MultiPoly::b(i, e); }
MultiPoly J(int i, int e = 1) { return MultiPoly::j(i, e); }
} // namespace

TEST_CASE("sequence containers fix their first entry") {
    BSequence b(4);
    CHECK(b.at(1) == D(1));
    CHECK(b.at(3).is_zero());
    CHECK_THROWS_AS(b.set(1, C(2)), UsageError);
    JSequence j(4);
    CHECK(j.at(1).is_zero());
    CHECK_THROWS_AS(j.set(1, C(1)), UsageError);
    CHECK_THROWS_AS(BSequence(0), UsageError);
}

TEST_CASE("order-one cluster sum vanishes identically") {
    BSequence b = BSequence::symbolic(3);
    CHECK(s_r(1, b).is_zero());
}

TEST_CASE("forward map golden table through order six") {
    JSequence j = jbar_from_b(BSequence::symbolic(6));
    CHECK(j.at(2) == C(-1, 4) * D(-2) * (C(-2) * D(2) - B(2)));
    CHECK(j.at(3) == C(1, 24) * D(-3) * (C(3) * B(3) + C(24) * D(1) * B(2) + C(28) * D(3)));
    CHECK(j.at(4) == C(-1, 16) * D(-4) *
                         (C(-12) * D(1) * B(3) - C(28) * D(4) - B(4) - C(40) * D(2) * B(2)));
    CHECK(j.at(5) == C(1, 160) * D(-5) *
                         (C(5) * B(5) + C(480) * D(3) * B(2) + C(48) * D(5) - C(80) * D(1) * B(2, 2) +
                          C(420) * D(2) * B(3) + C(80) * D(1) * B(4)));
    CHECK(j.at(6) == C(-1, 192) * D(-6) *
                         (C(-1056) * D(3) * B(3) + C(1584) * D(4) * B(2) - C(432) * D(2) * B(4) +
                          C(1760) * D(6) - C(3) * B(6) + C(144) * D(1) * B(3) * B(2) +
                          C(1056) * D(2) * B(2, 2) - C(60) * D(1) * B(5)));
}

TEST_CASE("forward map constants when the higher couplings vanish") {
    JSequence j = jbar_from_b(BSequence(6));
    CHECK(j.at(2) == C(1, 2));
    CHECK(j.at(3) == C(7, 6));
    CHECK(j.at(4) == C(7, 4));
    CHECK(j.at(5) == C(3, 10));
    CHECK(j.at(6) == C(-55, 6));
}

TEST_CASE("inverse map golden table through order six") {
    BSequence b = b_from_jbar(JSequence::symbolic(6));
    CHECK(b.at(2) == D(2) * (C(4) * J(2) - C(2)));
    CHECK(b.at(3) == C(4, 3) * D(3) * (C(5) - C(24) * J(2) + C(6) * J(3)));
    CHECK(b.at(4) == C(2) * D(4) * (C(-14) + C(8) * J(4) + C(112) * J(2) - C(48) * J(3)));
    CHECK(b.at(5) == C(16, 5) * D(5) *
                         (C(42) + C(10) * J(5) - C(480) * J(2) - C(80) * J(4) + C(270) * J(3) +
                          C(80) * J(2, 2)));
    CHECK(b.at(6) == C(16, 3) * D(6) *
                         (C(-132) - C(120) * J(5) + C(1980) * J(2) + C(528) * J(4) - C(1320) * J(3) -
                          C(1056) * J(2, 2) + C(12) * J(6) + C(288) * J(3) * J(2)));
}

TEST_CASE("round trips are exact at order eight") {
    BSequence b = BSequence::symbolic(8);
    BSequence back = b_from_jbar(jbar_from_b(b));
    for (int i = 2; i <= 8; ++i) CHECK(back.at(i) == b.at(i));

    JSequence j = JSequence::symbolic(8);
    JSequence jback = jbar_from_b(b_from_jbar(j));
    for (int i = 2; i <= 8; ++i) CHECK(jback.at(i) == j.at(i));
}

TEST_CASE("the forward map annihilates the signed Catalan couplings") {
    JSequence j = jbar_from_b(catalan_b(10));
    for (int r = 2; r <= 10; ++r) {
        INFO("r = " << r);
        CHECK(j.at(r).is_zero());
    }
}

TEST_CASE("diagonal structure: b_r enters order r with weight (2d)^-r") {
    JSequence j = jbar_from_b(BSequence::symbolic(8));
    for (int r = 2; r <= 8; ++r) {
        CHECK(j.at(r).coefficient_in(b_sym(r), 1) == MultiPoly::d_pow(-r, Rational(1, 2).pow(r)));
        // and no later coupling appears at an earlier order
        CHECK(j.at(r).max_index(SymbolKind::b) <= r);
    }
}

TEST_CASE("kernel coefficients are scaling-invariant in the natural weight") {
    // assigning weight 1 to d and weight i to b_i, every monomial of the
    // r-th kernel coefficient has total weight zero
    JSequence j = jbar_from_b(BSequence::symbolic(8));
    for (int r = 2; r <= 8; ++r) {
        for (const auto& [mono, coeff] : j.at(r).terms()) {
            long long weight = mono.d_exp;
            for (const auto& [idx, e] : mono.b_exps) weight += static_cast<long long>(idx) * e;
            INFO("r = " << r << ", monomial weight " << weight);
            CHECK(weight == 0);
        }
    }
    // equivalently each inverse-map coefficient b_r carries pure weight r
    BSequence b = b_from_jbar(JSequence::symbolic(8));
    for (int r = 2; r <= 8; ++r)
        for (const auto& [mono, coeff] : b.at(r).terms()) {
            CHECK(mono.d_exp == r);
            CHECK(mono.b_exps.empty());
        }
}

TEST_CASE("signed Catalan couplings have their quoted closed form") {
    CatalanData data(6);
    CHECK(data.btilde.at(2) == C(-2) * D(2));
    CHECK(data.btilde.at(3) == C(20, 3) * D(3));
    CHECK(data.btilde.at(4) == C(-28) * D(4));
    CHECK(data.btilde.at(5) == C(672, 5) * D(5));
    CHECK(data.btilde.at(6) == C(-704) * D(6));
    // the d-weight-normalized sum they feed: leading coefficients
    Series<Rational> e = e_series(8);
    CHECK(e.coeff(0) == Rational(0));
    CHECK(e.coeff(1) == Rational(1, 2));
    CHECK(e.coeff(2) == Rational(-1, 2));
    CHECK(e.coeff(3) == Rational(5, 6));
    // every coefficient is (-1)^(i+1) C_i / (2i)
    for (int i = 1; i <= 8; ++i)
        CHECK(e.coeff(i) == Rational(i % 2 == 0 ? -1 : 1, 2 * i) * catalan_number(i));
    CHECK(e == e_closed_form(8));
}

TEST_CASE("inverse map treats foreign symbols in targets as constants") {
    // a target built from b-symbols is still invertible: the solved coupling
    // absorbs them
    JSequence j(2);
    j.set(2, B(2));
    BSequence solved = b_from_jbar(j);
    CHECK(solved.at(2) == (B(2) - C(1, 2)) * D(2) * C(4));
    CHECK(jbar_from_b(solved).at(2) == B(2));
}

TEST_CASE("inverse map flags targets that contaminate a later probe") {
    // J_2 depending on b_3 leaks into the order-three probe and breaks the
    // expected diagonal
    JSequence j(3);
    j.set(2, B(3));
    CHECK_THROWS_AS(b_from_jbar(j), InternalConsistencyError);
}

TEST_CASE("finite-order data accompanies the limits") {
    ForwardResult full = jbar_from_b_full(BSequence::symbolic(4));
    CHECK(full.finite_l[1].is_zero());
    for (int r = 2; r <= 4; ++r) {
        CHECK_FALSE(full.finite_l[r].is_zero());
        CHECK(full.finite_l[r].limit_at_infinity() == full.jbar.at(r));
    }
}
