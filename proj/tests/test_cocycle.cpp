#include "doctest.h"
#include "kato/cocycle.hpp"

using namespace kato;

namespace {
OneCochain sample_cochain(int D, long seed) {
    OneCochain Qc;
    Qc.degree_bound = D;
    for (int a = 0; a <= D; ++a)
        for (int b = 0; a + b <= D; ++b) {
            if (a + b < 2) continue;
            Vec x(4);
            for (long i = 0; i < 4; ++i) x[i] = qmake((a * 7 + b * 3 + i + seed) % 11 - 5, 1 + (i + a) % 3);
            Qc.coeffs[{a, b}] = x;
        }
    return Qc;
}
}  // namespace

TEST_CASE("module derivations satisfy [d2, d1] = d1") {
    CHECK(test_module4(5, 1).bracket_ok());
    CHECK(test_module4(3, 2).bracket_ok());
    CHECK(toy_module(3, 3, 4, 3).bracket_ok());
}

TEST_CASE("coboundaries are cocycles") {
    MatrixModule V = test_module4(5, 1);
    CHECK(cocycle_verify(V, coboundary(V, sample_cochain(5, 1), 5)).ok);
}

TEST_CASE("negative control: the bare uy term is not a cocycle") {
    MatrixModule V = test_module4(5, 1);
    PolyCocycle2 c;
    c.degree_bound = 5;
    c.add({1, 0, 0, 1}, Vec{0, 1, 0, 0});
    VerifyResult r = cocycle_verify(V, c);
    CHECK(!r.ok);
    CHECK(r.first_bad_degree == 3);
}

TEST_CASE("uy_lift is a cocycle with the requested degree-2 part") {
    MatrixModule V = test_module4(3, 1);
    Vec w = {qmake(1, 2), 0, Q(3), qmake(-2, 9)};
    PolyCocycle2 c = uy_lift(V, w, 6);
    CHECK(cocycle_verify(V, c).ok);
    CHECK(c.coeff({1, 0, 0, 1}, 4) == w);
    CHECK(c.degree_part(2).coeffs.size() == 1);
}

TEST_CASE("reduction recovers delta^2 and reconstructs the cocycle") {
    MatrixModule V = test_module4(5, 2);
    Vec w = {Q(1), qmake(2, 5), Q(0), Q(-4)};
    PolyCocycle2 c = uy_lift(V, w, 5);
    c -= coboundary(V, sample_cochain(5, 3), 5);
    Reduction red = reduce_analytic_cocycle(V, c);
    CHECK(red.delta2 == w);
    PolyCocycle2 back = uy_lift(V, red.delta2, 5);
    for (const auto &Qn : red.Q_list) back -= coboundary(V, Qn, 5);
    back -= c;
    CHECK(back.is_zero());
}

TEST_CASE("reduction refuses degree < 2") {
    MatrixModule V = test_module4(5, 1);
    PolyCocycle2 c;
    c.degree_bound = 4;
    c.add({1, 0, 0, 0}, Vec{1, 0, 0, 0});
    CHECK_THROWS(reduce_analytic_cocycle(V, c));
}

TEST_CASE("valuation audit after the precondition shift") {
    for (long m : {1L, 2L}) {
        MatrixModule V = test_module4(3, m);
        PolyCocycle2 c = uy_lift(V, Vec{qmake(1, 9), 1, 0, 2}, 6);
        c -= coboundary(V, sample_cochain(6, 5), 6);
        long N = precondition_shift(V, c, m);
        PolyCocycle2 cs = c.scaled(qpow(Q(3), N));
        AuditReport ar = valuation_audit(V, cs, reduce_analytic_cocycle(V, cs).Q_list, m);
        CHECK(ar.precondition_ok);
        CHECK(ar.bound_ok);
        CHECK(ar.checked > 0);
        if (N > 0) {
            PolyCocycle2 under = c.scaled(qpow(Q(3), N - 1));
            CHECK(!valuation_audit(V, under, reduce_analytic_cocycle(V, under).Q_list, m).precondition_ok);
        }
    }
}

TEST_CASE("cup cocycle on the toy module") {
    long M = 3, Vd = 4, S = 3;
    MatrixModule V = toy_module(M, 3, Vd, S);
    auto mul = [&](const Vec &a, const Vec &b) { return toy_module_mul(Vd, S, a, b); };
    Vec A(V.dim), B(V.dim);
    // index v S + s is q~^v t^s
    A[S] = 1;
    B[2 * S] = 2;
    B[S + 1] = qmake(1, 3);
    PolyCocycle2 c = cup_cocycle(V, mul, A, B, 5);
    CHECK(cocycle_verify(V, c).ok);
}
