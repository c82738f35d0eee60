#include "doctest.h"
#include "kato/cycring.hpp"

using namespace kato;

TEST_CASE("zeta_N^N = 1 and the reduction mod Phi_N") {
    for (long N : {1, 2, 3, 4, 5, 6, 12, 25}) {
        CycNumber z = CycNumber::zeta(N, 1), acc(1);
        for (long i = 0; i < N; ++i) acc *= z;
        CHECK(acc == CycNumber(1));
        // sum of all N-th roots vanishes for N > 1
        CycNumber s = CycNumber::zero(N);
        for (long i = 0; i < N; ++i) s += CycNumber::zeta(N, i);
        CHECK(s.is_zero() == (N > 1));
    }
}

TEST_CASE("field operations") {
    CycNumber x = CycNumber::zeta(5, 1) + CycNumber(qmake(2, 3));
    CycNumber y = CycNumber::zeta(5, 3) - CycNumber(1);
    CHECK(x * x.inverse() == CycNumber(1));
    CHECK((x + y) * y == x * y + y * y);
    CHECK((x / y) * y == x);
    // mixed conductors go to the lcm
    CycNumber w = CycNumber::zeta(3, 1) * CycNumber::zeta(4, 1);
    CHECK(w == CycNumber::zeta(12, 7));
}

TEST_CASE("root() picks the smallest conductor") {
    CHECK(CycNumber::root(FracClass(2, 4)) == CycNumber(-1));
    CHECK(CycNumber::root(FracClass(0, 7)) == CycNumber(1));
    CHECK(CycNumber::root(FracClass(3, 6)).is_rational());
}

TEST_CASE("galois action is a ring map") {
    CycNumber x = CycNumber::zeta(7, 2) + CycNumber(3), y = CycNumber::zeta(7, 5);
    for (long d : {1, 2, 3, 6}) {
        CHECK(galois_sigma(d, x * y) == galois_sigma(d, x) * galois_sigma(d, y));
        CHECK(galois_sigma(d, CycNumber::zeta(7, 1)) == CycNumber::zeta(7, d));
    }
}

TEST_CASE("p-adic valuation") {
    for (long p : {3, 5, 7}) {
        CycNumber pi = CycNumber(1) - CycNumber::zeta(p, 1);
        CHECK(padic_valuation(pi, p) == qmake(1, p - 1));
        CHECK(padic_valuation(CycNumber(qmake(p * p, 2)), p) == Q(2));
        CHECK(!padic_valuation(CycNumber::zero(p), p));
    }
    CycNumber pi25 = CycNumber(1) - CycNumber::zeta(25, 1);
    CHECK(padic_valuation(pi25, 5) == qmake(1, 20));
}

TEST_CASE("norm") {
    CHECK(cyc_norm(CycNumber(1) - CycNumber::zeta(5, 1)) == Q(5));
    CHECK(cyc_norm(CycNumber(qmake(1, 2))) == qmake(1, 2));
}
