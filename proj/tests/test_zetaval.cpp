#include "doctest.h"
#include "kato/zetaval.hpp"

using namespace kato;

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli_number(0) == Q(1));
    CHECK(bernoulli_number(1) == qmake(-1, 2));
    CHECK(bernoulli_number(2) == qmake(1, 6));
    CHECK(bernoulli_number(4) == qmake(-1, 30));
    CHECK(bernoulli_number(12) == qmake(-691, 2730));
    CHECK(bernoulli_number(7) == Q(0));
}

TEST_CASE("Bernoulli polynomials: B_k(1-x) = (-1)^k B_k(x)") {
    for (long k = 1; k <= 6; ++k)
        for (long n = 1; n < 7; ++n) {
            Q x = qmake(n, 7);
            Q s = k % 2 ? Q(-1) : Q(1);
            CHECK(bernoulli_poly(k, 1 - x) == s * bernoulli_poly(k, x));
        }
}

TEST_CASE("Hurwitz values at non-positive integers") {
    // zeta(x, 1-k) = -B_k(x) / k, and x = 0 is read as 1
    for (long k = 1; k <= 8; ++k) {
        CHECK(hurwitz_neg(FracClass(0, 1), k) == -bernoulli_poly(k, 1) / k);
        CHECK(hurwitz_neg(FracClass(2, 5), k) == -bernoulli_poly(k, qmake(2, 5)) / k);
    }
    CHECK(hurwitz_neg(FracClass(0, 1), 1) == qmake(-1, 2));
    // distribution: sum_i zeta((x+i)/f, s) = f^{s} zeta(x, s) at s = 1-k
    for (long k = 1; k <= 4; ++k) {
        Q s = 0;
        for (long i = 0; i < 3; ++i) s += hurwitz_neg(FracClass::from_q(qmake(1 + 2 * i, 6)), k);
        CHECK(s == qpow(Q(3), 1 - k) * hurwitz_neg(FracClass(1, 2), k));
    }
}

TEST_CASE("Lerch values are rational at beta = 0") {
    CHECK(lerch_neg(FracClass(0, 1), 2).is_rational());
    CHECK(antisym_lerch0(FracClass(0, 1)).is_zero());
    CHECK(!antisym_lerch0(FracClass(1, 3)).is_zero());
}
