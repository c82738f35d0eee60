#include "doctest.h"
#include "kato/eisenstein.hpp"

using namespace kato;

TEST_CASE("E4 at the origin") {
    QExpansion E4 = E_series(4, FracClass(), FracClass(), 4).series;
    CHECK(E4.coeff(0) == CycNumber(qmake(1, 120)));
    CHECK(E4.coeff(1) == CycNumber(2));
    CHECK(E4.coeff(2) == CycNumber(18));
    CHECK(E4.coeff(3) == CycNumber(56));
}

TEST_CASE("c = 1 variants vanish") {
    for (long k = 1; k <= 4; ++k) {
        CHECK(c_variant(EisMode::E, 1, k, FracClass(1, 3), FracClass(1, 2), 3).series.empty());
        CHECK(c_variant(EisMode::F, 1, k, FracClass(2, 5), FracClass(0, 1), 3).series.empty());
    }
}

TEST_CASE("Etilde vanishes at the origin") {
    CHECK(Etilde_series(FracClass(), FracClass(), 5).series.empty());
}

TEST_CASE("negating (alpha, beta) multiplies by (-1)^k") {
    FracClass a(1, 5), b(2, 5);
    for (long k = 1; k <= 4; ++k) {
        QExpansion e = E_series(k, a, b, 4).series, f = E_series(k, -a, -b, 4).series;
        if (k == 2) {
            e = Etilde_series(a, b, 4).series;
            f = Etilde_series(-a, -b, 4).series;
        }
        CHECK(e.agrees_with(k % 2 ? -f : f));
    }
}

TEST_CASE("E1 = F1") {
    FracClass a(1, 3), b(2, 3);
    CHECK(E_series(1, a, b, 5).series.agrees_with(F_series(1, a, b, 5).series));
}

TEST_CASE("negative control: E3 != F3 away from symmetric points") {
    FracClass a(1, 5), b(2, 5);
    CHECK(!E_series(3, a, b, 3).series.agrees_with(F_series(3, a, b, 3).series));
}

TEST_CASE("weight must be positive") {
    CHECK_THROWS(E_series(0, FracClass(), FracClass(), 3));
}
