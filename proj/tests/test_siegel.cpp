#include "doctest.h"
#include "kato/siegel.hpp"

using namespace kato;

TEST_CASE("g_{0,c}: product form = closed form") {
    for (long c : {7L, 11L})
        for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {1, 3}, {0, 2}, {3, 4}})
            CHECK(g0c_qexp(c, 5, a, b, 3).agrees_with(g0c_closed_form(c, 5, a, b, 3)));
}

TEST_CASE("norm compatibility") {
    UnitQExp g = g0c_qexp(7, 3, 1, 2, 3);
    CHECK(norm_Na(g0c_unit(7), 2, 3, 1, 2, 3).agrees_with(g));
}

TEST_CASE("negative control: theta itself is not norm compatible") {
    UnitQExp t = theta_qexp(3, 1, 2, 3);
    CHECK(!norm_Na(theta_unit(), 2, 3, 1, 2, 3).agrees_with(t));
}

TEST_CASE("D_2^r log is a homomorphism") {
    QzUnit f = theta_unit(), g = theta_unit().dilate(3).pow(-2);
    Q x = qmake(1, 5), y = qmake(2, 5);
    for (long r = 1; r <= 3; ++r) {
        QExpansion lhs = (f * g).d2log(r, x, y, 3);
        CHECK(lhs.agrees_with(f.d2log(r, x, y, 3) + g.d2log(r, x, y, 3)));
        CHECK(f.pow(4).d2log(r, x, y, 3).agrees_with(f.d2log(r, x, y, 3) * Q(4)));
    }
}

TEST_CASE("r ladder against the c-variant series") {
    for (long r = 1; r <= 4; ++r) {
        QExpansion d = d2log_rc_theta(7, r, 5, 2, 3, 4);
        QExpansion e = -c_variant(EisMode::E, 7, r, FracClass(2, 5), FracClass(3, 5), 4).series;
        CHECK(d.agrees_with(e));
    }
}

TEST_CASE("c divisible by N is undefined") {
    CHECK_THROWS(d2log_rc_theta(5, 1, 5, 1, 0, 3));
}
