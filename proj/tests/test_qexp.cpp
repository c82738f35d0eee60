#include "doctest.h"
#include "kato/json_io.hpp"

using namespace kato;

namespace {
QExpansion sample(long den, long seed, const Q &prec) {
    QExpansion f(den, prec);
    for (long e = 0; qmake(e, den) < prec; ++e)
        f.add_key(e, CycNumber::zeta(5, (e * seed) % 5) * qmake(e + seed, 3));
    return f;
}
}  // namespace

TEST_CASE("product precision is the min of the relative ones") {
    QExpansion f = sample(2, 1, 3), g = sample(3, 2, 2);
    QExpansion h = f * g;
    REQUIRE(h.precision());
    CHECK(*h.precision() == Q(2));
    CHECK(h.exp_denom() == 6);
}

TEST_CASE("parallel product equals serial product") {
    QExpansion f = sample(3, 1, 6), g = sample(2, 4, 6);
    QExpansion a = qexp_mul_serial(f, g), b = qexp_mul_parallel(f, g);
    CHECK(a.agrees_with(b));
    CHECK(a.terms().size() == b.terms().size());
}

TEST_CASE("q d/dq is a derivation") {
    QExpansion f = sample(2, 1, 4), g = sample(2, 3, 4);
    CHECK(qderive(f * g).agrees_with(qderive(f) * g + f * qderive(g)));
}

TEST_CASE("substitute_power scales exponents and precision") {
    QExpansion f = sample(2, 1, 3);
    QExpansion g = substitute_power(f, 5);
    CHECK(*g.precision() == Q(15));
    CHECK(g.coeff(qmake(5, 2)) == f.coeff(qmake(1, 2)));
}

TEST_CASE("coefficients beyond precision are refused") {
    QExpansion f = sample(1, 1, 3);
    CHECK_THROWS(f.coeff(Q(3)));
    CHECK_NOTHROW(f.coeff(Q(2)));
}

TEST_CASE("json round trip") {
    QExpansion f = sample(4, 2, 3);
    json j = to_json(f);
    QExpansion g = qexp_from_json(json::parse(j.dump()));
    CHECK(g.agrees_with(f));
    CHECK(g.precision() == f.precision());
    CycNumber x = CycNumber::zeta(9, 4) * qmake(-7, 11);
    CHECK(cyc_from_json(to_json(x)) == x);
}

TEST_CASE("unit q-expansions multiply and invert") {
    UnitQExp u = theta_qexp(5, 1, 2, 4), v = theta_qexp(5, 2, 0, 4);
    UnitQExp w = u * v * u.inverse();
    CHECK(w.q_exponent == v.q_exponent);
    CHECK(w.unit_root == v.unit_root);
    CHECK(w.tail.agrees_with(v.tail));
}
