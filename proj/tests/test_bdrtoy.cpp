#include "doctest.h"
#include "kato/bdrtoy.hpp"

using namespace kato;

namespace {
BdRToyElem sample(const BdRToyElem &proto, long seed) {
    BdRToyElem x = proto.like();
    for (long v = 0; v < 4; ++v)
        for (long s = 0; s < 2; ++s)
            x.add({(v + seed) % proto.level(), v, s, (v + s) % 2, 0}, CycNumber(qmake(v + seed + 1, s + 2)));
    return x;
}
}  // namespace

TEST_CASE("zeta~^M carries to exp(t)") {
    BdRToyElem proto(3, 3, ToyBounds{6, 4, 1}, 0);
    BdRToyElem x = proto.mono({3, 0, 0, 0, 0});
    BdRToyElem ex = proto.mono({0, 0, 0, 0, 0}) + proto.mono({0, 0, 1, 0, 0}) + proto.mono({0, 0, 2, 0, 0}, CycNumber(qmake(1, 2))) +
                    proto.mono({0, 0, 3, 0, 0}, CycNumber(qmake(1, 6)));
    CHECK(x == ex);
}

TEST_CASE("partial1 and partial2 are derivations") {
    BdRToyElem proto(5, 5, ToyBounds{8, 4, 2}, 0);
    BdRToyElem x = sample(proto, 1), y = sample(proto, 3);
    CHECK(partial1(x * y) == partial1(x) * y + x * partial1(y));
    CHECK(partial2(x * y) == partial2(x) * y + x * partial2(y));
}

TEST_CASE("[d2, d1] = d1") {
    BdRToyElem proto(3, 3, ToyBounds{8, 5, 2}, 0);
    BdRToyElem x = sample(proto, 2);
    CHECK(partial2(partial1(x)) - partial1(partial2(x)) == partial1(x));
}

TEST_CASE("action jet: derivation formula = direct substitution") {
    BdRToyElem proto(3, 3, ToyBounds{6, 5, 2}, 0);
    BdRToyElem x = sample(proto, 1);
    ToyJet a = pm_action_jet2(x), b = pm_action_jet2_direct(x);
    for (const auto &[key, v] : a) {
        REQUIRE(b.count(key));
        CHECK(v == b.at(key));
    }
}

TEST_CASE("trace keeps only p^n-divisible monomials") {
    long M = 3, L = 9;
    BdRToyElem proto(L, 3, ToyBounds{20, 2, 0}, 0);
    CHECK(trace_RM(proto.mono({3, 6, 1, 0, 0}), M) == trace_RM(proto.mono({3, 6, 1, 0, 0}), M).like().mono({1, 2, 1, 0, 0}));
    CHECK(trace_RM(proto.mono({1, 6, 0, 0, 0}), M).is_zero());
    CHECK(trace_RM(proto.mono({0, 4, 0, 0, 0}), M).is_zero());
}

TEST_CASE("res kills both images and the closed form matches the solve") {
    long M = 3;
    BdRToyElem proto(M, M, ToyBounds{5, 4, 0}, 0);
    for (auto [k, j] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}})
        for (long i = 0; i <= k - 2; ++i)
            for (long s = 2 - j; s < 4 - j; ++s)
                for (long v = 0; v < 5; ++v) {
                    VkjTensor y(k, j, proto);
                    y.add(i, proto.mono({1, v, s, 0, 0}));
                    CHECK(res_kj(partial1(y)).empty());
                    VkjTensor z = partial2(y);
                    z -= y;
                    CHECK(res_kj(z).empty());
                    CHECK(res_kj(y).agrees_with(res_kj_solve(y)));
                }
}

TEST_CASE("res detects the target line") {
    long M = 3;
    BdRToyElem proto(M, M, ToyBounds{5, 4, 0}, 0);
    VkjTensor y(2, 1, proto);
    y.add(0, proto.mono({0, 2, 1, 0, 0}));
    CHECK(!res_kj(y).empty());
}

TEST_CASE("res refuses t-degrees below 2 - j") {
    long M = 3;
    BdRToyElem proto(M, M, ToyBounds{5, 4, 0}, 0);
    VkjTensor y(2, 1, proto);
    y.add(0, proto.mono({0, 1, 0, 0, 0}));
    CHECK_THROWS(res_kj(y));
}
