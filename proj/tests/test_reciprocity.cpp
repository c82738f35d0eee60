#include "doctest.h"
#include "kato/reciprocity.hpp"

using namespace kato;

TEST_CASE("instance validation") {
    ReciprocityInstance in;
    CHECK_NOTHROW(validate(in));
    in.j = 2;  // j must be < k
    CHECK_THROWS(validate(in));
    in = ReciprocityInstance{};
    in.c = 10;  // c must be prime to 6 p
    CHECK_THROWS(validate(in));
}

TEST_CASE("parallel level sum equals the serial one") {
    for (long n : {1L, 2L}) {
        QExpansion a = level_sum(7, 1, 1, 5, 5, n, 1, 0, 2);
        QExpansion b = level_sum_serial(7, 1, 1, 5, 5, n, 1, 0, 2);
        CHECK(a.agrees_with(b));
        CHECK(a.precision() == b.precision());
    }
    ReciprocityInstance in;
    CHECK(exp_kato_lhs_level(in, 1).agrees_with(exp_kato_lhs_level_serial(in, 1)));
}

TEST_CASE("sum over c0 is exact at finite level") {
    for (long n : {1L, 2L}) {
        CHECK(c0_level_sum(1, 5, 1, 0, 5, n, 4).agrees_with(c0_level_target(1, 5, 1, 0, 4)));
        CHECK(c0_level_sum(2, 5, 0, 1, 5, n, 4, 7L).agrees_with(c0_level_target(2, 5, 0, 1, 4, 7L)));
    }
}

TEST_CASE("level sums approach the limit p-adically") {
    QExpansion lim = twisted_level_limit(1, 5, 1, 0, 7, 2);
    std::optional<Q> prev;
    bool first = true;
    for (long n = 1; n <= 2; ++n) {
        QExpansion d = twisted_level_sum(1, 5, 1, 0, 7, 5, n, 2) - lim;
        std::optional<Q> v;  // minimum valuation over the known coefficients
        for (const auto &[key, c] : d.terms()) {
            auto x = padic_valuation(c, 5);
            if (x && (!v || *x < *v)) v = x;
        }
        if (!first && prev && v) CHECK(*v > *prev);
        prev = v;
        first = false;
    }
}

TEST_CASE("Amice moments") {
    AmiceResult k0 = amice_moment_check(7, 1, 5, 0, 5, 2);
    CHECK(k0.finite_sum == k0.closed_form);
    AmiceResult a = amice_moment_check(7, 1, 5, 1, 5, 1), b = amice_moment_check(7, 1, 5, 1, 5, 2);
    REQUIRE(a.valuation);
    REQUIRE(b.valuation);
    CHECK(*b.valuation > *a.valuation);
}

TEST_CASE("pipeline: cocycle route, closed form and corollary agree") {
    ReciprocityInstance in;
    for (auto [k, j] : std::vector<std::pair<long, long>>{{2, 1}, {3, 2}}) {
        in.k = k;
        in.j = j;
        PipelineResult pr = pipeline_summand(in, 1, 6, 5, 5, 26, ToyBounds{30, j + 3, 2});
        CHECK(pr.agree);
        CHECK(!pr.via_cocycle.empty());
    }
}

TEST_CASE("smoke instance report is nondecreasing") {
    ReciprocityInstance in;
    in.n_max = 2;
    in.prec = 1;
    ConvergenceReport r = convergence_report(in);
    CHECK(r.all_nondecreasing);
    CHECK(r.rows.size() == 5);
}
