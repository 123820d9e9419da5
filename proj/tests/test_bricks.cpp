#include <catalan/bricks.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace catalan;

TEST_CASE("brick r1") {
    Jet eps = Jet::var(4);

    // alpha >= beta: (t+1)(t+2)/2 at t = -2+eps is (-1+eps)(eps)/2
    Jet a = brick_r1(3, 1, eps - 2);
    CHECK(a.valuation() == 1);
    CHECK(a.coeff(1) == rat(-1, 2));
    CHECK(a.coeff(2) == rat(1, 2));

    // alpha == beta: empty product over 0!
    Jet b = brick_r1(2, 2, eps - 5);
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(2) == 0);

    // alpha < beta: 1!/((eps)(eps+1)) has valuation -1, leading coefficient 1
    Jet c = brick_r1(0, 2, eps);
    CHECK(c.valuation() == -1);
    CHECK(c.coeff(-1) == 1);
    CHECK(c.coeff(0) == -1);

    // identically vanishing denominator
    CHECK_THROWS_AS(brick_r1(0, 2, Jet::exact_constant(Rat(-1))), std::domain_error);
}

TEST_CASE("brick r2") {
    Jet eps = Jet::var(4);

    CHECK(brick_r2(3, 3, eps - 1).coeff(0) == 1);

    // alpha=1, beta=0, t = 0: 4 * (-1/2) / 1!
    Jet a = brick_r2(1, 0, eps);
    CHECK(a.coeff(0) == -2);

    // alpha=2, beta=0, t = 1: 16 * (1/2)(3/2) / 2!
    Jet b = brick_r2(2, 0, eps + 1);
    CHECK(b.coeff(0) == 6);

    CHECK_THROWS_AS(brick_r2(0, 1, eps), std::invalid_argument);
}

TEST_CASE("special bricks r3..r6") {
    Jet eps = Jet::var(4);

    CHECK(brick_r3(4, 2, 2, eps).coeff(0) == 1); // i1 == i2: empty ratio
    CHECK(brick_r3(4, 2, 2, eps).coeff(1) == 0);

    // r4(2, 0, eps) = (3/2+eps)/(3/2-eps) = 1 + (4/3) eps + ...
    Jet r4v = brick_r4(2, 0, eps);
    CHECK(r4v.coeff(0) == 1);
    CHECK(r4v.coeff(1) == rat(4, 3));

    // r3 and r4 are 1 at eps = 0 for all valid indices
    for (long n = 1; n <= 5; ++n) {
        for (long i1 = 0; i1 <= n; ++i1)
            for (long i2 = i1; i2 <= n; ++i2) CHECK(brick_r3(n, i1, i2, eps).coeff(0) == 1);
        for (long i3 = 0; i3 <= n; ++i3) CHECK(brick_r4(n, i3, eps).coeff(0) == 1);
    }

    // r5 with i2 < i3 has valuation exactly 1 (the (eps)_{i3-i2} factor)
    CHECK(brick_r5(4, 1, 0, 2, eps).valuation() == 1);
    CHECK(brick_r5(5, 2, 1, 3, eps).valuation() == 1);

    // direct value: R6(2,1,1,0; 0) = (1)_0 (1)_1 (1/2)_0 / ((1)_0 (1)_2 (1/2)_0) = 1/2
    CHECK(brick_r6(2, 1, 1, 0, eps).coeff(0) == rat(1, 2));

    CHECK_THROWS_AS(brick_r5(3, 1, 2, 1, eps), std::invalid_argument); // i2 > i3
    CHECK_THROWS_AS(brick_r6(3, 1, 1, 1, eps), std::invalid_argument); // m2 == m1
    CHECK_THROWS_AS(brick_r6(3, 4, 1, 0, eps), std::invalid_argument); // k > n
}

TEST_CASE("r5 factors through r6 for i2 < i3") {
    Jet eps = Jet::var(5);
    for (long n = 1; n <= 8; ++n)
        for (long k = 1; k <= n; ++k)
            for (long i2 = 0; i2 <= n - k; ++i2)
                for (long i3 = i2 + 1; i3 <= n - k; ++i3)
                    CHECK(jets_agree(brick_r5(n, k, i2, i3, eps), eps * brick_r6(n, k, i3, i2, eps)));
}

TEST_CASE("r5 factorization into elementary bricks for i2 == i3") {
    Jet eps = Jet::var(5);
    for (long n = 1; n <= 8; ++n)
        for (long k = 1; k <= n; ++k)
            for (long i3 = 0; i3 <= n - k; ++i3) {
                Jet lhs = brick_r5(n, k, i3, i3, eps);
                Jet rhs = brick_r1(k + i3, 0, 1 - 2 * eps) *
                          (-eps) * brick_r1(0, k + i3 + 1, -eps) *
                          brick_r2(k - 1, 0, eps + Rat(n - k - i3 + 1)) *
                          (-2 * eps) * brick_r1(0, k, -2 * eps);
                CHECK(jets_agree(lhs, rhs));
            }
}

TEST_CASE("lemma r1 scan") {
    // spot check: alpha=2, beta=0, k=1, H=0 gives (t)(t+1)/2 at t=-1, which is 0
    CHECK(brick_r1(2, 0, Jet::var(3) - 1).coeff(0) == 0);

    ScanReport r = verify_lemma_r1({-4, 4}, {-4, 4}, {-4, 4}, 3, 2);
    CHECK(r.passed());
    CHECK(r.trials > 0);
    CHECK(r.id == "lemma-r1");
}

TEST_CASE("lemma r2 scan") {
    ScanReport r = verify_lemma_r2({0, 6}, {0, 6}, {-6, 6}, 3, 2);
    CHECK(r.passed());
    CHECK(r.trials == 28 * 13 * 4); // pairs alpha>=beta in [0,6], k values, H values
}

TEST_CASE("lemma briques1 scan") {
    ScanReport r = verify_lemma_briques1(6, 3, 2);
    CHECK(r.passed());

    // d_4 * R6(2,1,1,0; 0) = 12 * 1/2 integer
    CHECK(is_integer(brick_r6(2, 1, 1, 0, Jet::var(3)).coeff(0) * Rat(lcm_upto(4))));
}

TEST_CASE("padic summand") {
    // all-zero fractional parts with K = 0: direct evaluation gives 0
    CHECK(padic_summand(Rat(0), Rat(0), Rat(0), Rat(0), rat(1, 2)) == 0);
    CHECK(padic_summand(Rat(0), Rat(0), Rat(0), Rat(0), rat(1, 3)) == 0);

    // hand-checked integer-parameter case
    CHECK(padic_summand_at(2, 1, 1, 0, Prime(3), 1) == 0);

    CHECK_THROWS_AS(padic_summand(Rat(1), Rat(0), Rat(0), Rat(0), rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(padic_summand(Rat(0), Rat(0), Rat(0), Rat(0), Rat(2)), std::invalid_argument);
}

TEST_CASE("padic bound scans") {
    ScanReport r21 = verify_padic_bound(2, 1);
    CHECK(r21.passed());
    CHECK(r21.trials == 16);

    ScanReport r31 = verify_padic_bound(3, 1);
    CHECK(r31.passed());
    CHECK(r31.trials == 16 + 81);

    ScanReport r22 = verify_padic_bound(2, 2);
    CHECK(r22.passed());
    CHECK(r22.trials == 16 + 256);
}
