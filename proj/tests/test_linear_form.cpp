#include <catalan/linear_form.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace catalan;
using catalan::testing::rat_str;

TEST_CASE("a_n anchors and route equality") {
    CHECK(a_n_binomial(0) == -4);
    CHECK(a_n_binomial(1) == -7);
    CHECK(a_n_binomial(2) == rat(-649, 16));
    CHECK(a_n_binomial(3) == rat(-19471, 64));
    CHECK(a_n_binomial(4) == rat(-10439881, 4096));

    for (long n = 0; n <= 8; ++n) {
        Rat a = a_n_binomial(n);
        CHECK(a_n_derivative(n) == a);
        CHECK(a_n_harmonic(n) == a); // even n exercises the removable j = n/2 factor
    }
}

TEST_CASE("a_n via the terminating 3F2") {
    // a_n = -4 * 3F2[-n, n+1/2, 1/2-n; 1, 1; 1]
    for (long n = 0; n <= 6; ++n) {
        Rat f = pfq_terminating<Rat>({Rat(-n), rat(2 * n + 1, 2), rat(1 - 2 * n, 2)}, {Rat(1), Rat(1)},
                                     Rat(1), n);
        CHECK(a_n_binomial(n) == -4 * f);
    }
    CHECK(pfq_terminating<Rat>({Rat(-1), rat(3, 2), rat(-1, 2)}, {Rat(1), Rat(1)}, Rat(1), 1) == rat(7, 4));
}

TEST_CASE("b_n anchors") {
    CHECK(b_n_derivative(0) == 0);

    // independent oracle for b_1: the single (j,k) = (1,1) contribution is
    // F(eps) = (eps-1/2)(3/2-eps)(1/2+eps)(1-eps)^{-3} and
    // b_1 = sum_e 2^e coeff_{3-e}(F)
    Jet eps = Jet::var(4);
    Jet F = (eps - rat(1, 2)) * (rat(3, 2) - eps) * (rat(1, 2) + eps) / (1 - eps).pow(3);
    Rat b1_oracle = 2 * F.coeff(2) + 4 * F.coeff(1) + 8 * F.coeff(0);
    CHECK(b1_oracle == rat(-13, 2));
    CHECK(b_n_derivative(1) == rat(-13, 2));

    CHECK(b_n_derivative(2) == rat(-10699, 288));
    CHECK(b_n_derivative(3) == rat(-8025653, 28800));
    CHECK(b_n_derivative(4) == rat_str("-210854706467/90316800"));
}

TEST_CASE("b_n route equality") {
    for (long n = 1; n <= 6; ++n) CHECK(b_n_via_s1(n) == b_n_derivative(n));
}

TEST_CASE("integrality rows") {
    LinearFormRow r0 = check_integrality(0);
    CHECK(r0.a_scaled == -4);
    CHECK(r0.b_scaled == 0);

    LinearFormRow r1 = check_integrality(1);
    CHECK(r1.a_scaled == -112);
    CHECK(r1.b_scaled == -416);

    LinearFormRow r2 = check_integrality(2);
    CHECK(r2.a_scaled == -10384);
    CHECK(r2.b_scaled == Int("-1369472"));

    LinearFormRow r3 = check_integrality(3);
    CHECK(r3.b_scaled == Int("-4109134336"));

    // baseline sanity tier: 2^{4n} d_{2n} a_n and 2^{4n} d_{2n}^3 b_n integral
    for (long n = 0; n <= 6; ++n) {
        const Rat two4n(pow_int(Int(2), static_cast<unsigned long>(4 * n)));
        const Rat d2n(lcm_upto(static_cast<unsigned long>(2 * n)));
        CHECK(is_integer(two4n * d2n * a_n_binomial(n)));
        CHECK(is_integer(two4n * d2n * d2n * d2n * b_n_derivative(n)));
    }
}

TEST_CASE("interval operations") {
    Interval iv(rat(1, 3), rat(1, 2));
    CHECK(iv.width() == rat(1, 6));
    CHECK(iv.contains(rat(2, 5)));
    CHECK(!iv.contains(rat(2, 3)));
    CHECK(iv.overlaps(Interval(rat(1, 2), Rat(4))));
    CHECK(!iv.overlaps(Interval(rat(3, 5), Rat(4))));

    Interval flipped = iv.scaled(Rat(-2));
    CHECK(flipped.lo == -1);
    CHECK(flipped.hi == rat(-2, 3));
    CHECK(iv.shifted(Rat(1)).lo == rat(4, 3));

    CHECK_THROWS_AS(Interval(Rat(1), Rat(0)), std::invalid_argument);
}

TEST_CASE("catalan enclosure") {
    Interval one = catalan_interval(1);
    CHECK(one.lo == rat(8, 9)); // 1 - 1/9, exactly (division by 1 is exact on the dyadic grid)
    CHECK(one.hi == 1);

    Interval two = catalan_interval(2);
    CHECK(two.lo <= rat(8, 9));
    CHECK(two.hi >= rat(8, 9) + rat(1, 25));
    CHECK(two.width() <= 2 * rat(1, 25));

    for (long terms : {1L, 2L, 5L, 100L, 1000L}) {
        Interval iv = catalan_interval(terms);
        const Rat bound = rat(2, (2 * terms + 1) * (2 * terms + 1));
        CHECK(iv.width() <= bound);
    }

    // G = 0.915965594177219015... ; the band below brackets it to 1e-17
    const Rat g_lo = rat_str("91596559417721901/100000000000000000");
    const Rat g_hi = rat_str("91596559417721902/100000000000000000");
    Interval iv = catalan_interval(20000);
    CHECK(iv.lo < g_lo);
    CHECK(iv.hi > g_hi);
}

TEST_CASE("series enclosure") {
    // terms with k <= n vanish: the (k-n)_n factor hits zero
    CHECK(detail::series_term(3, 2) == 0);
    CHECK(detail::series_term(5, 5) == 0);
    CHECK(detail::series_term(3, 4) != 0);

    // n = 0 series is -4G
    Interval g = catalan_interval(20000);
    Interval s0 = linG_partial(0, 500);
    Interval minus4g = g.scaled(Rat(-4));
    CHECK(s0.overlaps(minus4g));
    CHECK(s0.width() <= rat(1, 250000)); // next-term bound at K = 500

    // n = 1 encloses a_1 G - b_1 = -7G + 13/2 ~ 0.0882
    Interval s1 = linG_partial(1, 200);
    CHECK(s1.lo < rat(883, 10000));
    CHECK(s1.hi > rat(881, 10000));

    CHECK_THROWS_AS(linG_partial(1, 2), TailBoundError);
}

TEST_CASE("residual overlap") {
    ResidualCheck single = residual_check(1, 300, 10000);
    CHECK(single.overlap);

    auto rows = residual_rows(4, 400, 20000);
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) CHECK(r.overlap);

    ResidualCheck r0 = rows[0];
    CHECK(r0.a_n == -4);
    CHECK(r0.b_n == 0);
    // both sides enclose -4G
    CHECK(r0.linear_side.contains(rat(-36638, 10000)) == r0.series_side.contains(rat(-36638, 10000)));
}
