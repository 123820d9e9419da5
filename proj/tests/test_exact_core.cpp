#include <catalan/number_theory.hpp>
#include <catalan/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace catalan;
using catalan::testing::small_rat;

namespace {

// independent oracle: plain product loop, no shared code with pochhammer
Rat poch_oracle(const Rat& alpha, unsigned long k) {
    Rat r(1);
    for (unsigned long i = 0; i < k; ++i) r *= alpha + Rat(static_cast<long>(i));
    return r;
}

} // namespace

TEST_CASE("rat helpers canonicalize") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(to_string(rat(-7, 2)) == "-7/2");
    CHECK(to_string(rat(-8, 2)) == "-4");
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
    CHECK(is_integer(rat(8, 2)));
    CHECK(to_integer(rat(8, 2)) == 4);
    CHECK_THROWS_AS(to_integer(rat(1, 2)), std::domain_error);
    CHECK(pow_rat(rat(2, 3), -2) == rat(9, 4));
    CHECK(floor_rat(rat(-3, 2)) == -2);
    CHECK(ceil_rat(rat(-3, 2)) == -1);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(rat(7, 3), 0) == 1);
    CHECK(pochhammer(rat(2), 3) == 24);
    CHECK(pochhammer(rat(1, 2), 2) == rat(3, 4));

    std::mt19937_64 rng(20240517);
    for (int t = 0; t < 200; ++t) {
        Rat a = small_rat(rng);
        unsigned long k = rng() % 8;
        CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + Rat(static_cast<long>(k))));
        CHECK(pochhammer(a, k) == poch_oracle(a, k));
    }
}

TEST_CASE("q_pochhammer") {
    CHECK(q_pochhammer(rat(5), rat(1, 2), 0) == 1);
    CHECK(q_pochhammer(rat(1), rat(7, 3), 4) == 0);
    CHECK(q_pochhammer(rat(2), rat(1, 2), 2) == 0);

    std::mt19937_64 rng(20240518);
    for (int t = 0; t < 200; ++t) {
        Rat a = small_rat(rng), q = small_rat(rng);
        unsigned long k = rng() % 6;
        CHECK(q_pochhammer(a, q, k + 1) == q_pochhammer(a, q, k) * (1 - a * pow_rat(q, static_cast<long>(k))));
    }
}

TEST_CASE("gen_binomial") {
    // n = 1: binom(n - 1/2, 1) = (1/2)/1
    CHECK(gen_binomial(rat(1, 2), 1) == rat(1, 2));
    // direct product oracle: (3/2)(1/2)/2!
    CHECK(gen_binomial(rat(3, 2), 2) == poch_oracle(rat(3, 2) - 2 + 1, 2) / Rat(factorial(2)));
    CHECK(gen_binomial(rat(3, 2), 2) == rat(3, 8));
    CHECK(gen_binomial(rat(-17, 5), 0) == 1);
    // agrees with the integer binomial where both are defined
    for (unsigned long n = 0; n <= 10; ++n)
        for (unsigned long k = 0; k <= n; ++k)
            CHECK(gen_binomial(Rat(static_cast<long>(n)), k) == Rat(binomial(n, k)));
}

TEST_CASE("lcm_upto") {
    CHECK(lcm_upto(0) == 1);
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(2) == 2);

    // fold oracle
    Int fold(1);
    for (unsigned long i = 1; i <= 6; ++i) mpz_lcm_ui(fold.get_mpz_t(), fold.get_mpz_t(), i);
    CHECK(lcm_upto(6) == fold);
    CHECK(lcm_upto(6) == 60);

    // prime-power cross-check: d_n = prod_{p<=n} p^{floor(log_p n)}
    for (unsigned long n = 1; n <= 200; ++n) {
        Int prod(1);
        for (unsigned long p : primes_upto(n)) {
            unsigned long pe = p;
            while (pe <= n / p) pe *= p;
            prod *= Int(static_cast<long>(pe));
        }
        CHECK(lcm_upto(n) == prod);
    }
}

TEST_CASE("Prime construction") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(47).value() == 47);
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(49), std::invalid_argument);
    CHECK_THROWS_AS(Prime(-3), std::invalid_argument);
}

TEST_CASE("p_valuation") {
    CHECK(p_valuation(Rat(12), Prime(2)) == 2);
    CHECK(p_valuation(rat(3, 4), Prime(2)) == -2);
    CHECK(p_valuation(rat(3, 4), Prime(5)) == 0);
    CHECK_THROWS_AS(p_valuation(Rat(0), Prime(2)), std::domain_error);

    std::mt19937_64 rng(20240519);
    for (int t = 0; t < 200; ++t) {
        Rat x = small_rat(rng), y = small_rat(rng);
        for (long p : {2L, 3L, 5L}) {
            Prime pp(p);
            CHECK(p_valuation(x * y, pp) == p_valuation(x, pp) + p_valuation(y, pp));
        }
    }
}

TEST_CASE("Legendre's formula") {
    for (unsigned long n = 1; n <= 200; n += 7) {
        Int nf = factorial(n);
        for (unsigned long p : primes_upto(n)) {
            long expected = 0;
            for (Int pe(static_cast<long>(p)); pe <= static_cast<long>(n); pe *= static_cast<long>(p))
                expected += static_cast<long>(Int(Int(static_cast<long>(n)) / pe).get_si());
            CHECK(p_valuation(nf, Prime(static_cast<long>(p))) == expected);
        }
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(rat(5, 2)) == rat(46, 15));
    CHECK(harmonic(Rat(0)) == 0);
    CHECK(harmonic(Rat(3)) == rat(11, 6));
    CHECK(harmonic(rat(-1, 2)) == 0);
    CHECK_THROWS_AS(harmonic(rat(1, 3)), std::domain_error);
    CHECK_THROWS_AS(harmonic(Rat(-1)), std::domain_error);
    CHECK_THROWS_AS(harmonic(rat(-3, 2)), std::domain_error);

    // difference property for integers and half-integers
    for (long m = 1; m <= 30; ++m) {
        CHECK(harmonic(Rat(m)) - harmonic(Rat(m - 1)) == rat(1, m));
        Rat h = rat(2 * m - 1, 2); // m - 1/2
        CHECK(harmonic(h) - harmonic(h - 1) == 1 / h);
    }
}
