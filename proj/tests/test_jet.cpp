#include <catalan/jet.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace catalan;
using catalan::testing::small_rat;

namespace {

// random jet with valuation in [-2, 2], a handful of random coefficients,
// window inherited from var(6)
Jet random_jet(std::mt19937_64& rng, bool allow_zero = true) {
    Jet eps = Jet::var(6);
    Jet j = Jet::zero_to(7);
    for (int i = 0; i < 4; ++i) {
        if (rng() % 3 == 0) continue; // leave some coefficients zero
        j = j + small_rat(rng) * eps.pow(i);
    }
    if (j.is_zero() && !allow_zero) j = j + small_rat(rng);
    long shift = static_cast<long>(rng() % 5) - 2;
    if (shift > 0) j = j * eps.pow(shift);
    if (shift < 0) j = j / eps.pow(-shift);
    return j;
}

} // namespace

TEST_CASE("jet variable") {
    Jet e3 = Jet::var(3);
    CHECK(e3.valuation() == 1);
    CHECK(e3.known_end() == 4);
    CHECK(e3.coeff(1) == 1);
    CHECK(e3.coeff(2) == 0);
    CHECK(e3.coeff(3) == 0);
    CHECK_THROWS_AS(e3.coeff(4), std::out_of_range);
    CHECK_FALSE(e3.is_exact());

    Jet e1 = Jet::var(1);
    CHECK(e1.valuation() == 1);
    CHECK(e1.known_end() == 2);

    Jet sq = Jet::var(2) * Jet::var(2);
    CHECK(sq.valuation() == 2);
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(3) == 0);

    CHECK_THROWS_AS(Jet::var(0), std::invalid_argument);
}

TEST_CASE("jet arithmetic examples") {
    Jet eps = Jet::var(3);

    Jet p = (1 + eps) * (1 - eps);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);

    Jet q = (eps.pow(2) + eps.pow(3)) / eps;
    CHECK(q.valuation() == 1);
    CHECK(q.coeff(1) == 1);
    CHECK(q.coeff(2) == 1);

    Jet g = 1 / (1 - eps);
    CHECK(g.coeff(0) == 1);
    CHECK(g.coeff(1) == 1);
    CHECK(g.coeff(2) == 1);

    CHECK_THROWS_AS(eps / Jet::zero_to(4), std::domain_error);
}

TEST_CASE("zero jet is distinguished and windowed") {
    Jet eps = Jet::var(3);
    Jet z = eps - eps;
    CHECK(z.is_zero());
    CHECK(z.known_end() == 4);
    CHECK(z.coeff(2) == 0);
    CHECK_THROWS_AS(z.coeff(5), std::out_of_range);

    Jet ez = Jet();
    CHECK(ez.is_zero());
    CHECK(ez.is_exact());
    CHECK((eps * Rat(0)).is_zero());
}

TEST_CASE("jet pochhammer") {
    Jet eps = Jet::var(4);

    Jet a = pochhammer(1 - eps, 1);
    CHECK(a.coeff(0) == 1);
    CHECK(a.coeff(1) == -1);

    Jet b = pochhammer(1 + eps, 2); // (1+eps)(2+eps) = 2 + 3 eps + eps^2
    CHECK(b.coeff(0) == 2);
    CHECK(b.coeff(1) == 3);
    CHECK(b.coeff(2) == 1);

    Jet c = pochhammer(-eps, 1);
    CHECK(c.valuation() == 1);
    CHECK(c.coeff(1) == -1);

    CHECK(pochhammer(7 + eps, 0).coeff(0) == 1);
}

TEST_CASE("derivative_at_zero") {
    Jet eps = Jet::var(4);
    Jet g = 1 / (1 - eps);
    CHECK(g.derivative_at_zero(0) == 1);
    CHECK(g.derivative_at_zero(1) == 1);
    CHECK(g.derivative_at_zero(2) == 2);
    CHECK(g.derivative_at_zero(3) == 6);

    Jet c = Jet::constant(rat(5, 3), 4);
    CHECK(c.derivative_at_zero(1) == 0);
    CHECK(c.derivative_at_zero(3) == 0);

    CHECK_THROWS_AS((1 / eps).derivative_at_zero(0), std::domain_error); // pole
    CHECK_THROWS_AS(g.derivative_at_zero(5), std::out_of_range);         // window
}

TEST_CASE("ring axioms within the truncation window") {
    std::mt19937_64 rng(987654);
    for (int t = 0; t < 120; ++t) {
        Jet a = random_jet(rng), b = random_jet(rng), c = random_jet(rng);
        CHECK(jets_agree(a + b, b + a));
        CHECK(jets_agree(a * b, b * a));
        CHECK(jets_agree((a + b) + c, a + (b + c)));
        CHECK(jets_agree((a * b) * c, a * (b * c)));
        CHECK(jets_agree(a * (b + c), a * b + a * c));
    }
}

TEST_CASE("division round-trip") {
    std::mt19937_64 rng(13579);
    for (int t = 0; t < 120; ++t) {
        Jet a = random_jet(rng);
        Jet b = random_jet(rng, /*allow_zero=*/false);
        CHECK(jets_agree((a / b) * b, a));
    }
}

TEST_CASE("derivative is linear") {
    std::mt19937_64 rng(24680);
    for (int t = 0; t < 60; ++t) {
        Jet eps = Jet::var(5);
        // valuation >= 0 so derivatives exist
        Jet a = random_jet(rng) * eps.pow(2);
        Jet b = random_jet(rng) * eps.pow(2);
        Rat alpha = small_rat(rng), beta = small_rat(rng);
        for (long H = 0; H <= 3; ++H) {
            CHECK((alpha * a + beta * b).derivative_at_zero(H) ==
                  alpha * a.derivative_at_zero(H) + beta * b.derivative_at_zero(H));
        }
    }
}

TEST_CASE("Leibniz convolution of coefficients") {
    std::mt19937_64 rng(11223);
    for (int t = 0; t < 60; ++t) {
        Jet eps = Jet::var(5);
        Jet a = random_jet(rng) * eps.pow(2);
        Jet b = random_jet(rng) * eps.pow(2);
        Jet ab = a * b;
        for (long H = 0; H <= 3; ++H) {
            Rat conv(0);
            for (long i = 0; i <= H; ++i) conv += a.coeff(i) * b.coeff(H - i);
            CHECK(ab.coeff(H) == conv);
        }
    }
}

TEST_CASE("finite-difference smoke test") {
    // f(eps) = (3+2 eps)/(1-eps); exact central difference at h = 10^-6
    Jet eps = Jet::var(4);
    Jet f = (3 + 2 * eps) / (1 - eps);
    Rat d1 = f.derivative_at_zero(1);
    CHECK(d1 == 5);

    const Rat h = rat(1, 1000000);
    auto feval = [](const Rat& x) -> Rat { return (3 + 2 * x) / (1 - x); };
    Rat diff = (feval(h) - feval(-h)) / (2 * h);
    Rat err = diff - d1;
    if (err < 0) err = -err;
    CHECK(err <= h); // |f'''| / 6 stays well below 1 near 0 for this f
}

TEST_CASE("scalar operations treat scalars as exact") {
    Jet eps = Jet::var(3);
    Jet a = eps + rat(1, 2);
    CHECK(a.coeff(0) == rat(1, 2));
    CHECK(a.known_end() == 4);

    Jet b = rat(3, 2) / (1 - eps);
    CHECK(b.coeff(2) == rat(3, 2));

    Jet c = Jet::exact_constant(rat(7, 3));
    CHECK(c.is_exact());
    CHECK((c * c).is_exact());
    CHECK((c * c).coeff(0) == rat(49, 9));
}

TEST_CASE("two-stage jets: outer variable over an inner jet ring") {
    using Jet2 = BasicJet<Jet>;
    Jet eps = Jet::var(4);
    Jet2 delta = Jet2::var(2);

    // g = 1/(1 + eps + delta); delta-constant term 1/(1+eps),
    // delta-linear term -1/(1+eps)^2
    Jet2 g = 1 / (delta + Jet2::exact_constant(1 + eps));
    Jet expect0 = 1 / (1 + eps);
    Jet expect1 = -(1 / ((1 + eps) * (1 + eps)));
    CHECK(jets_agree(g.coeff(0), expect0));
    CHECK(jets_agree(g.coeff(1), expect1));

    // a removable singularity in delta: (delta * (1+eps)) / delta
    Jet2 h = (delta * Jet2::exact_constant(1 + eps)) / delta;
    CHECK(h.valuation() == 0);
    CHECK(jets_agree(h.coeff(0), 1 + eps));

    // delta-pochhammer with inner-jet base
    Jet2 p = pochhammer(delta + Jet2::exact_constant(eps), 2); // (eps+delta)(1+eps+delta)
    Jet expect_c0 = eps * (1 + eps);
    CHECK(jets_agree(p.coeff(0), expect_c0));
    CHECK(jets_agree(p.coeff(1), 1 + 2 * eps)); // d/d delta at 0
}
