#ifndef CATALAN_TESTS_SUPPORT_HPP
#define CATALAN_TESTS_SUPPORT_HPP

#include <catalan/rational.hpp>

#include <random>

namespace catalan::testing {

// Small nonzero rational with numerator in [-5,5]\{0} and denominator in [1,5].
inline Rat small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 5);
    long n = 0;
    while (n == 0) n = num(rng);
    return rat(n, den(rng));
}

// Exact rational from a "num/den" literal (canonicalized).
inline Rat rat_str(const char* text) {
    Rat r(text);
    r.canonicalize();
    return r;
}

} // namespace catalan::testing

#endif
