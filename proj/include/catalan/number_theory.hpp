#ifndef CATALAN_NUMBER_THEORY_HPP
#define CATALAN_NUMBER_THEORY_HPP

#include <catalan/rational.hpp>

#include <stdexcept>
#include <vector>

namespace catalan {

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Rising factorial (alpha)_k = alpha (alpha+1) ... (alpha+k-1); empty product is 1.
inline Rat pochhammer(const Rat& alpha, unsigned long k) {
    Rat r(1);
    Rat f = alpha;
    for (unsigned long i = 0; i < k; ++i, f += 1) r *= f;
    return r;
}

// (alpha; q)_k = (1 - alpha)(1 - alpha q) ... (1 - alpha q^{k-1}).
inline Rat q_pochhammer(const Rat& alpha, const Rat& q, unsigned long k) {
    Rat r(1);
    Rat aq = alpha;
    for (unsigned long i = 0; i < k; ++i, aq *= q) r *= (1 - aq);
    return r;
}

// Generalized binomial binom(alpha, k) = (alpha-k+1)_k / k!, alpha rational.
inline Rat gen_binomial(const Rat& alpha, unsigned long k) {
    return pochhammer(alpha - Rat(static_cast<long>(k)) + 1, k) / Rat(factorial(k));
}

// d_n = lcm(1, 2, ..., n); d_0 = d_1 = 1.
inline Int lcm_upto(unsigned long n) {
    Int r(1);
    for (unsigned long i = 2; i <= n; ++i) mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    return r;
}

inline std::vector<unsigned long> primes_upto(unsigned long n) {
    std::vector<unsigned long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(n + 1, true);
    for (unsigned long p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (unsigned long m = p * p; m <= n; m += p) sieve[m] = false;
    }
    return out;
}

// A checked prime. Trial division: deterministic at the sizes this library
// meets (p <= 2n with n a desk-scale index).
class Prime {
public:
    explicit Prime(Int value) : value_(std::move(value)) {
        if (value_ < 2) throw std::invalid_argument("Prime: " + value_.get_str() + " is not prime");
        for (Int d(2); d * d <= value_; ++d)
            if (value_ % d == 0) throw std::invalid_argument("Prime: " + value_.get_str() + " is not prime");
    }
    explicit Prime(long value) : Prime(Int(value)) {}

    const Int& value() const { return value_; }

private:
    Int value_;
};

// Exponent of p in x, negative when p divides the denominator. x must be nonzero.
inline long p_valuation(const Int& x, const Prime& p) {
    if (x == 0) throw std::domain_error("valuation of zero undefined");
    Int reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.value().get_mpz_t()));
}

inline long p_valuation(const Rat& x, const Prime& p) {
    if (x == 0) throw std::domain_error("valuation of zero undefined");
    return p_valuation(x.get_num(), p) - p_valuation(x.get_den(), p);
}

// Harmonic numbers extended to half-integers: for integer m, H_m = sum_{j<=m} 1/j;
// for half-integer m, H_m = sum_{j=1}^{ceil(m)} 1/(m-j+1). H_0 = H_{-1/2} = 0.
inline Rat harmonic(const Rat& m) {
    const Int& den = m.get_den();
    if (den != 1 && den != 2) throw std::domain_error("unsupported harmonic argument " + m.get_str());
    Int terms = ceil_rat(m);
    if (terms < 0 || (den == 1 && m < 0))
        throw std::domain_error("unsupported harmonic argument " + m.get_str());
    Rat s(0);
    Rat t = m;
    for (Int j(1); j <= terms; ++j, t -= 1) s += 1 / t;
    return s;
}

} // namespace catalan

#endif
