#ifndef CATALAN_RATIONAL_HPP
#define CATALAN_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace catalan {

// Exact scalars. Every Rat in this library is canonical: denominator > 0,
// gcd(num, den) = 1. gmpxx arithmetic preserves canonical form; only raw
// two-argument construction needs an explicit canonicalize(), which the
// helpers below take care of.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int to_integer(const Rat& x) {
    if (!is_integer(x)) throw std::domain_error("to_integer: " + x.get_str() + " is not an integer");
    return x.get_num();
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for integer e (negative allowed, base != 0 then).
inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rat: 0 to a negative power");
    Rat r;
    const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), ue);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), ue);
    if (e < 0) {
        Rat inv;
        mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
        return inv;
    }
    return r;
}

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

// Canonical string form: "num/den", or just "num" when den = 1.
inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

// Truncated decimal rendering for human-oriented output; exact values stay in
// the machine formats.
inline std::string decimal_approx(const Rat& x, int fractional_digits = 12) {
    Int p = x.get_num(), q = x.get_den();
    std::string out;
    if (p < 0) {
        out += '-';
        p = -p;
    }
    out += Int(p / q).get_str();
    Int rem = p % q;
    if (fractional_digits > 0) {
        out += '.';
        for (int i = 0; i < fractional_digits; ++i) {
            rem *= 10;
            out += Int(rem / q).get_str();
            rem %= q;
        }
    }
    return out;
}

} // namespace catalan

#endif
