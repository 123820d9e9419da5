#ifndef CATALAN_LINEAR_FORM_HPP
#define CATALAN_LINEAR_FORM_HPP

#include <catalan/hypergeometric.hpp>
#include <catalan/interval.hpp>
#include <catalan/jet.hpp>
#include <catalan/number_theory.hpp>
#include <catalan/rational.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catalan {

// ---------------------------------------------------------------------------
// The coefficient a_n by three independent routes
// ---------------------------------------------------------------------------

// Closed binomial form: -4 sum_j binom(n,j) binom(n-1/2, j) binom(n+j-1/2, j).
inline Rat a_n_binomial(long n) {
    if (n < 0) throw std::invalid_argument("a_n_binomial: n must be >= 0");
    Rat sum(0);
    for (long j = 0; j <= n; ++j) {
        const auto uj = static_cast<unsigned long>(j);
        sum += Rat(binomial(static_cast<unsigned long>(n), uj)) *
               gen_binomial(rat(2 * n - 1, 2), uj) * gen_binomial(rat(2 * (n + j) - 1, 2), uj);
    }
    return -4 * sum;
}

// Derivative form: 4 (-1)^{n-1} sum_j d/d eps [summand] at eps = 0.
inline Rat a_n_derivative(long n) {
    if (n < 0) throw std::invalid_argument("a_n_derivative: n must be >= 0");
    Rat sum(0);
    for (long j = 0; j <= n; ++j) sum += s1_summand_jet(n, j, 2).derivative_at_zero(1);
    return (n % 2 == 0 ? -4 : 4) * sum;
}

// Harmonic-number form, the derivative expanded in closed form. The removable
// 1/(n/2 - j) factor is distributed before evaluation, so even n never divides
// by zero at j = n/2.
inline Rat a_n_harmonic(long n) {
    if (n < 0) throw std::invalid_argument("a_n_harmonic: n must be >= 0");
    Rat sum(0);
    for (long j = 0; j <= n; ++j) {
        const auto uj = static_cast<unsigned long>(j);
        const Rat pre = pow_rat(Rat(binomial(static_cast<unsigned long>(n), uj)), 3) *
                        gen_binomial(rat(2 * (n + j) - 1, 2), static_cast<unsigned long>(n)) *
                        gen_binomial(rat(2 * (2 * n - j) - 1, 2), static_cast<unsigned long>(n));
        const Rat s = 3 * harmonic(Rat(j)) - 3 * harmonic(Rat(n - j)) +
                      harmonic(rat(2 * (2 * n - j) - 1, 2)) - harmonic(rat(2 * (n + j) - 1, 2)) -
                      harmonic(rat(2 * (n - j) - 1, 2)) + harmonic(rat(2 * j - 1, 2));
        sum += pre * (1 + rat(n - 2 * j, 2) * s);
    }
    return (n % 2 == 0 ? -4 : 4) * sum;
}

// ---------------------------------------------------------------------------
// The coefficient b_n by two routes
// ---------------------------------------------------------------------------

namespace detail {

// (-1)^n sum_{e=1}^{3} sum_{k=1}^{n} (-1)^k / (k-1/2)^e * coeff_{3-e}(inner_k)
template <class InnerJet>
Rat b_n_from_inner(long n, InnerJet&& inner_of_k) {
    Rat total(0);
    for (long k = 1; k <= n; ++k) {
        const Jet inner = inner_of_k(k);
        const Rat khalf = rat(2 * k - 1, 2);
        for (int e = 1; e <= 3; ++e) {
            Rat term = inner.coeff(3 - e) / pow_rat(khalf, e);
            if (k % 2 != 0) term = -term;
            total += term;
        }
    }
    if (n % 2 != 0) total = -total;
    return total;
}

} // namespace detail

// Reordered derivative form, inner j-sums evaluated as order-4 jets.
inline Rat b_n_derivative(long n) {
    if (n < 0) throw std::invalid_argument("b_n_derivative: n must be >= 0");
    if (n == 0) return Rat(0);
    // suffix sums: inner(k) = sum_{j=k}^{n} F_j
    std::vector<Jet> suffix(static_cast<std::size_t>(n) + 2, Jet::zero_to(5));
    for (long j = n; j >= 1; --j)
        suffix[static_cast<std::size_t>(j)] = suffix[static_cast<std::size_t>(j) + 1] + s1_summand_jet(n, j, 4);
    return detail::b_n_from_inner(n, [&](long k) { return suffix[static_cast<std::size_t>(k)]; });
}

// Same outer sums with the inner j-sum replaced by the multidimensional side
// of the transformation identity; exercises the brick representation end to end.
inline Rat b_n_via_s1(long n) {
    if (n < 0) throw std::invalid_argument("b_n_via_s1: n must be >= 0");
    return detail::b_n_from_inner(n, [&](long k) { return s1_rhs_jet(n, k, 4); });
}

// ---------------------------------------------------------------------------
// Integrality rows
// ---------------------------------------------------------------------------

struct LinearFormRow {
    long n = 0;
    Rat a_n;
    Rat b_n;
    Int a_scaled; // 2^{4n} a_n
    Int b_scaled; // 2^{4n} d_{2n}^2 b_n
    std::optional<Interval> residual;
};

struct IntegralityError : std::runtime_error {
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

// Row for one n; throws IntegralityError if either scaled value fails to be
// an integer (which would falsify the integrality statement or this
// implementation).
inline LinearFormRow check_integrality(long n) {
    LinearFormRow row;
    row.n = n;
    row.a_n = a_n_binomial(n);
    row.b_n = b_n_derivative(n);
    const Rat two4n(pow_int(Int(2), static_cast<unsigned long>(4 * n)));
    const Rat d2n(lcm_upto(static_cast<unsigned long>(2 * n)));
    const Rat a_scaled = two4n * row.a_n;
    if (!is_integer(a_scaled))
        throw IntegralityError("integrality violation: 2^{4n} a_n = " + to_string(a_scaled) +
                               " at n = " + std::to_string(n));
    const Rat b_scaled = two4n * d2n * d2n * row.b_n;
    if (!is_integer(b_scaled))
        throw IntegralityError("integrality violation: 2^{4n} d_{2n}^2 b_n = " + to_string(b_scaled) +
                               " at n = " + std::to_string(n));
    row.a_scaled = to_integer(a_scaled);
    row.b_scaled = to_integer(b_scaled);
    return row;
}

// ---------------------------------------------------------------------------
// Rigorous enclosures
// ---------------------------------------------------------------------------

// Enclosure of Catalan's constant from `terms` leading terms of the defining
// alternating series. The partial sum is accumulated as directed-rounded
// dyadic bounds (denominator 2^192, floor on the low side, ceiling on the
// high side), so the enclosure stays exact-rational and rigorous; the
// dominant width is the alternating-series tail 1/(2N+1)^2.
inline Interval catalan_interval(long terms) {
    if (terms < 1) throw std::invalid_argument("catalan_interval: terms must be >= 1");
    if (terms >= (1L << 30)) throw std::invalid_argument("catalan_interval: terms out of supported range");
    constexpr unsigned long kScaleBits = 192;
    const Int scale = pow_int(Int(2), kScaleBits);
    Int lo(0), hi(0), q(0);
    for (long k = 1; k <= terms; ++k) {
        const unsigned long d = static_cast<unsigned long>(2 * k - 1) * static_cast<unsigned long>(2 * k - 1);
        if (k % 2 == 1) {
            mpz_fdiv_q_ui(q.get_mpz_t(), scale.get_mpz_t(), d);
            lo += q;
            mpz_cdiv_q_ui(q.get_mpz_t(), scale.get_mpz_t(), d);
            hi += q;
        } else {
            mpz_cdiv_q_ui(q.get_mpz_t(), scale.get_mpz_t(), d);
            lo -= q;
            mpz_fdiv_q_ui(q.get_mpz_t(), scale.get_mpz_t(), d);
            hi -= q;
        }
    }
    Rat sum_lo = rat(lo, scale);
    Rat sum_hi = rat(hi, scale);
    const Rat tail = rat(Int(1), Int(2 * terms + 1) * Int(2 * terms + 1));
    if (terms % 2 == 1) return Interval(sum_lo - tail, sum_hi); // last term added, sum overshoots
    return Interval(sum_lo, sum_hi + tail);
}

struct TailBoundError : std::runtime_error {
    explicit TailBoundError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// |t_{k+1}| / |t_k| = num(k) / den(k) for the series behind the linear form;
// both polynomials in k of degree 6 with equal leading coefficients.
inline std::vector<Int> ratio_num_poly(long n) {
    std::vector<Int> p{Int(n + 1), Int(2)}; // 2k + n + 1
    p = poly_mul(p, {Int(0), Int(1)});      // * k
    p = poly_mul(p, {Int(2 * n), Int(1)});  // * (k + 2n)
    const std::vector<Int> lin{Int(-1), Int(2)}; // (2k - 1)
    p = poly_mul(p, poly_mul(lin, poly_mul(lin, lin)));
    return p;
}

inline std::vector<Int> ratio_den_poly(long n) {
    std::vector<Int> p{Int(n - 1), Int(2)}; // 2k + n - 1
    p = poly_mul(p, {Int(-n), Int(1)});     // * (k - n)
    p = poly_mul(p, {Int(n), Int(1)});      // * (k + n)
    const std::vector<Int> lin{Int(2 * n + 1), Int(2)}; // (2k + 2n + 1)
    p = poly_mul(p, poly_mul(lin, poly_mul(lin, lin)));
    return p;
}

// Certify den(k) - num(k) > 0 for all integers k >= k0 by expanding around k0
// and checking every shifted coefficient is >= 0 with a positive value at k0.
inline bool decreasing_from(long n, long k0) {
    const std::vector<Int> num = ratio_num_poly(n);
    const std::vector<Int> den = ratio_den_poly(n);
    std::vector<Int> diff(std::max(num.size(), den.size()), Int(0));
    for (std::size_t i = 0; i < den.size(); ++i) diff[i] += den[i];
    for (std::size_t i = 0; i < num.size(); ++i) diff[i] -= num[i];
    // shift: coefficients of diff(k0 + x)
    const std::size_t deg = diff.size();
    std::vector<Int> shifted(deg, Int(0));
    for (std::size_t j = 0; j < deg; ++j) {
        Int k0pow(1);
        for (std::size_t i = 0; i <= j; ++i) {
            shifted[j - i] += diff[j] * Int(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i))) * k0pow;
            k0pow *= k0;
        }
    }
    if (shifted[0] <= 0) return false;
    for (const Int& c : shifted)
        if (c < 0) return false;
    return true;
}

// smallest K0 > 2n from which the term magnitudes provably decrease forever
inline long tail_monotone_start(long n) {
    for (long k0 = 2 * n + 1; k0 <= 2 * n + 200; ++k0)
        if (decreasing_from(n, k0)) return k0;
    return -1;
}

// k-th term of the series: n! (-1)^k (k + (n-1)/2) (k-n)_n (k+n)_n / (k-1/2)_{n+1}^3
inline Rat series_term(long n, long k) {
    const auto un = static_cast<unsigned long>(n);
    const Rat num = Rat(factorial(un)) * rat(2 * k + n - 1, 2) * pochhammer(Rat(k - n), un) *
                    pochhammer(Rat(k + n), un);
    const Rat den = pow_rat(pochhammer(rat(2 * k - 1, 2), un + 1), 3);
    Rat t = num / den;
    if (k % 2 != 0) t = -t;
    return t;
}

} // namespace detail

// Exact partial sum of the linear-form series with a rigorous alternating
// tail enclosure. The decrease of the term magnitudes from the bound onward
// is certified exactly (positive shifted-polynomial certificate), not assumed.
inline Interval linG_partial(long n, long K) {
    if (n < 0) throw std::invalid_argument("linG_partial: n must be >= 0");
    if (K <= 2 * n) throw TailBoundError("tail bound not established: need K > 2n");
    const long k0 = detail::tail_monotone_start(n);
    if (k0 < 0 || K < k0)
        throw TailBoundError("tail bound not established: no decrease certificate below K");

    Rat sum(0);
    for (long k = n + 1; k <= K; ++k) sum += detail::series_term(n, k); // terms k <= n vanish
    const Rat next = detail::series_term(n, K + 1);
    if (next >= 0) return Interval(sum, sum + next);
    return Interval(sum + next, sum);
}

struct ResidualCheck {
    long n = 0;
    Rat a_n;
    Rat b_n;
    Interval linear_side;  // a_n * [G] - b_n
    Interval series_side;  // enclosure of the series value
    bool overlap = false;
};

namespace detail {

inline ResidualCheck residual_check_with(const Interval& g_enclosure, long n, long series_K) {
    ResidualCheck r;
    r.n = n;
    r.a_n = a_n_binomial(n);
    r.b_n = b_n_derivative(n);
    r.linear_side = g_enclosure.scaled(r.a_n).shifted(-r.b_n);
    r.series_side = linG_partial(n, series_K);
    r.overlap = r.linear_side.overlaps(r.series_side);
    return r;
}

} // namespace detail

// Does the enclosure of a_n G - b_n meet the enclosure of the series value?
// Both sides rigorously enclose the same real number, so disjointness would
// falsify the linear-form identity (or this implementation).
inline ResidualCheck residual_check(long n, long series_K, long catalan_terms) {
    return detail::residual_check_with(catalan_interval(catalan_terms), n, series_K);
}

// All rows n = 0..n_max sharing one Catalan enclosure.
inline std::vector<ResidualCheck> residual_rows(long n_max, long series_K, long catalan_terms) {
    const Interval g = catalan_interval(catalan_terms);
    std::vector<ResidualCheck> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) rows.push_back(detail::residual_check_with(g, n, series_K));
    return rows;
}

} // namespace catalan

#endif
