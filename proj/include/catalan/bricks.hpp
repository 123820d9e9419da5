#ifndef CATALAN_BRICKS_HPP
#define CATALAN_BRICKS_HPP

#include <catalan/jet.hpp>
#include <catalan/number_theory.hpp>
#include <catalan/parallel.hpp>
#include <catalan/rational.hpp>
#include <catalan/report.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace catalan {

// Elementary brick R1(alpha, beta; t): (t+beta)_{alpha-beta}/(alpha-beta)! for
// alpha >= beta, else (beta-alpha-1)!/(t+alpha)_{beta-alpha}. In the second
// case the result is a Laurent jet when the denominator vanishes at eps = 0.
inline Jet brick_r1(long alpha, long beta, const Jet& t) {
    if (alpha >= beta) {
        const auto len = static_cast<unsigned long>(alpha - beta);
        return pochhammer(t + Rat(beta), len) / Rat(factorial(len));
    }
    const auto len = static_cast<unsigned long>(beta - alpha);
    Jet den = pochhammer(t + Rat(alpha), len);
    if (den.is_zero()) throw std::domain_error("degenerate brick");
    return Rat(factorial(len - 1)) / den;
}

// Elementary brick R2(alpha, beta; t) = 2^{2(alpha-beta)} (t+beta-1/2)_{alpha-beta}/(alpha-beta)!.
inline Jet brick_r2(long alpha, long beta, const Jet& t) {
    if (alpha < beta) throw std::invalid_argument("r2 requires alpha >= beta");
    const auto len = static_cast<unsigned long>(alpha - beta);
    return pochhammer(t + rat(2 * beta - 1, 2), len) * rat(pow_int(Int(4), len), factorial(len));
}

// Special bricks of the b_n analysis; ratios of Pochhammer products in eps.
inline Jet brick_r3(long n, long i1, long i2, const Jet& eps) {
    if (!(0 <= i1 && i1 <= i2 && i2 <= n)) throw std::invalid_argument("index out of range");
    const auto len = static_cast<unsigned long>(i2 - i1);
    const Rat base = rat(2 * (n + i1 - i2) + 1, 2); // n + i1 - i2 + 1/2
    return Jet::exact_constant(pochhammer(base, len)) / pochhammer(eps + base, len);
}

inline Jet brick_r4(long n, long i3, const Jet& eps) {
    if (!(0 <= i3 && i3 <= n)) throw std::invalid_argument("index out of range");
    const auto len = static_cast<unsigned long>(i3 + 1);
    const Rat base = rat(2 * (n - i3) - 1, 2); // n - 1/2 - i3
    return pochhammer(eps + base, len) / pochhammer(-eps + base, len);
}

inline Jet brick_r5(long n, long k, long i2, long i3, const Jet& eps) {
    if (!(1 <= k && k <= n && 0 <= i2 && i2 <= i3 && i3 <= n - k))
        throw std::invalid_argument("index out of range");
    Jet num = pochhammer(eps, static_cast<unsigned long>(i3 - i2)) *
              pochhammer(1 - 2 * eps, static_cast<unsigned long>(k + i2)) *
              pochhammer(eps + rat(1, 2), static_cast<unsigned long>(n - i3 - 1));
    Jet den = pochhammer(1 - 2 * eps, static_cast<unsigned long>(k - 1)) *
              pochhammer(eps + rat(1, 2), static_cast<unsigned long>(n - k - i3)) *
              pochhammer(1 - eps, static_cast<unsigned long>(k + i3));
    return num / den * Rat(pow_int(Int(4), static_cast<unsigned long>(k - 1)));
}

inline Jet brick_r6(long n, long k, long m1, long m2, const Jet& eps) {
    if (!(1 <= k && k <= n && 0 <= m2 && m2 < m1 && m1 <= n - k))
        throw std::invalid_argument("index out of range");
    Jet num = pochhammer(1 + eps, static_cast<unsigned long>(m1 - m2 - 1)) *
              pochhammer(1 - 2 * eps, static_cast<unsigned long>(k + m2)) *
              pochhammer(eps + rat(1, 2), static_cast<unsigned long>(n - m1 - 1));
    Jet den = pochhammer(1 - 2 * eps, static_cast<unsigned long>(k - 1)) *
              pochhammer(eps + rat(1, 2), static_cast<unsigned long>(n - k - m1)) *
              pochhammer(1 - eps, static_cast<unsigned long>(k + m1));
    return num / den * Rat(pow_int(Int(4), static_cast<unsigned long>(k - 1)));
}

struct IntRange {
    long lo = 0;
    long hi = 0; // inclusive
    long size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

namespace detail {

inline void note_failure(std::vector<ScanFailure>& out,
                         std::vector<std::pair<std::string, std::string>> params, const Rat& value) {
    out.push_back(ScanFailure{std::move(params), to_string(value)});
}

inline std::string range_str(const IntRange& r) {
    return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

} // namespace detail

// Scan of Lemma R1's two integrality claims:
//   alpha >= beta:            d_{alpha-beta}^H  * coeff_H( R1(alpha,beta; -k+eps) )        is an integer
//   alpha <= k <= beta-1:     d_{beta-alpha-1}^H * coeff_H( R1(alpha,beta; -k+eps)*eps )   is an integer,
// the (t+k) factor of the second claim being exactly eps at t = -k+eps.
inline ScanReport verify_lemma_r1(const IntRange& alpha_range, const IntRange& beta_range,
                                  const IntRange& k_range, long H_max, int workers = 1) {
    ScanReport report;
    report.id = "lemma-r1";
    report.ranges = "alpha in " + detail::range_str(alpha_range) + ", beta in " +
                    detail::range_str(beta_range) + ", k in " + detail::range_str(k_range) +
                    ", H <= " + std::to_string(H_max);

    std::vector<std::tuple<long, long, long>> tuples;
    for (long a = alpha_range.lo; a <= alpha_range.hi; ++a)
        for (long b = beta_range.lo; b <= beta_range.hi; ++b)
            for (long k = k_range.lo; k <= k_range.hi; ++k) tuples.emplace_back(a, b, k);

    struct Slot {
        long long trials = 0;
        std::vector<ScanFailure> failures;
    };
    std::vector<Slot> slots(tuples.size());

    parallel_for_index(tuples.size(), workers, [&](std::size_t i) {
        const auto [alpha, beta, k] = tuples[i];
        Slot& slot = slots[i];
        const Jet t = Jet::var(H_max + 2) - Rat(k);
        auto run_claim = [&](const Jet& value, long d_index, const char* claim) {
            const Int d = lcm_upto(static_cast<unsigned long>(d_index));
            for (long H = 0; H <= H_max; ++H) {
                ++slot.trials;
                const Rat scaled = value.coeff(H) * Rat(pow_int(d, static_cast<unsigned long>(H)));
                if (!is_integer(scaled))
                    detail::note_failure(slot.failures,
                                         {{"alpha", std::to_string(alpha)},
                                          {"beta", std::to_string(beta)},
                                          {"k", std::to_string(k)},
                                          {"H", std::to_string(H)},
                                          {"claim", claim}},
                                         scaled);
            }
        };
        if (alpha >= beta) {
            run_claim(brick_r1(alpha, beta, t), alpha - beta, "first");
        }
        if (alpha <= k && k <= beta - 1) {
            Jet value = brick_r1(alpha, beta, t) * Jet::var(H_max + 2);
            ++slot.trials;
            if (!value.is_zero() && value.valuation() < 0) {
                detail::note_failure(slot.failures,
                                     {{"alpha", std::to_string(alpha)},
                                      {"beta", std::to_string(beta)},
                                      {"k", std::to_string(k)},
                                      {"claim", "second/pole"}},
                                     Rat(0));
                return;
            }
            run_claim(value, beta - alpha - 1, "second");
        }
    });

    for (auto& slot : slots) {
        report.trials += slot.trials;
        for (auto& f : slot.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

// Scan of Lemma R2: d_{2(alpha-beta)}^H * coeff_H( R2(alpha,beta; -k+eps) ) is an integer.
inline ScanReport verify_lemma_r2(const IntRange& alpha_range, const IntRange& beta_range,
                                  const IntRange& k_range, long H_max, int workers = 1) {
    ScanReport report;
    report.id = "lemma-r2";
    report.ranges = "alpha in " + detail::range_str(alpha_range) + ", beta in " +
                    detail::range_str(beta_range) + " (alpha >= beta), k in " +
                    detail::range_str(k_range) + ", H <= " + std::to_string(H_max);

    std::vector<std::tuple<long, long, long>> tuples;
    for (long a = alpha_range.lo; a <= alpha_range.hi; ++a)
        for (long b = beta_range.lo; b <= beta_range.hi; ++b) {
            if (a < b) continue;
            for (long k = k_range.lo; k <= k_range.hi; ++k) tuples.emplace_back(a, b, k);
        }

    struct Slot {
        long long trials = 0;
        std::vector<ScanFailure> failures;
    };
    std::vector<Slot> slots(tuples.size());

    parallel_for_index(tuples.size(), workers, [&](std::size_t i) {
        const auto [alpha, beta, k] = tuples[i];
        Slot& slot = slots[i];
        const Jet value = brick_r2(alpha, beta, Jet::var(H_max + 2) - Rat(k));
        const Int d = lcm_upto(static_cast<unsigned long>(2 * (alpha - beta)));
        for (long H = 0; H <= H_max; ++H) {
            ++slot.trials;
            const Rat scaled = value.coeff(H) * Rat(pow_int(d, static_cast<unsigned long>(H)));
            if (!is_integer(scaled))
                detail::note_failure(slot.failures,
                                     {{"alpha", std::to_string(alpha)},
                                      {"beta", std::to_string(beta)},
                                      {"k", std::to_string(k)},
                                      {"H", std::to_string(H)}},
                                     scaled);
        }
    });

    for (auto& slot : slots) {
        report.trials += slot.trials;
        for (auto& f : slot.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

// Exhaustive scan of the R6 integrality claim:
// d_{2n}^{H+1} * coeff_H( R6(n,k,m1,m2; eps) ) is an integer for
// 1 <= k <= n, 0 <= m2 < m1 <= n-k, H <= H_max.
inline ScanReport verify_lemma_briques1(long n_max, long H_max, int workers = 1) {
    ScanReport report;
    report.id = "lemma-briques1";
    report.ranges = "n <= " + std::to_string(n_max) + ", all valid (k,m1,m2), H <= " + std::to_string(H_max);

    std::vector<std::tuple<long, long, long, long>> tuples;
    for (long n = 1; n <= n_max; ++n)
        for (long k = 1; k <= n; ++k)
            for (long m1 = 1; m1 <= n - k; ++m1)
                for (long m2 = 0; m2 < m1; ++m2) tuples.emplace_back(n, k, m1, m2);

    struct Slot {
        long long trials = 0;
        std::vector<ScanFailure> failures;
    };
    std::vector<Slot> slots(tuples.size());

    parallel_for_index(tuples.size(), workers, [&](std::size_t i) {
        const auto [n, k, m1, m2] = tuples[i];
        Slot& slot = slots[i];
        const Jet value = brick_r6(n, k, m1, m2, Jet::var(H_max + 2));
        const Int d = lcm_upto(static_cast<unsigned long>(2 * n));
        for (long H = 0; H <= H_max; ++H) {
            ++slot.trials;
            const Rat scaled = value.coeff(H) * Rat(pow_int(d, static_cast<unsigned long>(H + 1)));
            if (!is_integer(scaled))
                detail::note_failure(slot.failures,
                                     {{"n", std::to_string(n)},
                                      {"k", std::to_string(k)},
                                      {"m1", std::to_string(m1)},
                                      {"m2", std::to_string(m2)},
                                      {"H", std::to_string(H)}},
                                     scaled);
        }
    });

    for (auto& slot : slots) {
        report.trials += slot.trials;
        for (auto& f : slot.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

// The floor-bracket summand of the p-adic valuation analysis, on fractional
// parts N, K, M1, M2 in [0,1) with denominator p^ell; p_pow = 1/p^ell.
inline long padic_summand(const Rat& N, const Rat& K, const Rat& M1, const Rat& M2, const Rat& p_pow) {
    for (const Rat* x : {&N, &K, &M1, &M2})
        if (*x < 0 || *x >= 1) throw std::invalid_argument("padic_summand: fractional part outside [0,1)");
    if (p_pow <= 0 || p_pow > 1) throw std::invalid_argument("padic_summand: p_pow outside (0,1]");
    auto fl = [](const Rat& x) { return static_cast<long>(floor_rat(x).get_si()); };
    return fl(K + M2) + fl(M1 - M2 - p_pow) + (fl(2 * N - 2 * M1 - 2 * p_pow) - fl(N - M1 - p_pow)) -
           fl(K - p_pow) - fl(K + M1) - (fl(2 * N - 2 * K - 2 * M1) - fl(N - K - M1));
}

// Same summand derived from integer parameters: N = {n/p^ell} etc.
inline long padic_summand_at(long n, long k, long m1, long m2, const Prime& p, long ell) {
    if (ell < 1) throw std::invalid_argument("padic_summand_at: ell must be >= 1");
    const Int q = pow_int(p.value(), static_cast<unsigned long>(ell));
    auto frac = [&](long x) {
        Int r = Int(x) % q;
        if (r < 0) r += q;
        return rat(r, q);
    };
    return padic_summand(frac(n), frac(k), frac(m1), frac(m2), rat(Int(1), q));
}

// Exhaustive check that the summand is >= -1 over all fractional parts with
// denominator p^ell, p <= p_max prime, ell <= ell_max.
inline ScanReport verify_padic_bound(long p_max, long ell_max, int workers = 1) {
    ScanReport report;
    report.id = "padic";
    report.ranges = "p <= " + std::to_string(p_max) + ", ell <= " + std::to_string(ell_max);

    std::vector<std::pair<unsigned long, long>> cells;
    for (unsigned long p : primes_upto(static_cast<unsigned long>(std::max<long>(p_max, 0))))
        for (long ell = 1; ell <= ell_max; ++ell) cells.emplace_back(p, ell);

    struct Slot {
        long long trials = 0;
        std::vector<ScanFailure> failures;
    };
    std::vector<Slot> slots(cells.size());

    parallel_for_index(cells.size(), workers, [&](std::size_t i) {
        const auto [p, ell] = cells[i];
        Slot& slot = slots[i];
        long q = 1;
        for (long e = 0; e < ell; ++e) q *= static_cast<long>(p);
        const Rat p_pow = rat(1, q);
        std::vector<Rat> values;
        values.reserve(static_cast<std::size_t>(q));
        for (long v = 0; v < q; ++v) values.push_back(rat(v, q));
        for (const Rat& N : values)
            for (const Rat& K : values)
                for (const Rat& M1 : values)
                    for (const Rat& M2 : values) {
                        ++slot.trials;
                        const long s = padic_summand(N, K, M1, M2, p_pow);
                        if (s < -1)
                            detail::note_failure(slot.failures,
                                                 {{"p", std::to_string(p)},
                                                  {"ell", std::to_string(ell)},
                                                  {"N", to_string(N)},
                                                  {"K", to_string(K)},
                                                  {"M1", to_string(M1)},
                                                  {"M2", to_string(M2)}},
                                                 Rat(s));
                    }
    });

    for (auto& slot : slots) {
        report.trials += slot.trials;
        for (auto& f : slot.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

} // namespace catalan

#endif
