#ifndef CATALAN_HYPERGEOMETRIC_HPP
#define CATALAN_HYPERGEOMETRIC_HPP

#include <catalan/bricks.hpp>
#include <catalan/jet.hpp>
#include <catalan/number_theory.hpp>
#include <catalan/parallel.hpp>
#include <catalan/rational.hpp>
#include <catalan/report.hpp>

#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace catalan {

// Parameter pack for the Andrews-type transformations: scalar type F is Rat
// for plain identities or a jet type for identities with formal parameters.
// q is present only for the q-case; the q = 1 evaluators ignore it.
template <class F>
struct HyperParamsT {
    int m = 1;
    F a{};
    std::vector<F> b; // b_1 .. b_{m+1}
    std::vector<F> c; // c_1 .. c_{m+1}
    int n = 0;        // truncation
    std::optional<Rat> q;

    void validate() const {
        if (m < 1) throw std::invalid_argument("HyperParams: m must be >= 1");
        if (n < 0) throw std::invalid_argument("HyperParams: n must be >= 0");
        if (b.size() != static_cast<std::size_t>(m + 1) || c.size() != static_cast<std::size_t>(m + 1))
            throw std::invalid_argument("HyperParams: b and c must have m+1 entries");
        if (q && *q == 0) throw std::invalid_argument("HyperParams: q must be nonzero");
    }
};

using HyperParams = HyperParamsT<Rat>;

namespace detail {

inline void ensure_divisible(const Rat& den, const char* what) {
    if (den == 0) throw std::domain_error(what);
}
template <class C> void ensure_divisible(const BasicJet<C>& den, const char* what) {
    if (den.is_zero()) throw std::domain_error(what);
}

// nondecreasing chains 0 <= i_1 <= ... <= i_m <= n, reported as idx[0..m] with idx[0] = 0
template <class Fn>
void for_each_chain(int m, int n, Fn&& fn) {
    std::vector<long> idx(static_cast<std::size_t>(m) + 1, 0);
    while (true) {
        fn(idx);
        int pos = m;
        while (pos >= 1) {
            const long cap = (pos == m) ? n : idx[static_cast<std::size_t>(pos) + 1];
            if (idx[static_cast<std::size_t>(pos)] < cap) break;
            --pos;
        }
        if (pos < 1) return;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j <= m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(pos)];
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Andrews' q-transformation between a very-well-poised series and a
// multidimensional sum. The very-well-poised parameter pair is evaluated via
// the telescoped form (1 - a q^{2k})/(1 - a), so everything stays rational.
// ---------------------------------------------------------------------------

inline Rat andrews_q_lhs(const HyperParams& p) {
    p.validate();
    if (!p.q) throw std::invalid_argument("andrews_q_lhs: q required");
    const Rat& q = *p.q;
    const Rat& a = p.a;
    Rat bc_prod(1);
    for (int i = 0; i <= p.m; ++i) {
        if (p.b[static_cast<std::size_t>(i)] == 0 || p.c[static_cast<std::size_t>(i)] == 0)
            throw std::domain_error("parameter on pole locus");
        bc_prod *= p.b[static_cast<std::size_t>(i)] * p.c[static_cast<std::size_t>(i)];
    }
    const Rat z = pow_rat(a, p.m + 1) * pow_rat(q, p.m + 1 + p.n) / bc_prod;

    Rat sum(0);
    for (int k = 0; k <= p.n; ++k) {
        const auto uk = static_cast<unsigned long>(k);
        Rat num = q_pochhammer(a, q, uk) * (1 - a * pow_rat(q, 2 * k));
        Rat den = (1 - a) * q_pochhammer(q, q, uk) *
                  q_pochhammer(pow_rat(q, p.n + 1) * a, q, uk);
        for (int i = 0; i <= p.m; ++i) {
            const Rat& bi = p.b[static_cast<std::size_t>(i)];
            const Rat& ci = p.c[static_cast<std::size_t>(i)];
            num *= q_pochhammer(bi, q, uk) * q_pochhammer(ci, q, uk);
            den *= q_pochhammer(q * a / bi, q, uk) * q_pochhammer(q * a / ci, q, uk);
        }
        num *= q_pochhammer(pow_rat(q, -p.n), q, uk);
        detail::ensure_divisible(den, "parameter on pole locus");
        sum += num / den * pow_rat(z, k);
    }
    return sum;
}

inline Rat andrews_q_rhs(const HyperParams& p) {
    p.validate();
    if (!p.q) throw std::invalid_argument("andrews_q_rhs: q required");
    const Rat& q = *p.q;
    const Rat& a = p.a;
    const auto un = static_cast<unsigned long>(p.n);
    const Rat& bm = p.b[static_cast<std::size_t>(p.m)];
    const Rat& cm = p.c[static_cast<std::size_t>(p.m)];
    if (bm == 0 || cm == 0 || a == 0) throw std::domain_error("parameter on pole locus");

    Rat pre_num = q_pochhammer(q * a, q, un) * q_pochhammer(q * a / (bm * cm), q, un);
    Rat pre_den = q_pochhammer(q * a / bm, q, un) * q_pochhammer(q * a / cm, q, un);
    detail::ensure_divisible(pre_den, "parameter on pole locus");

    Rat total(0);
    detail::for_each_chain(p.m, p.n, [&](const std::vector<long>& idx) {
        const auto im = static_cast<unsigned long>(idx[static_cast<std::size_t>(p.m)]);
        long power_a = 0, power_q = 0;
        for (int j = 1; j <= p.m - 1; ++j) power_a += idx[static_cast<std::size_t>(j)];
        for (int j = 1; j <= p.m; ++j) power_q += idx[static_cast<std::size_t>(j)];

        Rat num = pow_rat(a, power_a) * pow_rat(q, power_q) *
                  q_pochhammer(pow_rat(q, -p.n), q, im);
        Rat den = q_pochhammer(bm * cm / (a * pow_rat(q, p.n)), q, im);
        for (int j = 2; j <= p.m; ++j) {
            const Rat& bj = p.b[static_cast<std::size_t>(j - 1)];
            const Rat& cj = p.c[static_cast<std::size_t>(j - 1)];
            den *= pow_rat(bj * cj, idx[static_cast<std::size_t>(j - 1)]);
        }
        for (int k = 1; k <= p.m; ++k) {
            const Rat& bk = p.b[static_cast<std::size_t>(k - 1)];
            const Rat& ck = p.c[static_cast<std::size_t>(k - 1)];
            const auto ik = static_cast<unsigned long>(idx[static_cast<std::size_t>(k)]);
            const auto step = static_cast<unsigned long>(idx[static_cast<std::size_t>(k)] -
                                                         idx[static_cast<std::size_t>(k - 1)]);
            num *= q_pochhammer(q * a / (bk * ck), q, step) *
                   q_pochhammer(p.b[static_cast<std::size_t>(k)], q, ik) *
                   q_pochhammer(p.c[static_cast<std::size_t>(k)], q, ik);
            den *= q_pochhammer(q, q, step) * q_pochhammer(q * a / bk, q, ik) *
                   q_pochhammer(q * a / ck, q, ik);
        }
        detail::ensure_divisible(den, "parameter on pole locus");
        total += num / den;
    });
    return pre_num / pre_den * total;
}

// ---------------------------------------------------------------------------
// The q = 1 transformation, generic over Rat / jet scalars. The well-poised
// pair contributes (a/2+k)/(a/2) = (a+2k)/a per term.
// ---------------------------------------------------------------------------

template <class F>
F andrews_q1_lhs(const HyperParamsT<F>& p) {
    p.validate();
    const F& a = p.a;
    F sum{};
    for (int k = 0; k <= p.n; ++k) {
        const auto uk = static_cast<unsigned long>(k);
        const Rat scalar = pochhammer(Rat(-p.n), uk) / Rat(factorial(uk));
        F num = pochhammer(a, uk) * (a + Rat(2 * k)) * scalar;
        F den = a * pochhammer(a + Rat(1 + p.n), uk);
        for (int i = 0; i <= p.m; ++i) {
            const F& bi = p.b[static_cast<std::size_t>(i)];
            const F& ci = p.c[static_cast<std::size_t>(i)];
            num = num * pochhammer(bi, uk) * pochhammer(ci, uk);
            den = den * pochhammer(a - bi + 1L, uk) * pochhammer(a - ci + 1L, uk);
        }
        detail::ensure_divisible(den, "parameter on pole locus");
        sum = sum + num / den;
    }
    return sum;
}

template <class F>
F andrews_q1_rhs(const HyperParamsT<F>& p) {
    p.validate();
    const F& a = p.a;
    const auto un = static_cast<unsigned long>(p.n);
    const F& bm = p.b[static_cast<std::size_t>(p.m)];
    const F& cm = p.c[static_cast<std::size_t>(p.m)];

    F pre_num = pochhammer(a + 1L, un) * pochhammer(a - bm - cm + 1L, un);
    F pre_den = pochhammer(a - bm + 1L, un) * pochhammer(a - cm + 1L, un);
    detail::ensure_divisible(pre_den, "parameter on pole locus");

    F total{};
    detail::for_each_chain(p.m, p.n, [&](const std::vector<long>& idx) {
        const auto im = static_cast<unsigned long>(idx[static_cast<std::size_t>(p.m)]);
        Rat scalar = pochhammer(Rat(-p.n), im);
        for (int k = 1; k <= p.m; ++k)
            scalar /= Rat(factorial(static_cast<unsigned long>(idx[static_cast<std::size_t>(k)] -
                                                               idx[static_cast<std::size_t>(k - 1)])));
        F num = one_like(a) * scalar;
        F den = pochhammer(bm + cm - a - Rat(p.n), im);
        for (int k = 1; k <= p.m; ++k) {
            const F& bk = p.b[static_cast<std::size_t>(k - 1)];
            const F& ck = p.c[static_cast<std::size_t>(k - 1)];
            const auto ik = static_cast<unsigned long>(idx[static_cast<std::size_t>(k)]);
            const auto step = static_cast<unsigned long>(idx[static_cast<std::size_t>(k)] -
                                                         idx[static_cast<std::size_t>(k - 1)]);
            num = num * pochhammer(a - bk - ck + 1L, step) *
                  pochhammer(p.b[static_cast<std::size_t>(k)], ik) *
                  pochhammer(p.c[static_cast<std::size_t>(k)], ik);
            den = den * pochhammer(a - bk + 1L, ik) * pochhammer(a - ck + 1L, ik);
        }
        detail::ensure_divisible(den, "parameter on pole locus");
        total = total + num / den;
    });
    return pre_num / pre_den * total;
}

// ---------------------------------------------------------------------------
// Terminating (generalized) hypergeometric sum, exact; jet-valued when any
// parameter is a jet. The sum runs k = 0..kmax; a nonpositive-integer upper
// parameter makes later terms vanish on its own.
// ---------------------------------------------------------------------------

template <class F>
F pfq_terminating(const std::vector<F>& upper, const std::vector<F>& lower, const Rat& z, long kmax) {
    if (upper.empty() && lower.empty()) throw std::invalid_argument("pfq_terminating: no parameters");
    const F& model = upper.empty() ? lower.front() : upper.front();
    F term = one_like(model);
    F sum = term;
    for (long k = 0; k < kmax; ++k) {
        for (const F& u : upper) term = term * (u + Rat(k));
        for (const F& l : lower) {
            F fac = l + Rat(k);
            detail::ensure_divisible(fac, "pole in series");
            term = term / fac;
        }
        term = term * (z / Rat(k + 1));
        sum = sum + term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// The very-well-poised 6F5 (argument -1) to 3F2 (argument 1) transformation.
// ---------------------------------------------------------------------------

template <class F>
F f6f5_lhs(const F& a, const F& b, const F& x, const F& y, int N) {
    detail::ensure_divisible(a, "parameter on pole locus");
    F sum{};
    for (int k = 0; k <= N; ++k) {
        const auto uk = static_cast<unsigned long>(k);
        const Rat scalar = pochhammer(Rat(-N), uk) / Rat(factorial(uk)) * pow_rat(Rat(-1), k);
        F num = pochhammer(a, uk) * (a + Rat(2 * k)) *
                pochhammer(b, uk) * pochhammer(x, uk) * pochhammer(y, uk) * scalar;
        F den = a * pochhammer(a - b + 1L, uk) * pochhammer(a - x + 1L, uk) *
                pochhammer(a - y + 1L, uk) * pochhammer(a + Rat(1 + N), uk);
        detail::ensure_divisible(den, "parameter on pole locus");
        sum = sum + num / den;
    }
    return sum;
}

template <class F>
F f6f5_rhs(const F& a, const F& b, const F& x, const F& y, int N) {
    const auto un = static_cast<unsigned long>(N);
    F pre_num = pochhammer(a + 1L, un) * pochhammer(a - x - y + 1L, un);
    F pre_den = pochhammer(a - x + 1L, un) * pochhammer(a - y + 1L, un);
    detail::ensure_divisible(pre_den, "parameter on pole locus");
    F minus_n = one_like(a) * Rat(-N);
    F lower1 = x + y - a - Rat(N);
    F lower2 = a - b + 1L;
    F f32 = pfq_terminating<F>({minus_n, x, y}, {lower1, lower2}, Rat(1), N);
    return pre_num / pre_den * f32;
}

template <class F>
IdentityCheck verify_6f5(const F& a, const F& b, const F& x, const F& y, int N) {
    IdentityCheck check;
    check.id = "6f5";
    {
        std::ostringstream os;
        os << "a=" << to_string(a) << " b=" << to_string(b) << " x=" << to_string(x)
           << " y=" << to_string(y) << " N=" << N;
        check.params = os.str();
    }
    F lhs = f6f5_lhs(a, b, x, y, N);
    F rhs = f6f5_rhs(a, b, x, y, N);
    check.lhs = to_string(lhs);
    check.rhs = to_string(rhs);
    check.equal = coeff_equal(lhs, rhs);
    return check;
}

// ---------------------------------------------------------------------------
// Identity checks and seeded fuzzing
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
std::string hyper_params_str(const HyperParamsT<F>& p) {
    std::ostringstream os;
    os << "m=" << p.m << " n=" << p.n << " a=" << to_string(p.a);
    if (p.q) os << " q=" << to_string(*p.q);
    os << " b=[";
    for (std::size_t i = 0; i < p.b.size(); ++i) os << (i ? "," : "") << to_string(p.b[i]);
    os << "] c=[";
    for (std::size_t i = 0; i < p.c.size(); ++i) os << (i ? "," : "") << to_string(p.c[i]);
    os << "]";
    return os.str();
}

// deterministic draws (no std::uniform_int_distribution: its mapping is
// implementation-defined, and byte-identical reruns are part of the contract)
inline long draw_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Rat draw_small_rat(std::mt19937_64& rng) {
    long num = 0;
    while (num == 0) num = draw_in(rng, -5, 5);
    return rat(num, draw_in(rng, 1, 5));
}

inline Rat draw_q(std::mt19937_64& rng) {
    static const Rat choices[] = {rat(1, 2), rat(2, 3), rat(3, 2), rat(2, 1)};
    return choices[draw_in(rng, 0, 3)];
}

inline std::mt19937_64 seeded_rng(unsigned long long seed, long m, long n, long trial) {
    std::seed_seq seq{static_cast<unsigned int>(seed & 0xffffffffu),
                      static_cast<unsigned int>(seed >> 32),
                      static_cast<unsigned int>(m), static_cast<unsigned int>(n),
                      static_cast<unsigned int>(trial)};
    return std::mt19937_64(seq);
}

inline bool qpoch_factor_vanishes(const Rat& x, const Rat& q, long len) {
    Rat xq = x;
    for (long i = 0; i < len; ++i, xq *= q)
        if (xq == 1) return true;
    return false;
}

inline bool andrews_q_pole_free(const HyperParams& p) {
    const Rat& q = *p.q;
    if (p.a == 0 || p.a == 1) return false;
    for (int i = 0; i <= p.m; ++i) {
        const Rat& bi = p.b[static_cast<std::size_t>(i)];
        const Rat& ci = p.c[static_cast<std::size_t>(i)];
        if (bi == 0 || ci == 0) return false;
        if (qpoch_factor_vanishes(q * p.a / bi, q, p.n)) return false;
        if (qpoch_factor_vanishes(q * p.a / ci, q, p.n)) return false;
    }
    if (qpoch_factor_vanishes(pow_rat(q, p.n + 1) * p.a, q, p.n)) return false;
    const Rat& bm = p.b[static_cast<std::size_t>(p.m)];
    const Rat& cm = p.c[static_cast<std::size_t>(p.m)];
    if (qpoch_factor_vanishes(bm * cm / (p.a * pow_rat(q, p.n)), q, p.n)) return false;
    return true;
}

template <class F>
bool poch_factor_vanishes_at_zero(const F& base, long len) {
    for (long i = 0; i < len; ++i) {
        F fac = base + Rat(i);
        if (constant_term_is_zero(fac)) return true;
    }
    return false;
}

template <class F>
bool andrews_q1_pole_free(const HyperParamsT<F>& p) {
    if (constant_term_is_zero(p.a)) return false;
    if (poch_factor_vanishes_at_zero<F>(p.a + Rat(1 + p.n), p.n)) return false;
    const F& bm = p.b[static_cast<std::size_t>(p.m)];
    const F& cm = p.c[static_cast<std::size_t>(p.m)];
    F tail = bm + cm - p.a - Rat(p.n);
    if (poch_factor_vanishes_at_zero<F>(tail, p.n)) return false;
    for (int i = 0; i <= p.m; ++i) {
        F db = p.a - p.b[static_cast<std::size_t>(i)] + 1L;
        F dc = p.a - p.c[static_cast<std::size_t>(i)] + 1L;
        if (poch_factor_vanishes_at_zero<F>(db, p.n)) return false;
        if (poch_factor_vanishes_at_zero<F>(dc, p.n)) return false;
    }
    return true;
}

} // namespace detail

inline IdentityCheck verify_andrews_q(const HyperParams& p) {
    IdentityCheck check;
    check.id = "andrews-q";
    check.params = detail::hyper_params_str(p);
    Rat lhs = andrews_q_lhs(p);
    Rat rhs = andrews_q_rhs(p);
    check.lhs = to_string(lhs);
    check.rhs = to_string(rhs);
    check.equal = (lhs == rhs);
    return check;
}

template <class F>
IdentityCheck verify_andrews_q1(const HyperParamsT<F>& p) {
    IdentityCheck check;
    check.id = "andrews-q1";
    check.params = detail::hyper_params_str(p);
    F lhs = andrews_q1_lhs(p);
    F rhs = andrews_q1_rhs(p);
    check.lhs = to_string(lhs);
    check.rhs = to_string(rhs);
    check.equal = coeff_equal(lhs, rhs);
    return check;
}

// Seeded two-sided fuzz of the q-transformation: `trials` accepted draws per
// (m, n) with m <= m_max, n <= n_max. Draws on a pole locus are redrawn and
// counted in `rejected`. Deterministic given the seed: each (m, n, trial)
// owns its own generator.
inline ScanReport fuzz_andrews_q(int m_max, int n_max, long trials, unsigned long long seed,
                                 int workers = 1) {
    ScanReport report;
    report.id = "andrews-q";
    report.ranges = "m in [1," + std::to_string(m_max) + "], n in [0," + std::to_string(n_max) +
                    "], trials per cell " + std::to_string(trials) + ", seed " + std::to_string(seed);

    std::vector<std::tuple<int, int, long>> cells;
    for (int m = 1; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            for (long t = 0; t < trials; ++t) cells.emplace_back(m, n, t);

    struct Slot {
        long long rejected = 0;
        std::vector<ScanFailure> failures;
    };
    std::vector<Slot> slots(cells.size());

    parallel_for_index(cells.size(), workers, [&](std::size_t i) {
        const auto [m, n, t] = cells[i];
        Slot& slot = slots[i];
        auto rng = detail::seeded_rng(seed, m, n, t);
        HyperParams p;
        p.m = m;
        p.n = n;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            p.a = detail::draw_small_rat(rng);
            p.q = detail::draw_q(rng);
            p.b.clear();
            p.c.clear();
            for (int j = 0; j <= m; ++j) {
                p.b.push_back(detail::draw_small_rat(rng));
                p.c.push_back(detail::draw_small_rat(rng));
            }
            if (!detail::andrews_q_pole_free(p)) {
                ++slot.rejected;
                continue;
            }
            Rat lhs = andrews_q_lhs(p);
            Rat rhs = andrews_q_rhs(p);
            if (lhs != rhs)
                slot.failures.push_back(ScanFailure{{{"params", detail::hyper_params_str(p)}},
                                                    to_string(lhs) + " != " + to_string(rhs)});
            return;
        }
        slot.failures.push_back(ScanFailure{{{"m", std::to_string(m)},
                                             {"n", std::to_string(n)},
                                             {"trial", std::to_string(t)}},
                                            "no pole-free draw found"});
    });

    report.trials = static_cast<long long>(cells.size());
    for (auto& slot : slots) {
        report.rejected += slot.rejected;
        for (auto& f : slot.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

// Seeded fuzz of the q = 1 transformation: per (m, n), `trials` rational draws
// plus `jet_trials` draws with jet-valued parameters (order-4 eps jets).
inline ScanReport fuzz_andrews_q1(int m_max, int n_max, long trials, long jet_trials,
                                  unsigned long long seed, int workers = 1) {
    ScanReport report;
    report.id = "andrews-q1";
    report.ranges = "m in [1," + std::to_string(m_max) + "], n in [0," + std::to_string(n_max) +
                    "], trials per cell " + std::to_string(trials) + "+" + std::to_string(jet_trials) +
                    " jet, seed " + std::to_string(seed);

    std::vector<std::tuple<int, int, long>> cells;
    for (int m = 1; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            for (long t = 0; t < trials + jet_trials; ++t) cells.emplace_back(m, n, t);

    struct Slot {
        long long rejected = 0;
        std::vector<ScanFailure> failures;
    };
    std::vector<Slot> slots(cells.size());

    parallel_for_index(cells.size(), workers, [&](std::size_t i) {
        const auto [m, n, t] = cells[i];
        Slot& slot = slots[i];
        auto rng = detail::seeded_rng(seed ^ 0x9e3779b97f4a7c15ull, m, n, t);
        const bool jet_draw = t >= trials;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            if (!jet_draw) {
                HyperParams p;
                p.m = m;
                p.n = n;
                p.a = detail::draw_small_rat(rng);
                p.b.clear();
                p.c.clear();
                for (int j = 0; j <= m; ++j) {
                    p.b.push_back(detail::draw_small_rat(rng));
                    p.c.push_back(detail::draw_small_rat(rng));
                }
                if (!detail::andrews_q1_pole_free(p)) {
                    ++slot.rejected;
                    continue;
                }
                Rat lhs = andrews_q1_lhs(p);
                Rat rhs = andrews_q1_rhs(p);
                if (lhs != rhs)
                    slot.failures.push_back(ScanFailure{{{"params", detail::hyper_params_str(p)}},
                                                        to_string(lhs) + " != " + to_string(rhs)});
                return;
            }
            const Jet eps = Jet::var(4);
            auto draw_param = [&](bool force_jet) -> Jet {
                Rat base = detail::draw_small_rat(rng);
                if (force_jet || rng() % 2 == 0)
                    return Jet::exact_constant(base) + eps * detail::draw_small_rat(rng);
                return Jet::exact_constant(base);
            };
            HyperParamsT<Jet> p;
            p.m = m;
            p.n = n;
            p.a = draw_param(true);
            p.b.clear();
            p.c.clear();
            for (int j = 0; j <= m; ++j) {
                p.b.push_back(draw_param(false));
                p.c.push_back(draw_param(false));
            }
            if (!detail::andrews_q1_pole_free(p)) {
                ++slot.rejected;
                continue;
            }
            Jet lhs = andrews_q1_lhs(p);
            Jet rhs = andrews_q1_rhs(p);
            if (!jets_agree_through(lhs, rhs, 3))
                slot.failures.push_back(ScanFailure{{{"params", detail::hyper_params_str(p)}},
                                                    to_string(lhs) + " != " + to_string(rhs)});
            return;
        }
        slot.failures.push_back(ScanFailure{{{"m", std::to_string(m)},
                                             {"n", std::to_string(n)},
                                             {"trial", std::to_string(t)}},
                                            "no pole-free draw found"});
    });

    report.trials = static_cast<long long>(cells.size());
    for (auto& slot : slots) {
        report.rejected += slot.rejected;
        for (auto& f : slot.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

// Seeded fuzz of the 6F5 transformation over N <= N_max, rational and
// jet-valued draws.
inline ScanReport fuzz_6f5(int N_max, long trials, long jet_trials, unsigned long long seed,
                           int workers = 1) {
    ScanReport report;
    report.id = "6f5";
    report.ranges = "N in [0," + std::to_string(N_max) + "], trials per N " + std::to_string(trials) +
                    "+" + std::to_string(jet_trials) + " jet, seed " + std::to_string(seed);

    std::vector<std::pair<int, long>> cells;
    for (int N = 0; N <= N_max; ++N)
        for (long t = 0; t < trials + jet_trials; ++t) cells.emplace_back(N, t);

    struct Slot {
        long long rejected = 0;
        std::vector<ScanFailure> failures;
    };
    std::vector<Slot> slots(cells.size());

    parallel_for_index(cells.size(), workers, [&](std::size_t i) {
        const auto [N, t] = cells[i];
        Slot& slot = slots[i];
        auto rng = detail::seeded_rng(seed ^ 0xda942042e4dd58b5ull, N, 0, t);
        const bool jet_draw = t >= trials;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            auto pole_free = [&](auto const& a, auto const& b, auto const& x, auto const& y) {
                using FF = std::remove_cvref_t<decltype(a)>;
                if (constant_term_is_zero(a)) return false;
                if (detail::poch_factor_vanishes_at_zero<FF>(a - b + 1L, N)) return false;
                if (detail::poch_factor_vanishes_at_zero<FF>(a - x + 1L, N)) return false;
                if (detail::poch_factor_vanishes_at_zero<FF>(a - y + 1L, N)) return false;
                if (detail::poch_factor_vanishes_at_zero<FF>(a + Rat(1 + N), N)) return false;
                FF l1 = x + y - a - Rat(N);
                if (detail::poch_factor_vanishes_at_zero<FF>(l1, N)) return false;
                return true;
            };
            if (!jet_draw) {
                Rat a = detail::draw_small_rat(rng), b = detail::draw_small_rat(rng);
                Rat x = detail::draw_small_rat(rng), y = detail::draw_small_rat(rng);
                if (!pole_free(a, b, x, y)) {
                    ++slot.rejected;
                    continue;
                }
                IdentityCheck check = verify_6f5(a, b, x, y, N);
                if (!check.equal)
                    slot.failures.push_back(
                        ScanFailure{{{"params", check.params}}, check.lhs + " != " + check.rhs});
                return;
            }
            const Jet eps = Jet::var(4);
            auto draw_param = [&](bool force_jet) -> Jet {
                Rat base = detail::draw_small_rat(rng);
                if (force_jet || rng() % 2 == 0)
                    return Jet::exact_constant(base) + eps * detail::draw_small_rat(rng);
                return Jet::exact_constant(base);
            };
            Jet a = draw_param(true), b = draw_param(false), x = draw_param(false), y = draw_param(false);
            if (!pole_free(a, b, x, y)) {
                ++slot.rejected;
                continue;
            }
            IdentityCheck check = verify_6f5(a, b, x, y, N);
            if (!check.equal)
                slot.failures.push_back(
                    ScanFailure{{{"params", check.params}}, check.lhs + " != " + check.rhs});
            return;
        }
        slot.failures.push_back(ScanFailure{{{"N", std::to_string(N)}, {"trial", std::to_string(t)}},
                                            "no pole-free draw found"});
    });

    report.trials = static_cast<long long>(cells.size());
    for (auto& slot : slots) {
        report.rejected += slot.rejected;
        for (auto& f : slot.failures) report.failures.push_back(std::move(f));
    }
    return report;
}

// ---------------------------------------------------------------------------
// The j-sum identity behind the b_n analysis, verified two-sidedly as jets.
// ---------------------------------------------------------------------------

// Summand of the linear-form coefficient sums:
// (n/2 - j + eps) (n!/((1-eps)_j (1+eps)_{n-j}))^3 binom(n+j-1/2-eps, n) binom(2n-j-1/2+eps, n)
inline Jet s1_summand_jet(long n, long j, long order) {
    const Jet eps = Jet::var(order);
    const auto un = static_cast<unsigned long>(n);
    Jet core = Jet::exact_constant(Rat(factorial(un))) /
               (pochhammer(1 - eps, static_cast<unsigned long>(j)) *
                pochhammer(1 + eps, static_cast<unsigned long>(n - j)));
    Jet b1 = gen_binomial(eps * Rat(-1) + rat(2 * (n + j) - 1, 2), un);
    Jet b2 = gen_binomial(eps + rat(2 * (2 * n - j) - 1, 2), un);
    return (eps + rat(n - 2 * j, 2)) * core.pow(3) * b1 * b2;
}

inline Jet s1_lhs_jet(long n, long k, long order) {
    Jet sum = Jet::zero_to(order + 1);
    for (long j = k; j <= n; ++j) sum = sum + s1_summand_jet(n, j, order);
    return sum;
}

inline Jet s1_rhs_jet(long n, long k, long order) {
    const Jet eps = Jet::var(order);
    const auto uk = static_cast<unsigned long>(k);
    const auto unk = static_cast<unsigned long>(n - k);
    const Jet common = pochhammer(rat(1, 2) - eps, static_cast<unsigned long>(n)) /
                       (pochhammer(rat(1, 2) - eps, uk) * pochhammer(1 + eps, unk));
    const Rat four_pow = pow_rat(Rat(4), k - 1);

    Jet total = Jet::zero_to(order + 1);
    for (long i1 = 0; i1 <= n - k; ++i1)
        for (long i2 = i1; i2 <= n - k; ++i2)
            for (long i3 = i2; i3 <= n - k; ++i3) {
                Rat scalar = rat(factorial(static_cast<unsigned long>(i3)),
                                 factorial(static_cast<unsigned long>(i1)) *
                                     factorial(static_cast<unsigned long>(i2 - i1)) *
                                     factorial(static_cast<unsigned long>(i3 - i2)));
                if (i2 % 2 != 0) scalar = -scalar;
                Jet t = common * scalar;
                t = t * pochhammer(-eps + rat(2 * n + 1, 2), static_cast<unsigned long>(k + i1)) /
                    pochhammer(1 - eps, static_cast<unsigned long>(k + i1));
                t = t * pochhammer(eps + rat(2 * (n + i1 - i2) + 1, 2), static_cast<unsigned long>(n - k - i1)) /
                    pochhammer(1 + eps, static_cast<unsigned long>(n - k - i1));
                t = t * Rat(factorial(static_cast<unsigned long>(n))) /
                    (pochhammer(1 - eps, static_cast<unsigned long>(k + i2)) *
                     pochhammer(1 + eps, static_cast<unsigned long>(n - k - i2)));
                t = t * brick_r3(n, i1, i2, eps) * brick_r4(n, i3, eps);
                t = t * brick_r5(n, k, i2, i3, eps) / four_pow;
                total = total + t;
            }
    // prefactor -(1/2)(k - eps - 1/2)
    return (eps - rat(2 * k - 1, 2)) * rat(1, 2) * total;
}

inline IdentityCheck verify_s1(long n, long k, long order) {
    if (!(1 <= k && k <= n)) throw std::invalid_argument("verify_s1: need 1 <= k <= n");
    if (order < 3) throw std::invalid_argument("verify_s1: order must be >= 3");
    IdentityCheck check;
    check.id = "s1";
    check.params = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " order=" + std::to_string(order);
    Jet lhs = s1_lhs_jet(n, k, order + 1);
    Jet rhs = s1_rhs_jet(n, k, order + 1);
    check.lhs = to_string(lhs);
    check.rhs = to_string(rhs);
    check.equal = jets_agree_through(lhs, rhs, order);
    return check;
}

// All (n, k) with 1 <= k <= n <= n_max, coefficient-wise through eps^order.
inline ScanReport verify_s1_range(long n_max, long order, int workers = 1) {
    ScanReport report;
    report.id = "s1";
    report.ranges = "1 <= k <= n <= " + std::to_string(n_max) + ", order " + std::to_string(order);

    std::vector<std::pair<long, long>> cells;
    for (long n = 1; n <= n_max; ++n)
        for (long k = 1; k <= n; ++k) cells.emplace_back(n, k);

    std::vector<std::vector<ScanFailure>> slots(cells.size());
    parallel_for_index(cells.size(), workers, [&](std::size_t i) {
        const auto [n, k] = cells[i];
        IdentityCheck check = verify_s1(n, k, order);
        if (!check.equal)
            slots[i].push_back(ScanFailure{{{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                                           check.lhs + " != " + check.rhs});
    });

    report.trials = static_cast<long long>(cells.size());
    for (auto& slot : slots)
        for (auto& f : slot) report.failures.push_back(std::move(f));
    return report;
}

} // namespace catalan

#endif
