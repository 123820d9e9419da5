#ifndef CATALAN_JET_HPP
#define CATALAN_JET_HPP

#include <catalan/number_theory.hpp>
#include <catalan/rational.hpp>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace catalan {

template <class C> class BasicJet;

// Coefficient-ring hooks. Rat is the base case; BasicJet<C> recurses, which is
// what makes two-stage jets (an outer variable over an inner jet ring) work.
inline bool coeff_is_zero(const Rat& x) { return x == 0; }
inline Rat coeff_inverse(const Rat& x) {
    if (x == 0) throw std::domain_error("jet division by zero");
    return 1 / x;
}
inline bool coeff_equal(const Rat& a, const Rat& b) { return a == b; }
inline std::string coeff_str(const Rat& x) { return x.get_str(); }

template <class C> bool coeff_is_zero(const BasicJet<C>& j);
template <class C> BasicJet<C> coeff_inverse(const BasicJet<C>& j);
template <class C> bool coeff_equal(const BasicJet<C>& a, const BasicJet<C>& b);
template <class C> std::string coeff_str(const BasicJet<C>& j);

namespace detail {

template <class C> struct coeff_maker {
    template <class S> static C make(const S& s) { return C(s); }
};
template <class C> struct coeff_maker<BasicJet<C>> {
    template <class S> static BasicJet<C> make(const S& s) {
        if constexpr (std::same_as<std::remove_cvref_t<S>, BasicJet<C>>) {
            return s;
        } else {
            return BasicJet<C>::exact_constant(coeff_maker<C>::make(s));
        }
    }
};

} // namespace detail

// Truncated Laurent series in one formal variable with exact coefficients.
//
// A jet represents f + O(eps^known_end()): coefficients of
// eps^valuation() .. eps^{known_end()-1} are known exactly (those beyond the
// stored list are exactly zero), everything from eps^known_end() on is
// unknown. Exact values — scalars, the variable, polynomials in it — carry an
// unbounded window (known_end() == exact_end()); truncation enters only
// through var(order) and propagates through arithmetic, so series inversion
// always has a definite order to work to and coefficient extraction can
// refuse out-of-window requests.
//
// The zero jet is a distinguished value (empty coefficient list) that still
// carries its O(eps^known_end()) bound; a nonzero jet's valuation is tight
// (leading coefficient nonzero).
template <class C>
class BasicJet {
public:
    BasicJet() : val_(exact_end()), end_(exact_end()) {} // exact zero

    static constexpr long exact_end() { return std::numeric_limits<long>::max() / 4; }

    // The variable eps, retaining `order` coefficients (exponents 1..order).
    static BasicJet var(long order) {
        if (order < 1) throw std::invalid_argument("jet order must be >= 1");
        BasicJet j;
        j.val_ = 1;
        j.end_ = 1 + order;
        j.coeffs_.assign(1, detail::coeff_maker<C>::make(1L));
        return j;
    }

    static BasicJet constant(C value, long order) {
        if (order < 1) throw std::invalid_argument("jet order must be >= 1");
        return exact_constant(std::move(value)).truncated_to_end(order);
    }

    static BasicJet exact_constant(C value) {
        BasicJet j;
        if (coeff_is_zero(value)) return j;
        j.val_ = 0;
        j.end_ = exact_end();
        j.coeffs_.assign(1, std::move(value));
        return j;
    }

    // The zero jet known to vanish through eps^{end-1}, i.e. O(eps^end).
    static BasicJet zero_to(long end) {
        BasicJet j;
        j.val_ = end;
        j.end_ = end;
        return j;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return end_ == exact_end(); }
    long valuation() const { return val_; } // for the zero jet: the O() bound
    long known_end() const { return end_; }
    long order() const { return end_ - val_; } // retained coefficient count (huge when exact)
    long stored_end() const { return val_ + static_cast<long>(coeffs_.size()); } // exactly zero from here to known_end()

    const C& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero jet");
        return coeffs_.front();
    }

    // Coefficient of eps^e; exact zero outside the stored list, refused at or
    // beyond the retained window.
    C coeff(long e) const {
        if (e >= end_) throw std::out_of_range("insufficient jet order");
        if (is_zero() || e < val_ || e >= stored_end()) return C{};
        return coeffs_[static_cast<std::size_t>(e - val_)];
    }

    // H-th derivative at 0, i.e. H! * coeff(H). Refuses poles and
    // out-of-window requests loudly.
    C derivative_at_zero(long H) const {
        if (H < 0) throw std::invalid_argument("negative derivative order");
        if (!is_zero() && val_ < 0) throw std::domain_error("pole at eps=0");
        return coeff(H) * Rat(factorial(static_cast<unsigned long>(H)));
    }

    BasicJet operator-() const {
        BasicJet j = *this;
        for (C& c : j.coeffs_) c = -c;
        return j;
    }

    friend BasicJet operator+(const BasicJet& a, const BasicJet& b) {
        const long end = std::min(a.end_, b.end_);
        if (a.is_zero()) return b.truncated_to_end(end);
        if (b.is_zero()) return a.truncated_to_end(end);
        const long lo = std::min(a.val_, b.val_);
        if (end <= lo) return zero_to(end);
        const long hi = std::min(end, std::max(a.stored_end(), b.stored_end()));
        BasicJet j;
        j.val_ = lo;
        j.end_ = end;
        j.coeffs_.reserve(static_cast<std::size_t>(hi - lo));
        for (long e = lo; e < hi; ++e) j.coeffs_.push_back(a.coeff_in(e) + b.coeff_in(e));
        j.normalize();
        return j;
    }

    friend BasicJet operator-(const BasicJet& a, const BasicJet& b) { return a + (-b); }

    friend BasicJet operator*(const BasicJet& a, const BasicJet& b) {
        const long end = std::min(end_plus(a.val_, b.end_), end_plus(b.val_, a.end_));
        if (a.is_zero() || b.is_zero()) return zero_to(end);
        BasicJet j;
        j.val_ = a.val_ + b.val_;
        j.end_ = end;
        const long size = std::min(end - j.val_, a.stored_size() + b.stored_size() - 1);
        j.coeffs_.reserve(static_cast<std::size_t>(size));
        for (long t = 0; t < size; ++t) {
            const long ilo = std::max<long>(0, t - b.stored_size() + 1);
            const long ihi = std::min<long>(t, a.stored_size() - 1);
            C acc = a.coeffs_[static_cast<std::size_t>(ilo)] * b.coeffs_[static_cast<std::size_t>(t - ilo)];
            for (long i = ilo + 1; i <= ihi; ++i)
                acc = acc + a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(t - i)];
            j.coeffs_.push_back(std::move(acc));
        }
        j.normalize();
        return j;
    }

    // Multiplicative inverse: shift the valuation by -val and invert the unit
    // part by the power-series recurrence, to the window the operand carries.
    BasicJet inverse() const {
        if (is_zero()) throw std::domain_error("jet division by zero");
        if (is_exact() && stored_size() > 1)
            throw std::logic_error("inverse of an untruncated polynomial; truncate first");
        BasicJet j;
        j.val_ = -val_;
        j.end_ = is_exact() ? exact_end() : end_ - 2 * val_;
        const long w = is_exact() ? 1 : end_ - val_;
        j.coeffs_.reserve(static_cast<std::size_t>(w));
        const C inv0 = coeff_inverse(coeffs_[0]);
        j.coeffs_.push_back(inv0);
        for (long t = 1; t < w; ++t) {
            const long ihi = std::min<long>(t, stored_size() - 1);
            C acc{};
            bool first = true;
            for (long i = 1; i <= ihi; ++i) {
                if (first) {
                    acc = coeffs_[static_cast<std::size_t>(i)] * j.coeffs_[static_cast<std::size_t>(t - i)];
                    first = false;
                } else {
                    acc = acc + coeffs_[static_cast<std::size_t>(i)] * j.coeffs_[static_cast<std::size_t>(t - i)];
                }
            }
            j.coeffs_.push_back(first ? C{} : -(inv0 * acc));
        }
        j.normalize();
        return j;
    }

    friend BasicJet operator/(const BasicJet& a, const BasicJet& b) { return a * b.inverse(); }

    BasicJet pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        BasicJet r = exact_constant(detail::coeff_maker<C>::make(1L));
        BasicJet base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    // --- scalar operations; scalars are exact (no truncation of their own) ---

    template <class S>
        requires(!std::same_as<std::remove_cvref_t<S>, BasicJet>)
    friend BasicJet operator+(const BasicJet& a, const S& s) {
        return a + exact_constant(detail::coeff_maker<C>::make(s));
    }
    template <class S>
        requires(!std::same_as<std::remove_cvref_t<S>, BasicJet>)
    friend BasicJet operator+(const S& s, const BasicJet& a) { return a + s; }
    template <class S>
        requires(!std::same_as<std::remove_cvref_t<S>, BasicJet>)
    friend BasicJet operator-(const BasicJet& a, const S& s) {
        return a + exact_constant(-detail::coeff_maker<C>::make(s));
    }
    template <class S>
        requires(!std::same_as<std::remove_cvref_t<S>, BasicJet>)
    friend BasicJet operator-(const S& s, const BasicJet& a) { return (-a) + s; }
    template <class S>
        requires(!std::same_as<std::remove_cvref_t<S>, BasicJet>)
    friend BasicJet operator*(const BasicJet& a, const S& s) {
        return a * exact_constant(detail::coeff_maker<C>::make(s));
    }
    template <class S>
        requires(!std::same_as<std::remove_cvref_t<S>, BasicJet>)
    friend BasicJet operator*(const S& s, const BasicJet& a) { return a * s; }
    template <class S>
        requires(!std::same_as<std::remove_cvref_t<S>, BasicJet>)
    friend BasicJet operator/(const BasicJet& a, const S& s) {
        return a * exact_constant(coeff_inverse(detail::coeff_maker<C>::make(s)));
    }
    template <class S>
        requires(!std::same_as<std::remove_cvref_t<S>, BasicJet>)
    friend BasicJet operator/(const S& s, const BasicJet& a) { return a.inverse() * s; }

    // Drop knowledge beyond eps^{end-1}.
    BasicJet truncated_to_end(long end) const {
        if (end >= end_) return *this;
        if (is_zero() || end <= val_) return zero_to(end);
        BasicJet j;
        j.val_ = val_;
        j.end_ = end;
        const long keep = std::min(end - val_, stored_size());
        j.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep));
        j.normalize();
        return j;
    }

private:
    static long end_plus(long a, long b) {
        if (a >= exact_end() || b >= exact_end()) return exact_end();
        return a + b;
    }

    long stored_size() const { return static_cast<long>(coeffs_.size()); }

    // coefficient for exponents known to be inside [min valuation, stored hi)
    C coeff_in(long e) const {
        if (e < val_ || e >= stored_end()) return C{};
        return coeffs_[static_cast<std::size_t>(e - val_)];
    }

    // Restore tight valuation / trim stored zero tail; the window survives.
    void normalize() {
        std::size_t strip = 0;
        while (strip < coeffs_.size() && coeff_is_zero(coeffs_[strip])) ++strip;
        if (strip == coeffs_.size()) {
            coeffs_.clear();
            val_ = end_;
            return;
        }
        if (strip > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(strip));
            val_ += static_cast<long>(strip);
        }
        while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    long val_;
    long end_;
    std::vector<C> coeffs_;
};

using Jet = BasicJet<Rat>;

template <class C> bool coeff_is_zero(const BasicJet<C>& j) { return j.is_zero(); }
template <class C> BasicJet<C> coeff_inverse(const BasicJet<C>& j) { return j.inverse(); }

// Coefficient-wise agreement over the common retained window. Coefficients
// beyond either stored list are exactly zero, so only the stored stretch needs
// comparing.
template <class C>
bool coeff_equal(const BasicJet<C>& a, const BasicJet<C>& b) {
    const long hi = std::min(a.known_end(), b.known_end());
    const long stop = std::min(hi, std::max(a.stored_end(), b.stored_end()));
    const long lo = std::min({a.valuation(), b.valuation(), stop});
    for (long e = lo; e < stop; ++e)
        if (!coeff_equal(a.coeff(e), b.coeff(e))) return false;
    return true;
}

template <class C>
bool jets_agree(const BasicJet<C>& a, const BasicJet<C>& b) {
    return coeff_equal(a, b);
}

// Agreement with a guaranteed window: both jets must retain eps^e.
template <class C>
bool jets_agree_through(const BasicJet<C>& a, const BasicJet<C>& b, long e) {
    if (a.known_end() <= e || b.known_end() <= e) return false;
    return coeff_equal(a, b);
}

// Generic multiplicative identity matching the shape of a model value; lets
// code templated over Rat-or-jet scalars build accumulators.
inline Rat one_like(const Rat&) { return Rat(1); }
template <class C> BasicJet<C> one_like(const BasicJet<C>&) {
    return BasicJet<C>::exact_constant(detail::coeff_maker<C>::make(1L));
}

// Whether the value vanishes when every jet variable is set to 0. A pole
// (negative valuation) does not vanish.
inline bool constant_term_is_zero(const Rat& x) { return x == 0; }
template <class C> bool constant_term_is_zero(const BasicJet<C>& j) {
    if (j.is_zero() || j.valuation() > 0) return true;
    if (j.valuation() < 0) return false;
    return constant_term_is_zero(j.coeff(0));
}

template <class C>
BasicJet<C> pochhammer(const BasicJet<C>& base, unsigned long k) {
    BasicJet<C> r = BasicJet<C>::exact_constant(detail::coeff_maker<C>::make(1L));
    BasicJet<C> f = base;
    for (unsigned long i = 0; i < k; ++i, f = f + 1L) r = r * f;
    return r;
}

template <class C>
BasicJet<C> gen_binomial(const BasicJet<C>& alpha, unsigned long k) {
    return pochhammer(alpha - Rat(static_cast<long>(k)) + 1L, k) / Rat(factorial(k));
}

template <class C>
std::string coeff_str(const BasicJet<C>& j) {
    std::ostringstream os;
    if (j.is_zero()) {
        os << "0";
    } else {
        bool first = true;
        for (long e = j.valuation(); e < j.stored_end(); ++e) {
            C c = j.coeff(e);
            if (coeff_is_zero(c)) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c) << ")";
            if (e != 0) os << "*eps^" << e;
        }
        if (first) os << "0";
    }
    if (!j.is_exact()) os << " + O(eps^" << j.known_end() << ")";
    return os.str();
}

template <class C>
std::string to_string(const BasicJet<C>& j) {
    return coeff_str(j);
}

} // namespace catalan

#endif
