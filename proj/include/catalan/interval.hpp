#ifndef CATALAN_INTERVAL_HPP
#define CATALAN_INTERVAL_HPP

#include <catalan/rational.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace catalan {

// Closed interval with exact rational endpoints; all operations are exact.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool overlaps(const Interval& other) const { return !(hi < other.lo || other.hi < lo); }

    Interval scaled(const Rat& a) const {
        if (a >= 0) return Interval(a * lo, a * hi);
        return Interval(a * hi, a * lo);
    }
    Interval shifted(const Rat& b) const { return Interval(lo + b, hi + b); }
};

inline std::string to_string(const Interval& iv) {
    return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

} // namespace catalan

#endif
