#pragma once

#include "yf/errors.hpp"
#include "yf/numeric.hpp"

#include <optional>

namespace yf {

// A certified enclosure [lo, hi] in exact rationals: the true real value of
// the quantity being computed lies inside. Width 0 means the value is exact.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(BigRat lo, BigRat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_)
            throw internal_error("interval with lo > hi");
    }
    static Interval point(BigRat v) {
        Interval i;
        i.lo_ = v;
        i.hi_ = std::move(v);
        return i;
    }

    const BigRat& lo() const { return lo_; }
    const BigRat& hi() const { return hi_; }
    BigRat width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const BigRat& v) const { return lo_ <= v && v <= hi_; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_};
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return {a.lo_ - b.hi_, a.hi_ - b.lo_};
    }
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator*(const BigRat& s, const Interval& a);
    // Requires 0 outside [b.lo, b.hi].
    friend Interval operator/(const Interval& a, const Interval& b);

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    BigRat lo_, hi_;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// Enclosure of base^(p/q) for base > 0 and exponent p/q >= 0, by bisection
// on the q-th root; exact (width 0) when q divides out. `bits` bounds the
// enclosure width by 2^-bits.
Interval rational_pow(const BigRat& base, const BigRat& exponent, unsigned bits = 64);

// The concentration reference curve 3n * ((2/3)^(delta/2))^n.
Interval theorem_bound(std::size_t n, const BigRat& delta, unsigned bits = 64);

} // namespace yf
