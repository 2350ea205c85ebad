#include "yf/interval.hpp"

#include <algorithm>

namespace yf {

Interval operator*(const Interval& a, const Interval& b) {
    const BigRat c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_, c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
    return {std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4})};
}

Interval operator*(const BigRat& s, const Interval& a) {
    if (s >= 0)
        return {s * a.lo_, s * a.hi_};
    return {s * a.hi_, s * a.lo_};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0 && b.hi_ >= 0)
        throw internal_error("interval division by an interval containing zero");
    const BigRat c1 = a.lo_ / b.lo_, c2 = a.lo_ / b.hi_, c3 = a.hi_ / b.lo_, c4 = a.hi_ / b.hi_;
    return {std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4})};
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    BigRat lo = std::max(a.lo(), b.lo());
    BigRat hi = std::min(a.hi(), b.hi());
    if (lo > hi)
        return std::nullopt;
    return Interval(std::move(lo), std::move(hi));
}

Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

namespace {

BigRat rat_pow_int(const BigRat& base, unsigned long e) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return make_rat(num, den);
}

} // namespace

Interval rational_pow(const BigRat& base, const BigRat& exponent, unsigned bits) {
    if (base <= 0 || exponent < 0)
        throw precondition_error("rational_pow: base must be > 0 and exponent >= 0");
    if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p())
        throw precondition_error("rational_pow: exponent out of supported range");
    const unsigned long p = exponent.get_num().get_ui();
    const unsigned long q = exponent.get_den().get_ui();
    const BigRat t = rat_pow_int(base, p);
    if (q == 1)
        return Interval::point(t);
    // q-th root of t by bisection; root of a positive rational is in
    // [min(t,1), max(t,1)] since t^(1/q) lies between t and 1.
    BigRat lo = std::min(t, BigRat(1)), hi = std::max(t, BigRat(1));
    for (unsigned i = 0; i < bits && hi - lo > 0; ++i) {
        BigRat mid = (lo + hi) / 2;
        if (rat_pow_int(mid, q) <= t)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

Interval theorem_bound(std::size_t n, const BigRat& delta, unsigned bits) {
    if (delta <= 0 || delta >= 1)
        throw precondition_error("theorem_bound: delta must lie in (0,1)");
    if (n == 0)
        return Interval::point(BigRat(0));
    const BigRat exponent = delta * BigRat(static_cast<unsigned long>(n)) / 2;
    Interval core = rational_pow(make_rat(2, 3), exponent, bits);
    return BigRat(3 * static_cast<unsigned long>(n)) * core;
}

} // namespace yf
