#pragma once

#include "yf/numeric.hpp"
#include "yf/word.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace yf {

// An exact count of down paths. Always >= 0.
using PathCount = BigInt;

// Number of down paths y -> x, by memoized recursion over down_neighbors,
// pruned by the common-suffix/rank order test. Independent of the closed
// form; serves as its oracle.
//
// Refuses (precondition_error) when rank(y) - rank(x) exceeds
// kBruteforceMaxSpan: the descendant census becomes infeasible long before
// that, and the closed form is the intended route.
inline constexpr std::size_t kBruteforceMaxSpan = 30;
PathCount d_bruteforce(const Word& x, const Word& y);

// Materialized down paths from y to x, each listed from y down to x.
// Throws precondition_error when the count exceeds cap.
std::vector<std::vector<Word>> enumerate_paths(const Word& x, const Word& y, std::uint64_t cap);

// The rational kernel of the closed-form path count.
//
// f(x,y,0) splits x at the unique suffix of digit sum y (0 when no such
// suffix exists) and multiplies the reciprocal digit partial sums of the two
// parts, the suffix part with alternating sign. For z > 0:
//   f(x1,0,z) = f(x1,0,0)
//   f(x1,y,z) = f(x1,y,0) + f(x,y-1,z-1)
//   f(x2,y,z) = f(x11,y,z+1) / (1-y), and 0 when y = 1.
// Memoized on (x,y,z). Requires y <= rank(x) and z <= length(x).
BigRat f_eval(const Word& x, std::size_t y, std::size_t z);

// Same recursion evaluated in double precision, for the approximate mode.
double f_eval_approx(const Word& x, std::size_t y, std::size_t z);

// Closed form: d(x,y) = sum_{i=0..rank(x)} f(x,i,h(x,y)) * prod_j (g(y,j)-i).
// Requires rank(y) >= rank(x). The result is checked to be a nonnegative
// integer; a non-integral value is an internal_error (formula transcription
// bug), surfaced loudly.
PathCount d_closed(const Word& x, const Word& y);

// d(eps,y) = prod_j g(y,j).
PathCount d_to_empty(const Word& y);

// Down paths a -> 2^k that delete exactly the 2s at the given 1-based
// right-to-left indices (strictly increasing, d(a)-k of them):
//   prod_{j=1..d(a)-k} (g'(a,i_j) + 2j - 2).
PathCount d_from_twos_fixed(const Word& a, std::size_t k, std::span<const std::size_t> deleted);

// d(2^k,a): 0 when d(a) < k, else the sum of d_from_twos_fixed over all
// index subsets of size d(a)-k.
PathCount d_from_twos(const Word& a, std::size_t k);

// The factorization d(eps, x'x'') = d(eps, x'') * d(eps, x'1^{|x''|}),
// returned as (whole, suffix_part, prefix_part).
struct FactorizationCheck {
    PathCount whole;
    PathCount suffix_part;
    PathCount prefix_part;
};
FactorizationCheck factorize_check(const Word& prefix, const Word& suffix);

// Drops all memoized state (f tables and brute-force counts).
void clear_path_count_caches();

} // namespace yf
