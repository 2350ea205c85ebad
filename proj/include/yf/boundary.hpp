#pragma once

#include "yf/infinite_word.hpp"
#include "yf/interval.hpp"
#include "yf/numeric.hpp"
#include "yf/path_count.hpp"
#include "yf/word.hpp"

#include <optional>
#include <vector>

namespace yf {

// pi(x) = prod over { i : g(x,i) > 1 } of (g(x,i)-1)/g(x,i); in (0,1].
BigRat pi_finite(const Word& x);

// Enclosure of pi(w) of width <= tol. Exact for finite_twos; [0,0] when
// sum 1/g diverges (pi = 0 analytically); otherwise a certified truncation
// partial_product * [1 - tail_sum_bound, 1].
Interval pi_infinite(const InfiniteWordSpec& w, const BigRat& tol);

Positivity is_positive_boundary(const InfiniteWordSpec& w);

// h(v,w) and h'(v,w) against the infinite word, computed from w_{#v+1};
// a longer suffix match is impossible.
std::size_t common_suffix_len(const Word& v, const InfiniteWordSpec& w);
std::size_t common_suffix_rank(const Word& v, const InfiniteWordSpec& w);

// Finite-stage measure mu_w(v,m) = d(eps,v) d(v,w_m) / d(eps,w_m); exact,
// 0 when rank(w_m) < rank(v).
BigRat mu_finite(const InfiniteWordSpec& w, const Word& v, std::size_t m);

// Limit measure mu_w(v) = d(eps,v) sum_i f(v,i,h(v,w)) prod_j (g(w,j)-i)/g(w,j),
// enclosed to width <= tol and clamped to [0,1] after a nonempty-intersection
// check. Exact (width 0) when d(w) is finite or when sum 1/g diverges.
Interval mu_limit(const InfiniteWordSpec& w, const Word& v, const BigRat& tol);

// The same enclosure at a fixed truncation depth: the first J clock values
// exactly, the rest through the certified tail bound. mu_finite(w,v,m) always
// lies inside the enclosure at depth d(w_m), which is how finite stages are
// checked against the limit.
Interval mu_limit_truncated(const InfiniteWordSpec& w, const Word& v, std::size_t J);

// sum over v in YF_n of mu_finite(w,v,m). Requires rank(w_m) >= n; the
// normalization proposition makes the result exactly 1.
BigRat level_masses(const InfiniteWordSpec& w, std::size_t n, std::size_t m);

struct LevelRow {
    Word word;
    Interval mu;             // limit enclosure, or exact stage value
    std::size_t h_prime = 0; // h'(v,w)
    BigRat pi_v;
    bool in_p = false;
    bool in_q = false;
    std::optional<bool> in_r; // absent when R-classification is disabled
};

struct LevelReport {
    std::size_t n = 0;
    std::size_t l = 0;
    BigRat delta;
    std::optional<BigRat> epsilon; // engaged iff R-classification ran
    std::optional<std::size_t> stage_m;

    std::vector<LevelRow> rows;
    Interval total_mass; // must contain 1
    Interval p_mass, pbar_mass;
    Interval q_mass, qbar_mass;
    std::optional<Interval> r_mass, rbar_mass;
    std::optional<Interval> pi_w;
    Interval bound_value; // 3n ((2/3)^(delta/2))^n
};

// Classify every vertex of level n against P(w,n,delta), Q(w,n,l) and, when
// epsilon is given, R(w,n,epsilon). R-classification requires
// is_positive_boundary(w) == yes. delta must lie strictly inside (0,1).
// Masses are limit-measure enclosures; per-vertex tolerance is
// tol / |YF_n| so the aggregate masses carry width <= tol.
LevelReport classify_level(const InfiniteWordSpec& w, std::size_t n, const BigRat& delta,
                           std::size_t l, const std::optional<BigRat>& epsilon, const BigRat& tol);

// Same report against the finite-stage measure mu_w(.,m); all masses exact.
LevelReport classify_level_finite(const InfiniteWordSpec& w, std::size_t n, std::size_t m,
                                  const BigRat& delta, std::size_t l,
                                  const std::optional<BigRat>& epsilon);

struct ConcentrationPoint {
    std::size_t n = 0;
    Interval pbar_mass;
    Interval bound; // theorem_bound(n, delta)
};

struct ConcentrationSeries {
    std::vector<ConcentrationPoint> points;
    bool truncated = false; // stopped early on the desk-scale level budget
};

// The complement-mass series sum_{v in Pbar(w,n,delta)} mu_w(v) for
// n = n_from..n_to. Requires is_positive_boundary(w) == yes. Levels are
// processed until the vertex budget kConcentrationVertexBudget is exhausted;
// the series is then returned truncated rather than failing wholesale.
inline constexpr std::size_t kConcentrationVertexBudget = 300000;
ConcentrationSeries concentration_series(const InfiniteWordSpec& w, const BigRat& delta,
                                         std::size_t n_from, std::size_t n_to, const BigRat& tol);

struct ApproxConcentrationPoint {
    std::size_t n = 0;
    double pbar_mass = 0;
    double bound = 0;
};

// Double-precision estimate of the same series; fast, clearly lossy.
std::vector<ApproxConcentrationPoint> concentration_series_approx(const InfiniteWordSpec& w,
                                                                  const BigRat& delta,
                                                                  std::size_t n_from,
                                                                  std::size_t n_to);

struct PiRatioBounds {
    BigRat lower;   // the explicit product prod_{i=a}^{a+b-1} (2i-1)/(2i)
    Interval ratio; // enclosure of pi(v)/pi(w)
};

// The proof-stage lower bound on pi(v)/pi(w) for v in P(w,n,delta), with
// a = ceil((1-delta)n/2) and b = ceil(delta*n/2), next to the enclosed ratio.
// Requires n >= 1, is_positive_boundary(w) == yes and v in P(w,n,delta).
PiRatioBounds pi_ratio_bounds_check(const InfiniteWordSpec& w, const BigRat& delta, std::size_t n,
                                    const Word& v, const BigRat& tol);

struct AssInequality {
    BigRat lhs; // sum over Pbar(w,n,delta) of mu_w(v,m)
    BigRat rhs; // sum over splits w_m = ab and k > delta*n/2 of
                // d(eps,2^k b) d(2^k,a) / d(eps,w_m)
};

// Both sides of the path-splitting inequality, exactly. Requires m >= n.
// Terms with k > d(a) vanish and are truncated exactly.
AssInequality ass_inequality_check(const InfiniteWordSpec& w, std::size_t n, const BigRat& delta,
                                   std::size_t m);

} // namespace yf
