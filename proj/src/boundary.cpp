#include "yf/boundary.hpp"

#include "yf/graph.hpp"

#include <algorithm>
#include <cmath>

namespace yf {

namespace {

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::size_t ceil_rat(const BigRat& q) {
    return static_cast<std::size_t>(ceil_div(q.get_num(), q.get_den()).get_ui());
}

std::size_t floor_rat(const BigRat& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return static_cast<std::size_t>(f.get_ui());
}

// s * [lo,hi] endpoints for certified strict comparisons against pi(w)*s.
BigRat max_scaled(const Interval& i, const BigRat& s) {
    return s >= 0 ? BigRat(s * i.hi()) : BigRat(s * i.lo());
}
BigRat min_scaled(const Interval& i, const BigRat& s) {
    return s >= 0 ? BigRat(s * i.lo()) : BigRat(s * i.hi());
}

enum class Tri { in, out, undecided };

// Membership of pi_v in the open window (pi_w (1-eps), pi_w (1+eps)),
// certified against every value the enclosure of pi_w admits.
Tri r_status(const BigRat& pi_v, const Interval& pi_w, const BigRat& eps) {
    const BigRat lo_factor = 1 - eps, hi_factor = 1 + eps;
    if (pi_v > max_scaled(pi_w, lo_factor) && pi_v < min_scaled(pi_w, hi_factor))
        return Tri::in;
    if (pi_v <= min_scaled(pi_w, lo_factor) || pi_v >= max_scaled(pi_w, hi_factor))
        return Tri::out;
    return Tri::undecided;
}

// Smallest truncation depth J with g(w, J+1) > max_i, so every tail factor
// (g-i)/g stays in (0,1].
std::size_t min_trunc_depth(const InfiniteWordSpec& w, std::size_t max_i) {
    std::size_t J = 0;
    while (w.g(J + 1) <= static_cast<unsigned long>(max_i))
        ++J;
    return J;
}

// Limit-measure evaluation at a truncation depth shared across a level.
class MuEvaluator {
public:
    MuEvaluator(const InfiniteWordSpec& w, std::size_t max_i) : w_(w), max_i_(max_i) {
        if (const auto d = w.two_count()) {
            mode_ = Mode::finite;
            depth_ = *d;
            rebuild();
        } else if (w.inv_g_diverges()) {
            mode_ = Mode::divergent;
        } else {
            mode_ = Mode::truncated;
            depth_ = std::max<std::size_t>(min_trunc_depth(w, max_i) + 1, 8);
            rebuild();
        }
    }

    bool exact() const { return mode_ != Mode::truncated; }

    void refine() {
        if (mode_ == Mode::truncated) {
            depth_ *= 2;
            rebuild();
        }
    }

    void set_depth(std::size_t J) {
        if (mode_ != Mode::truncated)
            return;
        depth_ = std::max(J, min_trunc_depth(w_, max_i_));
        rebuild();
    }

    std::size_t depth() const { return depth_; }

    Interval eval(const Word& v) const {
        if (v.rank() > max_i_)
            throw internal_error("mu evaluator built for a lower level");
        const std::size_t h = common_suffix_len(v, w_);
        const BigRat dv(d_to_empty(v));
        if (mode_ == Mode::divergent) {
            // every i >= 1 product collapses to 0, only the i = 0 term stays
            return checked(Interval::point(dv * f_eval(v, 0, h)), v);
        }
        Interval acc;
        for (std::size_t i = 0; i <= v.rank(); ++i) {
            const BigRat fi = f_eval(v, i, h);
            if (fi == 0)
                continue;
            const Term& t = terms_[i];
            Interval prod;
            if (!t.zero) {
                prod = mode_ == Mode::finite
                           ? Interval::point(t.prefix)
                           : Interval::point(t.prefix) *
                                 Interval(std::max(BigRat(0), BigRat(1 - BigRat(static_cast<unsigned long>(i)) * tail_)), 1);
            }
            acc = acc + fi * prod;
        }
        return checked(dv * acc, v);
    }

private:
    enum class Mode { finite, divergent, truncated };

    struct Term {
        BigRat prefix{1};
        bool zero = false;
    };

    void rebuild() {
        gs_ = w_.g_prefix(depth_);
        if (mode_ == Mode::truncated)
            tail_ = *w_.tail_inv_g_bound(depth_);
        terms_.assign(max_i_ + 1, Term{});
        for (std::size_t i = 0; i <= max_i_; ++i) {
            Term& t = terms_[i];
            for (const BigInt& gv : gs_) {
                const BigInt num = gv - static_cast<unsigned long>(i);
                if (num == 0) {
                    t.zero = true;
                    break;
                }
                t.prefix *= make_rat(num, gv);
            }
        }
    }

    static Interval checked(const Interval& mu, const Word& v) {
        const auto boxed = intersect(mu, Interval(BigRat(0), BigRat(1)));
        if (!boxed)
            throw internal_error("mu enclosure disjoint from [0,1] at v=" + v.display());
        return *boxed;
    }

    const InfiniteWordSpec& w_;
    std::size_t max_i_;
    Mode mode_ = Mode::truncated;
    std::size_t depth_ = 0;
    std::vector<BigInt> gs_;
    BigRat tail_;
    std::vector<Term> terms_;
};

constexpr std::size_t kMaxTruncationDepth = 1u << 22;
constexpr int kMaxRRefinements = 12;

std::optional<bool> decide_r(const BigRat& pi_v, const InfiniteWordSpec& w, const BigRat& eps,
                             BigRat tol) {
    for (int round = 0; round <= kMaxRRefinements; ++round) {
        const Interval pi_w = pi_infinite(w, tol);
        switch (r_status(pi_v, pi_w, eps)) {
        case Tri::in:
            return true;
        case Tri::out:
            return false;
        case Tri::undecided:
            if (pi_w.is_point())
                throw internal_error("undecidable R membership against an exact pi(w)");
            tol /= 1024;
        }
    }
    throw tolerance_error("R membership undecidable at the maximum pi(w) refinement");
}

} // namespace

BigRat pi_finite(const Word& x) {
    BigRat prod = 1;
    for (std::size_t gv : g_values(x)) {
        if (gv > 1)
            prod *= make_rat(BigInt(static_cast<unsigned long>(gv - 1)),
                             BigInt(static_cast<unsigned long>(gv)));
    }
    return prod;
}

Interval pi_infinite(const InfiniteWordSpec& w, const BigRat& tol) {
    if (tol <= 0)
        throw precondition_error("pi_infinite: tol must be > 0");
    if (const auto d = w.two_count(); d) {
        BigRat prod = 1;
        const auto gs = w.g_prefix(*d);
        for (const BigInt& gv : gs)
            if (gv > 1)
                prod *= make_rat(gv - 1, gv);
        return Interval::point(prod);
    }
    if (w.inv_g_diverges())
        return Interval::point(BigRat(0)); // sum 1/g = inf forces pi(w) = 0
    std::size_t J = 1;
    while (*w.tail_inv_g_bound(J) > tol) {
        if (J > kMaxTruncationDepth)
            throw tolerance_error("pi_infinite: tol unreachable for " + w.to_string());
        J *= 2;
    }
    BigRat partial = 1;
    for (const BigInt& gv : w.g_prefix(J))
        if (gv > 1)
            partial *= make_rat(gv - 1, gv);
    const BigRat tail = *w.tail_inv_g_bound(J);
    return {partial * std::max(BigRat(0), BigRat(1 - tail)), partial};
}

Positivity is_positive_boundary(const InfiniteWordSpec& w) {
    return w.positivity();
}

std::size_t common_suffix_len(const Word& v, const InfiniteWordSpec& w) {
    return common_suffix_len(v, w.suffix_word(v.length() + 1));
}

std::size_t common_suffix_rank(const Word& v, const InfiniteWordSpec& w) {
    return common_suffix_rank(v, w.suffix_word(v.length() + 1));
}

BigRat mu_finite(const InfiniteWordSpec& w, const Word& v, std::size_t m) {
    const Word wm = w.suffix_word(m);
    if (wm.rank() < v.rank())
        return 0;
    return BigRat(d_to_empty(v)) * BigRat(d_closed(v, wm)) / BigRat(d_to_empty(wm));
}

Interval mu_limit(const InfiniteWordSpec& w, const Word& v, const BigRat& tol) {
    if (tol <= 0)
        throw precondition_error("mu_limit: tol must be > 0");
    MuEvaluator eval(w, v.rank());
    Interval mu = eval.eval(v);
    while (!eval.exact() && mu.width() > tol) {
        if (eval.depth() > kMaxTruncationDepth)
            throw tolerance_error("mu_limit: tol unreachable for " + w.to_string());
        eval.refine();
        mu = eval.eval(v);
    }
    return mu;
}

Interval mu_limit_truncated(const InfiniteWordSpec& w, const Word& v, std::size_t J) {
    MuEvaluator eval(w, v.rank());
    eval.set_depth(J);
    return eval.eval(v);
}

BigRat level_masses(const InfiniteWordSpec& w, std::size_t n, std::size_t m) {
    const Word wm = w.suffix_word(m);
    if (wm.rank() < n)
        throw precondition_error("level_masses: rank(w_m) < n");
    BigRat total = 0;
    for (const Word& v : enumerate_level(n))
        total += mu_finite(w, v, m);
    return total;
}

namespace {

void check_delta(const BigRat& delta) {
    if (delta <= 0 || delta >= 1)
        throw precondition_error("delta must lie strictly inside (0,1)");
}

// Flags and masses shared by the limit and finite-stage reports. mu_of must
// yield an enclosure (a point when exact) per vertex, in enumeration order.
template <class MuOf>
LevelReport build_report(const InfiniteWordSpec& w, std::size_t n, const BigRat& delta,
                         std::size_t l, const std::optional<BigRat>& epsilon, MuOf&& mu_of) {
    check_delta(delta);
    if (epsilon && *epsilon <= 0)
        throw precondition_error("epsilon must be > 0");
    if (epsilon && is_positive_boundary(w) != Positivity::yes)
        throw precondition_error("R-classification requires pi(w) > 0; " + w.to_string() +
                                 " is not in the positive boundary");

    LevelReport rep;
    rep.n = n;
    rep.delta = delta;
    rep.l = l;
    rep.epsilon = epsilon;
    rep.bound_value = theorem_bound(n, delta);

    const BigRat p_threshold = (1 - delta) * BigRat(static_cast<unsigned long>(n));
    Interval p_mass, pbar_mass, q_mass, qbar_mass, r_mass, rbar_mass, total;
    if (epsilon)
        rep.pi_w = pi_infinite(w, make_rat(1, BigInt("1000000000000000000")));

    for (const Word& v : enumerate_level(n)) {
        LevelRow row;
        row.word = v;
        row.mu = mu_of(v);
        row.h_prime = common_suffix_rank(v, w);
        row.pi_v = pi_finite(v);
        row.in_p = BigRat(static_cast<unsigned long>(row.h_prime)) >= p_threshold;
        row.in_q = row.h_prime >= l;
        if (epsilon)
            row.in_r = decide_r(row.pi_v, w, *epsilon, make_rat(1, BigInt("1000000000000000000")));
        total = total + row.mu;
        (row.in_p ? p_mass : pbar_mass) = (row.in_p ? p_mass : pbar_mass) + row.mu;
        (row.in_q ? q_mass : qbar_mass) = (row.in_q ? q_mass : qbar_mass) + row.mu;
        if (row.in_r)
            (*row.in_r ? r_mass : rbar_mass) = (*row.in_r ? r_mass : rbar_mass) + row.mu;
        rep.rows.push_back(std::move(row));
    }
    rep.total_mass = total;
    rep.p_mass = p_mass;
    rep.pbar_mass = pbar_mass;
    rep.q_mass = q_mass;
    rep.qbar_mass = qbar_mass;
    if (epsilon) {
        rep.r_mass = r_mass;
        rep.rbar_mass = rbar_mass;
    }
    if (!rep.total_mass.contains(BigRat(1)))
        throw internal_error("level mass enclosure does not contain 1");
    return rep;
}

} // namespace

LevelReport classify_level(const InfiniteWordSpec& w, std::size_t n, const BigRat& delta,
                           std::size_t l, const std::optional<BigRat>& epsilon, const BigRat& tol) {
    if (tol <= 0)
        throw precondition_error("classify_level: tol must be > 0");
    const auto level = enumerate_level(n);
    const BigRat per_vertex = tol / BigRat(static_cast<unsigned long>(level.size()));
    MuEvaluator eval(w, n);
    if (!eval.exact()) {
        for (;;) {
            BigRat worst = 0;
            for (const Word& v : level)
                worst = std::max(worst, eval.eval(v).width());
            if (worst <= per_vertex)
                break;
            if (eval.depth() > kMaxTruncationDepth)
                throw tolerance_error("classify_level: tol unreachable for " + w.to_string());
            eval.refine();
        }
    }
    return build_report(w, n, delta, l, epsilon, [&](const Word& v) { return eval.eval(v); });
}

LevelReport classify_level_finite(const InfiniteWordSpec& w, std::size_t n, std::size_t m,
                                  const BigRat& delta, std::size_t l,
                                  const std::optional<BigRat>& epsilon) {
    if (w.suffix_word(m).rank() < n)
        throw precondition_error("classify_level_finite: rank(w_m) < n");
    LevelReport rep = build_report(w, n, delta, l, epsilon,
                                   [&](const Word& v) { return Interval::point(mu_finite(w, v, m)); });
    rep.stage_m = m;
    if (!rep.total_mass.is_point() || rep.total_mass.lo() != 1)
        throw internal_error("finite-stage level mass is not exactly 1");
    return rep;
}

ConcentrationSeries concentration_series(const InfiniteWordSpec& w, const BigRat& delta,
                                         std::size_t n_from, std::size_t n_to, const BigRat& tol) {
    check_delta(delta);
    if (tol <= 0)
        throw precondition_error("concentration_series: tol must be > 0");
    if (n_to < n_from)
        throw precondition_error("concentration_series: n_to < n_from");
    if (is_positive_boundary(w) != Positivity::yes)
        throw precondition_error("concentration_series: " + w.to_string() +
                                 " is not in the positive boundary");
    ConcentrationSeries series;
    std::size_t budget = kConcentrationVertexBudget;
    for (std::size_t n = n_from; n <= n_to; ++n) {
        const auto level = enumerate_level(n);
        if (level.size() > budget) {
            series.truncated = true;
            break;
        }
        budget -= level.size();
        const BigRat p_threshold = (1 - delta) * BigRat(static_cast<unsigned long>(n));
        std::vector<const Word*> pbar;
        for (const Word& v : level)
            if (BigRat(static_cast<unsigned long>(common_suffix_rank(v, w))) < p_threshold)
                pbar.push_back(&v);
        MuEvaluator eval(w, n);
        Interval mass;
        for (;;) {
            mass = Interval{};
            for (const Word* v : pbar)
                mass = mass + eval.eval(*v);
            if (eval.exact() || mass.width() <= tol)
                break;
            if (eval.depth() > kMaxTruncationDepth)
                throw tolerance_error("concentration_series: tol unreachable");
            eval.refine();
        }
        const auto boxed = intersect(mass, Interval(BigRat(0), BigRat(1)));
        if (!boxed)
            throw internal_error("Pbar mass enclosure escapes [0,1]");
        series.points.push_back({n, *boxed, theorem_bound(n, delta)});
    }
    return series;
}

std::vector<ApproxConcentrationPoint> concentration_series_approx(const InfiniteWordSpec& w,
                                                                  const BigRat& delta,
                                                                  std::size_t n_from,
                                                                  std::size_t n_to) {
    check_delta(delta);
    if (n_to < n_from)
        throw precondition_error("concentration_series_approx: n_to < n_from");
    if (is_positive_boundary(w) != Positivity::yes)
        throw precondition_error("concentration_series_approx: " + w.to_string() +
                                 " is not in the positive boundary");
    // fixed truncation: 64 clocks are far beyond double precision already
    std::size_t depth = 64;
    if (const auto d = w.two_count())
        depth = *d;
    std::vector<double> gs;
    gs.reserve(depth);
    for (const BigInt& gv : w.g_prefix(depth))
        gs.push_back(gv.get_d());

    std::vector<ApproxConcentrationPoint> out;
    const double dd = delta.get_d();
    for (std::size_t n = n_from; n <= n_to; ++n) {
        const BigRat p_threshold = (1 - delta) * BigRat(static_cast<unsigned long>(n));
        double mass = 0;
        for (const Word& v : enumerate_level(n)) {
            if (BigRat(static_cast<unsigned long>(common_suffix_rank(v, w))) >= p_threshold)
                continue;
            const std::size_t h = common_suffix_len(v, w);
            double acc = 0;
            for (std::size_t i = 0; i <= n; ++i) {
                const double fi = f_eval_approx(v, i, h);
                if (fi == 0)
                    continue;
                double prod = 1;
                for (double gv : gs)
                    prod *= (gv - static_cast<double>(i)) / gv;
                acc += fi * prod;
            }
            mass += d_to_empty(v).get_d() * acc;
        }
        const double bound = 3.0 * static_cast<double>(n) *
                             std::pow(std::pow(2.0 / 3.0, dd / 2.0), static_cast<double>(n));
        out.push_back({n, mass, bound});
    }
    return out;
}

PiRatioBounds pi_ratio_bounds_check(const InfiniteWordSpec& w, const BigRat& delta, std::size_t n,
                                    const Word& v, const BigRat& tol) {
    check_delta(delta);
    if (n < 1)
        throw precondition_error("pi_ratio_bounds_check: n must be >= 1");
    if (is_positive_boundary(w) != Positivity::yes)
        throw precondition_error("pi_ratio_bounds_check: pi(w) > 0 required");
    if (v.rank() != n)
        throw precondition_error("pi_ratio_bounds_check: rank(v) != n");
    const BigRat nn(static_cast<unsigned long>(n));
    if (BigRat(static_cast<unsigned long>(common_suffix_rank(v, w))) < (1 - delta) * nn)
        throw precondition_error("pi_ratio_bounds_check: v is not in P(w,n,delta)");

    const std::size_t a = ceil_rat((1 - delta) * nn / 2);
    const std::size_t b = ceil_rat(delta * nn / 2);
    BigRat lower = 1;
    for (std::size_t i = a; i < a + b; ++i)
        lower *= make_rat(BigInt(2 * static_cast<unsigned long>(i) - 1),
                          BigInt(2 * static_cast<unsigned long>(i)));
    // same product through the clock form on 2^b 1^(2a-1)
    if (lower != pi_finite(concat(Word::twos(b), Word::ones(2 * a - 1))))
        throw internal_error("pi ratio lower bound disagrees with its clock form");

    const Interval ratio = Interval::point(pi_finite(v)) / pi_infinite(w, tol);
    if (lower > ratio.hi())
        throw internal_error("pi ratio enclosure fell below the proven lower bound");
    return {lower, ratio};
}

AssInequality ass_inequality_check(const InfiniteWordSpec& w, std::size_t n, const BigRat& delta,
                                   std::size_t m) {
    check_delta(delta);
    if (m < n)
        throw precondition_error("ass_inequality_check: m >= n required");
    const Word wm = w.suffix_word(m);
    const BigRat denom(d_to_empty(wm));
    const BigRat p_threshold = (1 - delta) * BigRat(static_cast<unsigned long>(n));

    BigRat lhs = 0;
    for (const Word& v : enumerate_level(n))
        if (BigRat(static_cast<unsigned long>(common_suffix_rank(v, w))) < p_threshold)
            lhs += mu_finite(w, v, m);

    // splits w_m = a b over all suffix lengths; k beyond d(a) contributes 0
    BigInt rhs_num = 0;
    const std::size_t k_min = floor_rat(delta * BigRat(static_cast<unsigned long>(n)) / 2) + 1;
    for (std::size_t s = 0; s <= m; ++s) {
        const Word b = Word::from_storage(wm.storage().substr(0, s));
        if (BigRat(static_cast<unsigned long>(b.rank())) >= p_threshold)
            continue;
        const Word a = Word::from_storage(wm.storage().substr(s));
        for (std::size_t k = std::max<std::size_t>(k_min, 1); k <= a.two_count(); ++k)
            rhs_num += d_to_empty(concat(Word::twos(k), b)) * d_from_twos(a, k);
    }
    const BigRat rhs = BigRat(rhs_num) / denom;
    if (lhs > rhs)
        throw internal_error("path-splitting inequality violated");
    return {lhs, rhs};
}

} // namespace yf
