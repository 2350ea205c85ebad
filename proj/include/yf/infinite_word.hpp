#pragma once

#include "yf/numeric.hpp"
#include "yf/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace yf {

// Membership in the positive part of the boundary (pi(w) > 0).
enum class Positivity { yes, no, unknown };

// A leftward-infinite word ...a2a1 over {1,2}, given by a rule for its runs
// of 1s between consecutive 2s, counted from the right:
//
//   finite_twos(prefix)   1^inf . prefix (finitely many 2s)
//   constant(c)           beta_k = c for all k
//   geometric(b0)         beta_k = b0 * 2^k, b0 >= 1
//   explicit_rule(bs, t)  beta_k = bs[k] for k < |bs|, then the tail rule
//                         (const c, or geometric restarting at b * 2^(k-|bs|))
//
// Textual form: "ones", "finite:<word>", "const:<c>", "geometric:<b0>",
// "explicit:<b0,b1,...;tail=const:<c>|geometric:<b>>".
class InfiniteWordSpec {
public:
    enum class Kind { finite_twos, constant, geometric, explicit_rule };
    enum class TailRule { constant, geometric };

    static InfiniteWordSpec finite_twos(Word prefix);
    static InfiniteWordSpec constant(std::size_t c);
    static InfiniteWordSpec geometric(std::size_t b0);
    static InfiniteWordSpec explicit_rule(std::vector<std::size_t> betas, TailRule tail,
                                          std::size_t tail_param);

    static InfiniteWordSpec parse(std::string_view text);
    std::string to_string() const;

    Kind kind() const { return kind_; }
    // d(w) when finite (finite_twos), nullopt otherwise.
    std::optional<std::size_t> two_count() const;

    // Run of 1s between the k-th and (k+1)-th 2 from the right, k >= 0.
    // For finite_twos only k < d(w) is defined.
    BigInt beta(std::size_t k) const;

    // g(w,k) = beta_0 + ... + beta_{k-1} + 2k - 1, for 1 <= k <= d(w).
    BigInt g(std::size_t k) const;
    // g(w,1..J) in one pass (J <= d(w) when d(w) is finite).
    std::vector<BigInt> g_prefix(std::size_t J) const;

    // w_m: the rightmost m digits as a finite word (#w_m = m).
    Word suffix_word(std::size_t m) const;

    // Whether sum 1/g(w,i) diverges; when it does, pi(w) = 0 analytically.
    bool inv_g_diverges() const;

    // A rational upper bound on sum_{j>J} 1/g(w,j); nullopt when the sum
    // diverges (no finite bound exists).
    std::optional<BigRat> tail_inv_g_bound(std::size_t J) const;

    Positivity positivity() const;

    friend bool operator==(const InfiniteWordSpec&, const InfiniteWordSpec&) = default;

private:
    Kind kind_ = Kind::finite_twos;
    Word prefix_;                      // finite_twos
    std::size_t c_ = 0;                // constant
    std::size_t b0_ = 1;               // geometric
    std::vector<std::size_t> betas_;   // explicit head
    TailRule tail_ = TailRule::constant;
    std::size_t tail_param_ = 0;
};

} // namespace yf
