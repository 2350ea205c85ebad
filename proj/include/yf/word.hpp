#pragma once

#include "yf/errors.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace yf {

// A vertex label of the Young-Fibonacci graph: a finite word over {1,2}.
//
// Digits are stored right to left (storage index 0 is the rightmost digit),
// so every suffix quantity -- common suffixes, the run decomposition, the
// clock function g -- is a plain prefix scan over storage.
class Word {
public:
    Word() = default;

    // "" and "e" parse to the empty word; otherwise only '1'/'2' are accepted.
    static Word parse(std::string_view text);
    static Word ones(std::size_t n);
    static Word twos(std::size_t n);

    bool empty() const { return digits_.empty(); }
    std::size_t length() const { return digits_.size(); } // #x
    std::size_t rank() const;                             // |x|, the digit sum
    std::size_t one_count() const;                        // e(x)
    std::size_t two_count() const;                        // d(x)

    // 1-based, counted from the right: digit(1) is the rightmost digit.
    int digit(std::size_t i) const { return digits_[i - 1] - '0'; }

    // Left-to-right rendering, e.g. "21221"; the empty word renders as "".
    std::string str() const;
    // Same, but the empty word renders as "e" (for CLI fields).
    std::string display() const;

    // Raw right-to-left storage; used as a memoization key.
    const std::string& storage() const { return digits_; }
    static Word from_storage(std::string s);

    friend bool operator==(const Word&, const Word&) = default;
    // Lexicographic on the right-to-left digit sequence, 1 < 2. Restricted to
    // one level this is the documented enumeration order.
    friend auto operator<=>(const Word& a, const Word& b) {
        return a.digits_ <=> b.digits_;
    }

private:
    std::string digits_; // '1'/'2', rightmost digit first
};

// Concatenation xy: `left` to the left of `right`. Rank is additive.
Word concat(const Word& left, const Word& right);

// h(x,y): number of digits of the longest common suffix.
std::size_t common_suffix_len(const Word& x, const Word& y);
// h'(x,y): digit sum of the longest common suffix.
std::size_t common_suffix_rank(const Word& x, const Word& y);

// The runs of 1s between consecutive 2s, counted from the right:
// x = 1^leading_ones 2 1^{betas[d-1]} 2 ... 2 1^{betas[1]} 2 1^{betas[0]}.
struct RunDecomposition {
    std::vector<std::size_t> betas; // betas.size() == two_count(x)
    std::size_t leading_ones = 0;   // run of 1s left of the leftmost 2

    static RunDecomposition of(const Word& x);
    Word reassemble() const;
};

// g(x,k) = betas[0]+...+betas[k-1] + 2k - 1, the clock of the k-th 2 from
// the right. Defined for 1 <= k <= two_count(x).
std::size_t g(const Word& x, std::size_t k);
// g'(x,k) = g(x,k) - 2k + 2; always >= 1 on its domain.
std::size_t g_prime(const Word& x, std::size_t k);
// All of g(x,1..two_count(x)) in one pass.
std::vector<std::size_t> g_values(const Word& x);

// x with the 2s at the given 1-based right-to-left indices removed.
// Indices must be strictly increasing and within [1, two_count(x)].
Word remove_twos(const Word& x, const std::vector<std::size_t>& indices);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        return std::hash<std::string>{}(w.storage());
    }
};

} // namespace yf
