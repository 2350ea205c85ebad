#pragma once

#include "yf/numeric.hpp"
#include "yf/word.hpp"

#include <vector>

namespace yf {

// Covers above x: replace the leftmost 1 by a 2, or insert a 1 anywhere left
// of the leftmost 1 (anywhere at all when x has no 1). Sorted, duplicate-free.
std::vector<Word> up_neighbors(const Word& x);

// Covers below y, the exact inverse of up_neighbors: delete the leftmost 1,
// or turn any 2 left of the leftmost 1 (any 2 at all when y has no 1) into a 1.
std::vector<Word> down_neighbors(const Word& y);

// All words of rank n, in lexicographic order of the right-to-left digit
// sequence (1 < 2). The count is the Fibonacci number F_{n+1}.
std::vector<Word> enumerate_level(std::size_t n);

// F_0 = 0, F_1 = 1.
BigInt fibonacci(std::size_t n);

// Order test: x is below y (a down path y -> x exists) iff after deleting
// their longest common suffix, y keeps at least as many 2s as x keeps digits.
bool is_below(const Word& x, const Word& y);

} // namespace yf
