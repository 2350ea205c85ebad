#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace yf {

// Exact arbitrary-precision integers and rationals. All path counts,
// f-values and measures are kept exact; nothing in the core ever rounds.
using BigInt = mpz_class;
using BigRat = mpq_class;

// num/den as a canonical (reduced, den > 0) rational.
BigRat make_rat(const BigInt& num, const BigInt& den);

// Serialized form is always "p/q", reduced, q >= 1 (so "3" prints as "3/1").
std::string rat_str(const BigRat& q);

// Accepts "p" or "p/q" with optional sign; rejects anything else.
BigRat parse_rat(std::string_view text);

std::string int_str(const BigInt& n);

// Decimal approximation with `digits` places, round half away from zero.
// Lossy by construction; only used behind an explicit --approx-digits flag.
std::string approx_decimal(const BigRat& q, int digits);

} // namespace yf
