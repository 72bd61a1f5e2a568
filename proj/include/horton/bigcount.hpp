#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace horton {

// Exact nonnegative counts. Tree spaces grow like 2^(2n), so anything
// countable lives in an mpz; no operation here ever rounds.
using big_count = mpz_class;

// C(n, k), zero when k > n.
big_count binomial(std::uint64_t n, std::uint64_t k);

big_count pow2(std::uint64_t e);

// Bits needed to write x: bit_length(0) = 0, bit_length(1) = 1, ...
std::size_t bit_length(const big_count& x);

// log2 of x > 0, from the top 128 bits plus the bit-length offset.
// Relative error is bounded by the long double epsilon, far below 1e-12.
long double log2_big(const big_count& x);

// "25367150592" -> "25,367,150,592"
std::string group_digits(const std::string& decimal);

}  // namespace horton
