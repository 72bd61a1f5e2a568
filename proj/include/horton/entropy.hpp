#pragma once

#include <cstdint>
#include <vector>

#include "horton/bigcount.hpp"
#include "horton/counting.hpp"

namespace horton {

// Values in bits. long double carries a 64-bit mantissa here, comfortably
// inside every stated tolerance; big-integer logs go through log2_big.
using log_bits = long double;

// H(z) = -z log2 z - (1-z) log2(1-z), with 0 log2 0 := 0.
// Throws std::domain_error outside [0, 1].
log_bits binary_entropy(long double z);

// Entropy of the uniform distribution over all trees with `vertices`
// vertices (vertices = 2n, n leaves): log2 C_{n-1}, exact bigint Catalan
// then logarithm. Throws std::domain_error for odd or zero input.
log_bits tree_space_entropy(std::uint64_t vertices);

// tree_space_entropy(N) - (N - log2 N - 1): the remainder of the
// asymptotic expansion; |residual| <= 2 log2 N holds from N = 16 on.
// Requires even N >= 4.
log_bits entropy_residual(std::uint64_t vertices);

// Entropy rate of the Horton-law ensemble with exponent R >= 2:
//   1 - (1 - H(2/R)) / (2 - 2/R).
// Exactly 0 at R = 2, exactly 1 at the maximum R = 4, -> 1/2 as R grows.
log_bits entropy_rate(long double exponent);

struct binomial_log_check {
  log_bits exact;     // log2 C(n,k)
  log_bits approx;    // n H(k/n)
  log_bits residual;  // exact - approx
};
// Requires n >= k >= 1.
binomial_log_check log2_binomial_check(std::uint64_t n, std::uint64_t k);

// The Horton-law tree ensemble: all admissible sequences whose level-k
// branch count lies strictly inside (R^(K-k) - alpha^(K-k),
// R^(K-k) + alpha^(K-k)). The level-K interval is (0, 2), so N_K = 1
// comes for free.
struct tkr_params {
  std::int32_t order = 1;      // K >= 1
  long double exponent = 4.0;  // R > 2
  long double alpha = 1.25;    // in (1, R)
};
// Throws std::domain_error on out-of-range parameters.
void require_valid(const tkr_params& p);

// The ensemble's sequences in lexicographic order; may be empty for
// extreme parameters.
std::vector<horton_sequence> tkr_sequences(const tkr_params& p);

// Exact ensemble size: sum of count_trees over tkr_sequences.
big_count tkr_count(const tkr_params& p);

// log2(tkr_count) / (2 R^(K-1)). The denominator stands in for the vertex
// count, which the intervals pin to 2 R^(K-1) (1 + o(1)); as K grows the
// value approaches entropy_rate(R). Throws std::domain_error on an empty
// ensemble.
log_bits tkr_normalized_logcount(const tkr_params& p);

// Representative sequence N_k = round(R^(K-k)), repaired bottom-up by
// raising N_i to 2 N_{i+1} where admissibility fails; throws
// std::domain_error when the repair exits the open interval.
horton_sequence central_sequence(const tkr_params& p);

// One convergence-table row; the CSV columns of the CLI's tkr --table.
struct tkr_row {
  std::int32_t order = 0;
  long double exponent = 0;
  long double alpha = 0;
  std::uint64_t sequences = 0;
  log_bits log2_count = 0;
  log_bits normalized = 0;
  log_bits closed_form = 0;
  log_bits abs_error = 0;
};
tkr_row tkr_convergence_row(const tkr_params& p);

}  // namespace horton
