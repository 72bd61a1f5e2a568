#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "horton/bigcount.hpp"
#include "horton/tree.hpp"

namespace horton {

// Branch counts (N_1, ..., N_K). Admissible means N_K = 1 and
// N_i >= 2 N_{i+1}: an order-(i+1) branch consumes two order-i branches.
struct horton_sequence {
  std::vector<std::uint64_t> counts;

  std::size_t order() const { return counts.size(); }       // K
  std::uint64_t leaves() const { return counts.front(); }   // N_1

  friend bool operator==(const horton_sequence&, const horton_sequence&) = default;
  friend auto operator<=>(const horton_sequence&, const horton_sequence&) = default;
};

bool is_admissible(const horton_sequence& seq);
// Throws std::domain_error naming the violated condition.
void require_admissible(const horton_sequence& seq);

// Text form "N1,N2,...,NK"; parse throws format_error, never checks
// admissibility (that is the caller's domain decision).
std::string to_string(const horton_sequence& seq);
horton_sequence parse_sequence(std::string_view text);

// An address within the space of trees sharing one sequence.
struct tree_rank {
  horton_sequence sequence;
  big_count index;  // in [0, count_trees(sequence))

  friend bool operator==(const tree_rank&, const tree_rank&) = default;
};

// Text form "N1,...,NK@index", index in decimal.
std::string to_string(const tree_rank& rank);
tree_rank parse_rank(std::string_view text);

big_count catalan(std::uint64_t m);

// Number of planted binary plane trees with the given branch counts:
//   2^(N_1 - 1 - sum_{i>=2} N_i) * prod_i C(N_i - 2, 2 N_{i+1} - 2).
// Throws std::domain_error when seq is inadmissible.
big_count count_trees(const horton_sequence& seq);

// Every admissible sequence with N_1 = leaves, ordered by K then
// lexicographically.
void for_each_admissible_sequence(
    std::uint64_t leaves, const std::function<void(const horton_sequence&)>& fn);
std::vector<horton_sequence> admissible_sequences(std::uint64_t leaves);

// Weak compositions of `total` into `parts` nonnegative parts, ranked
// colexicographically: the last part is the most significant digit.
big_count composition_count(std::uint64_t total, std::uint64_t parts);
std::vector<std::uint64_t> composition_unrank(std::uint64_t total,
                                              std::uint64_t parts,
                                              const big_count& index);
big_count composition_rank(const std::vector<std::uint64_t>& parts);

// The bijection [0, count_trees(seq)) <-> trees with branch counts seq.
//
// unrank grows the tree from the perfect main frame of order K by
// attaching, for i = K-1 down to 1, the M_i = N_i - 2 N_{i+1} extra frames
// (perfect order-i trees) onto the 2 N_{i+1} - 1 edges of order > i. The
// index is read in mixed radix, stage K-1 most significant; within a stage
// the composition digit (which host gets how many frames) is more
// significant than the M_i side bits. Hosts are numbered in preorder of
// the partially built tree; frames on one host stack root-side-first; a
// side bit of 0 puts the extra frame on the left.
plane_tree unrank(const tree_rank& rank);
plane_tree unrank(const horton_sequence& seq, const big_count& index);
tree_rank rank(const plane_tree& tree);

// Seeded uniform sampling. One sampler owns an RNG stream, so consecutive
// draws are independent; the one-shot helpers below re-seed every call.
// Uniform big-integer draws use rejection on fixed 64-bit blocks, keeping
// results identical across platforms.
class tree_sampler {
 public:
  explicit tree_sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform over [0, bound); bound >= 1.
  big_count uniform_below(const big_count& bound);

  // Uniform over all trees with the given branch counts.
  plane_tree sample(const horton_sequence& seq);

  // Uniform over all C_{n-1} trees with n leaves: locates the sequence by
  // cumulative counts, then unranks the residual. The per-n table is built
  // on first use and reused.
  plane_tree sample_leaves(std::uint64_t leaves);

 private:
  struct leaf_table {
    std::vector<horton_sequence> sequences;
    std::vector<big_count> cumulative;  // running totals, back() = C_{n-1}
  };
  const leaf_table& table_for(std::uint64_t leaves);

  std::mt19937_64 rng_;
  std::map<std::uint64_t, leaf_table> tables_;
};

plane_tree sample_uniform(const horton_sequence& seq, std::uint64_t seed);
plane_tree sample_uniform_N(std::uint64_t leaves, std::uint64_t seed);

// Cross-check driver shared by the CLI and the test suite. For each
// n = 1..max_leaves: the counts over admissible_sequences(n) must sum to
// catalan(n-1); for n <= oracle-limit (9) the brute-force enumeration is
// grouped by branch counts and compared group by group. `count_fn` is
// injectable so tests can exercise the FAIL path.
struct verify_line {
  std::uint64_t leaves = 0;
  bool pass = false;
  std::string detail;  // non-empty on failure
};
std::vector<verify_line> run_verification(
    std::uint64_t max_leaves,
    const std::function<big_count(const horton_sequence&)>& count_fn = count_trees);

}  // namespace horton
