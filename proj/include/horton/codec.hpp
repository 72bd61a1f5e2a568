#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "horton/bigcount.hpp"
#include "horton/counting.hpp"
#include "horton/tree.hpp"

namespace horton {

// Enumerative wire codec. A tree travels as its branch-count header plus
// its rank inside that space:
//
//   header   K, then N_1..N_K, each a varint (7 data bits per byte, least
//            significant group first, high bit set on all but the last)
//   payload  the rank index, big-endian, in exactly
//            ceil(log2 count_trees(seq)) bits (empty for singleton spaces)
//   padding  zero bits to the next byte boundary
//
// Decoding rejects inadmissible headers, out-of-range indices, nonzero
// padding, truncation, and trailing bytes -- each as a format_error with
// its own kind. docs/wire_format.md walks through byte-level examples.

std::vector<std::uint8_t> encode(const plane_tree& tree);
plane_tree decode(std::span<const std::uint8_t> bytes);

// Bits needed to address `space` distinct values: ceil(log2 space).
std::uint64_t payload_width_bits(const big_count& space);

struct rate_report {
  std::uint64_t header_bits = 0;   // 8 * header bytes
  std::uint64_t payload_bits = 0;  // before padding
  long double payload_rate = 0;    // payload_bits / (2 N_1)
  long double total_rate = 0;      // (header_bits + payload_bits) / (2 N_1)
};
// Per-vertex cost of shipping a tree of the given (admissible) sequence.
rate_report measure_rate(const horton_sequence& seq);

}  // namespace horton
