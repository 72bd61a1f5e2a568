#include "horton/codec.hpp"

#include <cstddef>

#include "horton/errors.hpp"

namespace horton {

namespace {

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v) | 0x80);
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

std::size_t varint_len(std::uint64_t v) {
  std::size_t n = 1;
  while (v >= 0x80) {
    v >>= 7;
    ++n;
  }
  return n;
}

std::uint64_t get_varint(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  std::uint64_t v = 0;
  for (unsigned shift = 0;; shift += 7) {
    if (pos >= bytes.size())
      throw format_error(format_error::kind::truncated, pos,
                         "input ended inside a varint");
    const std::uint8_t b = bytes[pos++];
    const std::uint64_t group = b & 0x7f;
    if (shift >= 64 || (shift == 63 && group > 1))
      throw format_error(format_error::kind::bad_number, pos - 1,
                         "varint does not fit in 64 bits");
    v |= group << shift;
    if (!(b & 0x80)) return v;
  }
}

}  // namespace

std::uint64_t payload_width_bits(const big_count& space) {
  return space <= 1 ? 0 : bit_length(space - 1);
}

std::vector<std::uint8_t> encode(const plane_tree& tree) {
  const tree_rank tr = rank(tree);
  const auto& counts = tr.sequence.counts;
  std::vector<std::uint8_t> out;
  put_varint(out, counts.size());
  for (const std::uint64_t n : counts) put_varint(out, n);
  const std::uint64_t width = payload_width_bits(count_trees(tr.sequence));
  std::uint8_t acc = 0;
  unsigned used = 0;
  for (std::uint64_t bit = width; bit-- > 0;) {
    acc = static_cast<std::uint8_t>(
        (acc << 1) |
        mpz_tstbit(tr.index.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)));
    if (++used == 8) {
      out.push_back(acc);
      acc = 0;
      used = 0;
    }
  }
  if (used) out.push_back(static_cast<std::uint8_t>(acc << (8 - used)));
  return out;
}

plane_tree decode(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  const std::uint64_t k = get_varint(bytes, pos);
  // N_1 >= 2^(K-1) pins K to 64 for any admissible 64-bit sequence.
  if (k == 0 || k > 64)
    throw format_error(format_error::kind::bad_header, 0,
                       "header declares order " + std::to_string(k));
  horton_sequence seq;
  seq.counts.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i)
    seq.counts.push_back(get_varint(bytes, pos));
  if (!is_admissible(seq))
    throw format_error(format_error::kind::bad_header, 0,
                       "header sequence " + to_string(seq) + " is not admissible");

  const big_count space = count_trees(seq);
  const std::uint64_t width = payload_width_bits(space);
  const std::size_t payload_start = pos;
  const std::size_t payload_bytes = static_cast<std::size_t>((width + 7) / 8);
  if (bytes.size() - pos < payload_bytes)
    throw format_error(format_error::kind::truncated, bytes.size(),
                       "input ended inside the payload");
  if (bytes.size() - pos > payload_bytes)
    throw format_error(format_error::kind::trailing, pos + payload_bytes,
                       "trailing bytes after the payload");

  big_count index = 0;
  std::uint64_t consumed = 0;
  for (std::size_t b = 0; b < payload_bytes; ++b) {
    const std::uint8_t byte = bytes[pos + b];
    for (int bit = 7; bit >= 0; --bit) {
      const int v = (byte >> bit) & 1;
      if (consumed < width) {
        index = index * 2 + v;
      } else if (v != 0) {
        throw format_error(format_error::kind::padding, pos + b,
                           "nonzero padding bit");
      }
      ++consumed;
    }
  }
  if (index >= space)
    throw format_error(format_error::kind::index_range, payload_start,
                       "payload index " + index.get_str() +
                           " is not below the space size " + space.get_str());
  return unrank(seq, index);
}

rate_report measure_rate(const horton_sequence& seq) {
  require_admissible(seq);
  rate_report r;
  std::size_t header = varint_len(seq.counts.size());
  for (const std::uint64_t n : seq.counts) header += varint_len(n);
  r.header_bits = 8 * header;
  r.payload_bits = payload_width_bits(count_trees(seq));
  const long double vertices = 2.0L * static_cast<long double>(seq.leaves());
  r.payload_rate = static_cast<long double>(r.payload_bits) / vertices;
  r.total_rate =
      static_cast<long double>(r.header_bits + r.payload_bits) / vertices;
  return r;
}

}  // namespace horton
