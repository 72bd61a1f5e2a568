#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "horton/codec.hpp"
#include "horton/entropy.hpp"
#include "horton/errors.hpp"

using namespace horton;

using bytes_t = std::vector<std::uint8_t>;

TEST_CASE("payload width") {
  CHECK(payload_width_bits(1) == 0);
  CHECK(payload_width_bits(2) == 1);
  CHECK(payload_width_bits(20) == 5);
  CHECK(payload_width_bits(32) == 5);
  CHECK(payload_width_bits(33) == 6);
}

TEST_CASE("fixed byte layouts") {
  // single leaf: header (K=1, N=(1)), singleton payload
  CHECK(encode(plane_tree::single_leaf()) == bytes_t{0x01, 0x01});
  // perfect 4-leaf tree: space (4,2,1) is a singleton too
  CHECK(encode(plane_tree::from_bits("1100100")) ==
        bytes_t{0x03, 0x04, 0x02, 0x01});
  // tree 13 of (7,3,1): 5 payload bits 01101, zero-padded to 0x68
  CHECK(encode(unrank(horton_sequence{{7, 3, 1}}, 13)) ==
        bytes_t{0x03, 0x07, 0x03, 0x01, 0x68});
  CHECK(decode(bytes_t{0x03, 0x07, 0x03, 0x01, 0x68}) ==
        unrank(horton_sequence{{7, 3, 1}}, 13));
}

TEST_CASE("multi-byte varints") {
  // N_1 = 300 needs two varint bytes: 0xAC 0x02
  const horton_sequence seq{{300, 1}};
  const plane_tree t = unrank(seq, 0);
  const bytes_t wire = encode(t);
  CHECK(wire[0] == 0x02);
  CHECK(wire[1] == 0xAC);
  CHECK(wire[2] == 0x02);
  CHECK(wire[3] == 0x01);
  CHECK(decode(wire) == t);
}

TEST_CASE("payload width is exactly ceil(log2 count) over all n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n)
    for_each_tree(n, [&](const plane_tree& t) {
      const tree_rank r = rank(t);
      const bytes_t wire = encode(t);
      std::size_t header = 1;
      for (const std::uint64_t c : r.sequence.counts)
        header += c >= 0x80 ? 2 : 1;
      const std::uint64_t width = payload_width_bits(count_trees(r.sequence));
      CHECK(wire.size() == header + (width + 7) / 8);
      CHECK(decode(wire) == t);
    });
}

TEST_CASE("roundtrip on sampled trees at n = 16, 64, 256") {
  tree_sampler sampler(20260822);
  for (const std::uint64_t n : {16ull, 64ull, 256ull}) {
    for (int i = 0; i < 1000; ++i) {
      const plane_tree t = sampler.sample_leaves(n);
      CHECK(decode(encode(t)) == t);
    }
  }
}

TEST_CASE("decode failure modes") {
  CHECK_THROWS_AS(decode(bytes_t{}), format_error);

  const auto kind_of = [](const bytes_t& wire) {
    try {
      decode(wire);
    } catch (const format_error& e) {
      return e.error_kind();
    }
    return format_error::kind::bad_char;  // not reached on failure inputs
  };

  CHECK(kind_of(bytes_t{}) == format_error::kind::truncated);
  // header ends mid-sequence
  CHECK(kind_of(bytes_t{0x03, 0x07}) == format_error::kind::truncated);
  // varint promises a byte that never comes
  CHECK(kind_of(bytes_t{0x02, 0xAC}) == format_error::kind::truncated);
  // order zero
  CHECK(kind_of(bytes_t{0x00}) == format_error::kind::bad_header);
  // (7,4,1) is inadmissible
  CHECK(kind_of(bytes_t{0x03, 0x07, 0x04, 0x01}) ==
        format_error::kind::bad_header);
  // payload byte missing for (7,3,1)
  CHECK(kind_of(bytes_t{0x03, 0x07, 0x03, 0x01}) ==
        format_error::kind::truncated);
  // payload value 20 >= space size 20: bits 10100 <<3 = 0xA0
  CHECK(kind_of(bytes_t{0x03, 0x07, 0x03, 0x01, 0xA0}) ==
        format_error::kind::index_range);
  // nonzero padding: index 13 with a dirty low bit
  CHECK(kind_of(bytes_t{0x03, 0x07, 0x03, 0x01, 0x69}) ==
        format_error::kind::padding);
  // trailing byte after a complete message
  CHECK(kind_of(bytes_t{0x03, 0x07, 0x03, 0x01, 0x68, 0x00}) ==
        format_error::kind::trailing);
  // giant declared order
  CHECK(kind_of(bytes_t{0x7F}) == format_error::kind::bad_header);
}

TEST_CASE("rate report against hand-computed pieces") {
  const horton_sequence seq{{7, 3, 1}};
  const rate_report r = measure_rate(seq);
  CHECK(r.header_bits == 32);  // four single-byte varints
  CHECK(r.payload_bits == 5);
  CHECK(std::fabs(r.payload_rate - 5.0L / 14.0L) < 1e-18L);
  CHECK(std::fabs(r.total_rate - 37.0L / 14.0L) < 1e-18L);
}

TEST_CASE("payload rate at uniform n = 512 sits near the entropy estimate") {
  // one order-2 sequence carries most of T_512; compare the exact
  // per-vertex entropy instead: (log2 C_{n-1}) / N vs 1 - (log2 N + 1)/N.
  const std::uint64_t n = 512;
  const long double vertices = 2.0L * n;
  const long double exact = tree_space_entropy(2 * n) / vertices;
  const long double estimate =
      1.0L - (std::log2(vertices) + 1.0L) / vertices;
  CHECK(std::fabs(exact - estimate) < 0.05L);
}

TEST_CASE("central-sequence payload rates peak at R = 4") {
  const auto rate_at = [](long double r) {
    const horton_sequence seq = central_sequence(tkr_params{6, r, 1.25L});
    return measure_rate(seq).payload_rate;
  };
  const long double at4 = rate_at(4.0L);
  for (const long double r : {2.5L, 3.0L, 6.0L, 10.0L})
    CHECK(rate_at(r) < at4);
  // higher R means fewer bits per vertex out on the tail
  CHECK(rate_at(4.0L) - rate_at(16.0L) >= 0.1L);
}
