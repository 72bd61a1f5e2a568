#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "horton/bigcount.hpp"

using namespace horton;

TEST_CASE("binomial small values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(40, 20) == big_count("137846528820"));
}

TEST_CASE("pascal identity on a grid") {
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (std::uint64_t k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("pow2 and bit_length") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(64) == big_count("18446744073709551616"));
  CHECK(bit_length(0) == 0);
  CHECK(bit_length(1) == 1);
  CHECK(bit_length(255) == 8);
  CHECK(bit_length(256) == 9);
  CHECK(bit_length(pow2(1000)) == 1001);
}

TEST_CASE("log2_big matches exact powers and small values") {
  CHECK(log2_big(1) == 0.0L);
  CHECK(log2_big(pow2(100)) == 100.0L);
  CHECK(std::fabs(log2_big(big_count(5)) - std::log2(5.0L)) < 1e-18L);
  // A value too wide for any float: log2(2^500 + 2^400) ~ 500 + 2^-100.
  CHECK(std::fabs(log2_big(pow2(500) + pow2(400)) - 500.0L) < 1e-18L);
}

TEST_CASE("log2_big agrees with long double log2 on random-ish 64-bit values") {
  std::uint64_t x = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < 50; ++i) {
    x = x * 6364136223846793005ull + 1442695040888963407ull;
    const std::uint64_t v = x | 1;
    const long double expect = std::log2(static_cast<long double>(v));
    CHECK(std::fabs(log2_big(big_count(static_cast<unsigned long>(v))) - expect) <
          1e-15L);
  }
}

TEST_CASE("log2_big rejects zero") {
  CHECK_THROWS_AS(log2_big(big_count(0)), std::domain_error);
}

TEST_CASE("digit grouping") {
  CHECK(group_digits("0") == "0");
  CHECK(group_digits("999") == "999");
  CHECK(group_digits("1000") == "1,000");
  CHECK(group_digits("25367150592") == "25,367,150,592");
  CHECK(group_digits("-1234") == "-1,234");
}
