#include "horton/bigcount.hpp"

#include <cmath>
#include <stdexcept>

namespace horton {

big_count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  big_count r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

big_count pow2(std::uint64_t e) {
  big_count r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

std::size_t bit_length(const big_count& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

long double log2_big(const big_count& x) {
  if (x <= 0) throw std::domain_error("log2_big: argument must be positive");
  const std::size_t bits = bit_length(x);
  const std::size_t keep = bits > 128 ? 128 : bits;
  const big_count top = x >> (bits - keep);
  const big_count hi = top >> 64;
  const big_count lo = top - (hi << 64);
  const long double v = std::ldexp(static_cast<long double>(mpz_get_ui(hi.get_mpz_t())), 64) +
                        static_cast<long double>(mpz_get_ui(lo.get_mpz_t()));
  return std::log2(v) + static_cast<long double>(bits - keep);
}

std::string group_digits(const std::string& decimal) {
  std::string out;
  std::size_t start = (!decimal.empty() && decimal[0] == '-') ? 1 : 0;
  out.append(decimal, 0, start);
  const std::size_t n = decimal.size() - start;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(decimal[start + i]);
  }
  return out;
}

}  // namespace horton
