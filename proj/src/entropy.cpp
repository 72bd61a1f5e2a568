#include "horton/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace horton {

log_bits binary_entropy(long double z) {
  if (!(z >= 0.0L && z <= 1.0L))
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  if (z == 0.0L || z == 1.0L) return 0.0L;
  return -z * std::log2(z) - (1.0L - z) * std::log2(1.0L - z);
}

log_bits tree_space_entropy(std::uint64_t vertices) {
  if (vertices == 0 || vertices % 2 != 0)
    throw std::domain_error("tree_space_entropy: vertex count must be even and positive");
  const std::uint64_t leaves = vertices / 2;
  return log2_big(catalan(leaves - 1));
}

log_bits entropy_residual(std::uint64_t vertices) {
  if (vertices < 4 || vertices % 2 != 0)
    throw std::domain_error("entropy_residual: vertex count must be even and >= 4");
  const long double n = static_cast<long double>(vertices);
  return tree_space_entropy(vertices) - (n - std::log2(n) - 1.0L);
}

log_bits entropy_rate(long double exponent) {
  if (!(exponent >= 2.0L))
    throw std::domain_error("entropy_rate: exponent must be >= 2");
  const long double z = 2.0L / exponent;
  return 1.0L - (1.0L - binary_entropy(z)) / (2.0L - z);
}

binomial_log_check log2_binomial_check(std::uint64_t n, std::uint64_t k) {
  if (k > n || k == 0)
    throw std::domain_error("log2_binomial_check: need n >= k >= 1");
  binomial_log_check out;
  out.exact = log2_big(binomial(n, k));
  out.approx = static_cast<long double>(n) *
               binary_entropy(static_cast<long double>(k) /
                              static_cast<long double>(n));
  out.residual = out.exact - out.approx;
  return out;
}

void require_valid(const tkr_params& p) {
  if (p.order < 1) throw std::domain_error("tkr: order must be >= 1");
  if (!(p.exponent > 2.0L))
    throw std::domain_error("tkr: exponent must be > 2");
  if (!(p.alpha > 1.0L && p.alpha < p.exponent))
    throw std::domain_error("tkr: alpha must lie in (1, exponent)");
}

namespace {

struct level_range {
  std::uint64_t lo, hi;  // inclusive; empty when lo > hi
};

// Integers strictly inside (R^(K-k) - a^(K-k), R^(K-k) + a^(K-k)).
level_range tkr_level_range(const tkr_params& p, std::int32_t k) {
  const long double e = static_cast<long double>(p.order - k);
  const long double center = std::pow(p.exponent, e);
  const long double spread = std::pow(p.alpha, e);
  const long double lo_f = center - spread;
  const long double hi_f = center + spread;
  // floor+1 / ceil-1 land strictly inside even when a bound is integral.
  long double lo = std::floor(lo_f) + 1.0L;
  const long double hi = std::ceil(hi_f) - 1.0L;
  if (lo < 1.0L) lo = 1.0L;
  if (hi < lo) return {1, 0};
  return {static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)};
}

}  // namespace

std::vector<horton_sequence> tkr_sequences(const tkr_params& p) {
  require_valid(p);
  const std::size_t k = static_cast<std::size_t>(p.order);
  std::vector<level_range> ranges(k);
  for (std::size_t lvl = 1; lvl <= k; ++lvl)
    ranges[lvl - 1] = tkr_level_range(p, static_cast<std::int32_t>(lvl));
  // Level K's interval is (0, 2); anything else voids the ensemble.
  if (ranges[k - 1].lo > 1 || ranges[k - 1].hi < 1) return {};

  std::vector<horton_sequence> out;
  std::vector<std::uint64_t> picked(k);
  picked[k - 1] = 1;
  // Fill levels K-1 down to 1; each value needs N_lvl >= 2 N_{lvl+1}.
  const std::function<void(std::size_t)> fill = [&](std::size_t lvl) {
    if (lvl == 0) {
      out.push_back(horton_sequence{picked});
      return;
    }
    const level_range r = ranges[lvl - 1];
    const std::uint64_t lo = std::max(r.lo, 2 * picked[lvl]);
    for (std::uint64_t v = lo; v <= r.hi; ++v) {
      picked[lvl - 1] = v;
      fill(lvl - 1);
    }
  };
  fill(k - 1);
  std::sort(out.begin(), out.end());
  return out;
}

big_count tkr_count(const tkr_params& p) {
  big_count total = 0;
  for (const horton_sequence& seq : tkr_sequences(p)) total += count_trees(seq);
  return total;
}

log_bits tkr_normalized_logcount(const tkr_params& p) {
  const big_count total = tkr_count(p);
  if (total == 0)
    throw std::domain_error("tkr: ensemble is empty for these parameters");
  const long double denom =
      2.0L * std::pow(p.exponent, static_cast<long double>(p.order - 1));
  return log2_big(total) / denom;
}

horton_sequence central_sequence(const tkr_params& p) {
  require_valid(p);
  const std::size_t k = static_cast<std::size_t>(p.order);
  std::vector<std::uint64_t> counts(k);
  for (std::size_t lvl = 1; lvl <= k; ++lvl) {
    const long double v =
        std::pow(p.exponent, static_cast<long double>(p.order) -
                                 static_cast<long double>(lvl));
    counts[lvl - 1] = static_cast<std::uint64_t>(std::llround(v));
  }
  for (std::size_t lvl = k - 1; lvl >= 1; --lvl)
    counts[lvl - 1] = std::max(counts[lvl - 1], 2 * counts[lvl]);
  for (std::size_t lvl = 1; lvl <= k; ++lvl) {
    const level_range r = tkr_level_range(p, static_cast<std::int32_t>(lvl));
    if (counts[lvl - 1] < r.lo || counts[lvl - 1] > r.hi)
      throw std::domain_error(
          "central_sequence: admissibility repair left the interval at level " +
          std::to_string(lvl));
  }
  return horton_sequence{std::move(counts)};
}

tkr_row tkr_convergence_row(const tkr_params& p) {
  tkr_row row;
  row.order = p.order;
  row.exponent = p.exponent;
  row.alpha = p.alpha;
  const std::vector<horton_sequence> seqs = tkr_sequences(p);
  row.sequences = seqs.size();
  big_count total = 0;
  for (const horton_sequence& seq : seqs) total += count_trees(seq);
  if (total == 0)
    throw std::domain_error("tkr: ensemble is empty for these parameters");
  row.log2_count = log2_big(total);
  row.normalized =
      row.log2_count /
      (2.0L * std::pow(p.exponent, static_cast<long double>(p.order - 1)));
  row.closed_form = entropy_rate(p.exponent);
  row.abs_error = std::fabs(row.normalized - row.closed_form);
  return row;
}

}  // namespace horton
