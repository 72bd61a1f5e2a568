#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "horton/counting.hpp"
#include "horton/errors.hpp"

using namespace horton;

TEST_CASE("admissibility predicate") {
  CHECK(is_admissible(horton_sequence{{1}}));
  CHECK(is_admissible(horton_sequence{{2, 1}}));
  CHECK(is_admissible(horton_sequence{{7, 3, 1}}));
  CHECK_FALSE(is_admissible(horton_sequence{{}}));
  CHECK_FALSE(is_admissible(horton_sequence{{2}}));        // N_K != 1
  CHECK_FALSE(is_admissible(horton_sequence{{3, 2, 1}}));  // 3 < 2*2
  CHECK_FALSE(is_admissible(horton_sequence{{4, 0, 1}}));
  CHECK_THROWS_AS(require_admissible(horton_sequence{{7, 4, 1}}),
                  std::domain_error);
}

TEST_CASE("sequence text form") {
  CHECK(to_string(horton_sequence{{7, 3, 1}}) == "7,3,1");
  CHECK(parse_sequence("7,3,1") == horton_sequence{{7, 3, 1}});
  CHECK(parse_sequence("1") == horton_sequence{{1}});
  CHECK_THROWS_AS(parse_sequence(""), format_error);
  CHECK_THROWS_AS(parse_sequence("7,,1"), format_error);
  CHECK_THROWS_AS(parse_sequence("7,3,"), format_error);
  CHECK_THROWS_AS(parse_sequence("7;3"), format_error);
  CHECK_THROWS_AS(parse_sequence("99999999999999999999999"), format_error);

  const tree_rank r = parse_rank("7,3,1@13");
  CHECK(r.sequence == horton_sequence{{7, 3, 1}});
  CHECK(r.index == 13);
  CHECK(to_string(r) == "7,3,1@13");
  CHECK_THROWS_AS(parse_rank("7,3,1"), format_error);
  CHECK_THROWS_AS(parse_rank("7,3,1@"), format_error);
  CHECK_THROWS_AS(parse_rank("7,3,1@x2"), format_error);
}

TEST_CASE("catalan values") {
  const std::uint64_t expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (std::uint64_t m = 0; m < 10; ++m) CHECK(catalan(m) == expect[m]);
  CHECK(catalan(13) == 742900);
}

TEST_CASE("count_trees matches published values") {
  CHECK(count_trees(horton_sequence{{1}}) == 1);
  CHECK(count_trees(horton_sequence{{7, 3, 1}}) == 20);
  CHECK(count_trees(horton_sequence{{4, 2, 1}}) == 1);
  // perfect sequences are singletons
  CHECK(count_trees(horton_sequence{{8, 4, 2, 1}}) == 1);
  CHECK(count_trees(horton_sequence{{16, 8, 4, 2, 1}}) == 1);

  const std::pair<std::vector<std::uint64_t>, const char*> table[] = {
      {{4, 2, 1}, "1"},       {{5, 2, 1}, "6"},
      {{6, 2, 1}, "24"},      {{6, 3, 1}, "2"},
      {{7, 2, 1}, "80"},      {{8, 2, 1}, "240"},
      {{8, 3, 1}, "120"},     {{9, 2, 1}, "672"},
      {{9, 3, 1}, "560"},     {{9, 4, 2, 1}, "14"},
      {{10, 2, 1}, "1792"},   {{10, 3, 1}, "2240"},
      {{10, 4, 2, 1}, "112"}, {{10, 5, 2, 1}, "6"},
      {{11, 2, 1}, "4608"},   {{11, 3, 1}, "8064"},
      {{11, 4, 2, 1}, "672"}, {{11, 5, 2, 1}, "108"},
      {{12, 2, 1}, "11520"},  {{12, 3, 1}, "26880"},
      {{12, 4, 2, 1}, "3360"},{{12, 5, 2, 1}, "1080"},
      {{30, 2, 1}, "25367150592"},
      {{30, 3, 1}, "687026995200"},
      {{30, 4, 2, 1}, "1580162088960"},
      {{30, 5, 2, 1}, "19554505850880"},
  };
  for (const auto& [seq, value] : table)
    CHECK(count_trees(horton_sequence{seq}) == big_count(value));

  CHECK_THROWS_AS(count_trees(horton_sequence{{7, 4, 1}}), std::domain_error);
}

TEST_CASE("admissible_sequences basics") {
  CHECK(admissible_sequences(1) ==
        std::vector<horton_sequence>{horton_sequence{{1}}});
  CHECK(admissible_sequences(4) ==
        std::vector<horton_sequence>{horton_sequence{{4, 1}},
                                     horton_sequence{{4, 2, 1}}});
  // ordered by K then lexicographically
  const auto seqs = admissible_sequences(9);
  for (std::size_t i = 1; i < seqs.size(); ++i) {
    const auto &a = seqs[i - 1], &b = seqs[i];
    const bool ordered =
        a.order() < b.order() || (a.order() == b.order() && a < b);
    CHECK(ordered);
  }
}

TEST_CASE("catalan partition identity up to n = 14") {
  for (std::uint64_t n = 2; n <= 14; ++n) {
    big_count sum = 0;
    for_each_admissible_sequence(
        n, [&](const horton_sequence& s) { sum += count_trees(s); });
    CHECK(sum == catalan(n - 1));
  }
}

TEST_CASE("composition rank/unrank bijection and colex order") {
  CHECK(composition_unrank(0, 3, 0) == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(composition_unrank(1, 1, 0) == std::vector<std::uint64_t>{1});
  // colex: the last part is the most significant digit
  CHECK(composition_unrank(3, 2, 0) == std::vector<std::uint64_t>{3, 0});
  CHECK(composition_unrank(3, 2, 3) == std::vector<std::uint64_t>{0, 3});

  for (std::uint64_t total = 0; total + 1 <= 12; ++total) {
    for (std::uint64_t parts = 1; total + parts <= 12; ++parts) {
      const big_count space = composition_count(total, parts);
      std::set<std::vector<std::uint64_t>> seen;
      for (big_count r = 0; r < space; ++r) {
        const auto comp = composition_unrank(total, parts, r);
        CHECK(comp.size() == parts);
        std::uint64_t sum = 0;
        for (const std::uint64_t p : comp) sum += p;
        CHECK(sum == total);
        CHECK(composition_rank(comp) == r);
        seen.insert(comp);
      }
      CHECK(big_count(seen.size()) == space);
      CHECK_THROWS_AS(composition_unrank(total, parts, space),
                      std::out_of_range);
    }
  }
}

TEST_CASE("unrank produces the right branch counts and distinct trees") {
  const horton_sequence seq{{7, 3, 1}};
  std::set<std::string> seen;
  for (big_count i = 0; i < 20; ++i) {
    const plane_tree t = unrank(seq, i);
    CHECK(horton_sequence{hs_orders(t).branch_count} == seq);
    seen.insert(t.to_bits());
  }
  CHECK(seen.size() == 20);
  CHECK_THROWS_AS(unrank(seq, big_count(20)), std::out_of_range);
  CHECK(unrank(horton_sequence{{1}}, 0) == plane_tree::single_leaf());
  // ((4,2,1), 0) is the only tree of its class: the perfect 4-leaf tree
  CHECK(unrank(horton_sequence{{4, 2, 1}}, 0).to_bits() == "1100100");
}

TEST_CASE("oracle equivalence and bijection for n <= 9") {
  for (std::uint64_t n = 1; n <= 9; ++n) {
    // group the brute-force enumeration by branch counts
    std::map<horton_sequence, std::set<std::string>> groups;
    for_each_tree(n, [&](const plane_tree& t) {
      groups[horton_sequence{hs_orders(t).branch_count}].insert(t.to_bits());
    });

    big_count total_checked = 0;
    for (const horton_sequence& seq : admissible_sequences(n)) {
      REQUIRE(groups.count(seq) == 1);
      const std::set<std::string>& oracle = groups[seq];
      const big_count space = count_trees(seq);
      REQUIRE(space == big_count(oracle.size()));

      std::set<std::string> produced;
      for (big_count i = 0; i < space; ++i) {
        const plane_tree t = unrank(seq, i);
        produced.insert(t.to_bits());
        // the two-sided identity
        const tree_rank back = rank(t);
        CHECK(back.sequence == seq);
        CHECK(back.index == i);
      }
      CHECK(produced == oracle);
      total_checked += space;
    }
    CHECK(total_checked == catalan(n - 1));
    CHECK(big_count(groups.size()) ==
          big_count(admissible_sequences(n).size()));
  }
}

TEST_CASE("rank of specific trees") {
  CHECK(rank(plane_tree::single_leaf()) ==
        tree_rank{horton_sequence{{1}}, 0});
  CHECK(rank(plane_tree::from_bits("1100100")) ==
        tree_rank{horton_sequence{{4, 2, 1}}, 0});
}

TEST_CASE("roundtrip on larger spaces by spot indices") {
  const horton_sequence seq{{2000, 800, 300, 100, 30, 8, 2, 1}};
  const big_count space = count_trees(seq);
  CHECK(bit_length(space) > 64);  // far beyond machine integers
  const std::vector<big_count> indices{big_count(0), big_count(1),
                                       big_count(space / 3),
                                       big_count(space / 2),
                                       big_count(space - 1)};
  for (const big_count& idx : indices) {
    const plane_tree t = unrank(seq, idx);
    CHECK(t.leaf_count() == 2000);
    const tree_rank back = rank(t);
    CHECK(back.sequence == seq);
    CHECK(back.index == idx);
  }
}

TEST_CASE("sampler determinism and spread") {
  const horton_sequence seq{{7, 3, 1}};
  tree_sampler a(42), b(42), c(43);
  const plane_tree ta = a.sample(seq);
  CHECK(ta == b.sample(seq));
  // one-shot helpers re-seed
  CHECK(sample_uniform(seq, 42) == ta);
  CHECK(sample_uniform(seq, 42) == ta);
  // a stream from one sampler moves on
  std::set<std::string> stream;
  tree_sampler d(7);
  for (int i = 0; i < 40; ++i) stream.insert(d.sample(seq).to_bits());
  CHECK(stream.size() > 5);
  (void)c;
}

TEST_CASE("sample_leaves hits every class eventually and stays uniform") {
  // n = 4: classes (4,1) with 4 trees and (4,2,1) with 1 tree.
  tree_sampler s(2026);
  std::map<std::string, int> freq;
  const int draws = 5000;
  for (int i = 0; i < draws; ++i) ++freq[s.sample_leaves(4).to_bits()];
  CHECK(freq.size() == 5);  // all of C_3
  for (const auto& [bits, count] : freq) {
    CHECK(count > draws / 5 - 300);
    CHECK(count < draws / 5 + 300);
  }
}

TEST_CASE("chi-square uniformity for sample_leaves at n = 6") {
  // 42 classes; critical value for df = 41 at significance 0.001.
  const double critical = 74.74493839842374;
  std::map<std::string, int> freq;
  tree_sampler s(20260822);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++freq[s.sample_leaves(6).to_bits()];
  CHECK(freq.size() == 42);
  const double expected = draws / 42.0;
  double stat = 0;
  for (const auto& [bits, count] : freq) {
    const double d = count - expected;
    stat += d * d / expected;
  }
  CHECK(stat < critical);
}

TEST_CASE("singleton spaces sample their only member") {
  CHECK(sample_uniform(horton_sequence{{4, 2, 1}}, 999).to_bits() == "1100100");
  CHECK(sample_uniform_N(1, 5) == plane_tree::single_leaf());
}

TEST_CASE("verification driver passes honestly and fails under fault injection") {
  for (const verify_line& line : run_verification(9)) CHECK(line.pass);

  // a corrupted counting function must trip the oracle comparison
  const auto corrupt = [](const horton_sequence& seq) -> big_count {
    const big_count real = count_trees(seq);
    return seq == horton_sequence{{5, 2, 1}} ? real + 1 : real;
  };
  bool any_fail = false;
  for (const verify_line& line : run_verification(6, corrupt))
    if (!line.pass) any_fail = true;
  CHECK(any_fail);
}
