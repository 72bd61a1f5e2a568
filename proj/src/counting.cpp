#include "horton/counting.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include "horton/errors.hpp"

namespace horton {

bool is_admissible(const horton_sequence& seq) {
  const auto& n = seq.counts;
  if (n.empty() || n.back() != 1) return false;
  for (std::size_t i = 0; i + 1 < n.size(); ++i)
    if (n[i] < 2 * n[i + 1]) return false;
  return true;
}

void require_admissible(const horton_sequence& seq) {
  const auto& n = seq.counts;
  if (n.empty()) throw std::domain_error("sequence is empty");
  if (n.back() != 1)
    throw std::domain_error("N_" + std::to_string(n.size()) + " = " +
                            std::to_string(n.back()) + ", but N_K must be 1");
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    if (n[i] < 2 * n[i + 1])
      throw std::domain_error(
          "N_" + std::to_string(i + 1) + " = " + std::to_string(n[i]) +
          " violates N_" + std::to_string(i + 1) + " >= 2*N_" +
          std::to_string(i + 2) + " = " + std::to_string(2 * n[i + 1]));
  }
}

std::string to_string(const horton_sequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.counts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(seq.counts[i]);
  }
  return out;
}

namespace {

std::uint64_t parse_u64_field(std::string_view text, std::size_t begin,
                              std::size_t end) {
  if (begin == end)
    throw format_error(format_error::kind::bad_number, begin, "empty number");
  std::uint64_t value = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9')
      throw format_error(format_error::kind::bad_char, i,
                         std::string("expected digit, got '") + c + "'");
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (value > (UINT64_MAX - digit) / 10)
      throw format_error(format_error::kind::bad_number, begin,
                         "number does not fit in 64 bits");
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace

horton_sequence parse_sequence(std::string_view text) {
  horton_sequence seq;
  std::size_t begin = 0;
  for (;;) {
    std::size_t end = text.find(',', begin);
    if (end == std::string_view::npos) end = text.size();
    seq.counts.push_back(parse_u64_field(text, begin, end));
    if (end == text.size()) break;
    begin = end + 1;
  }
  return seq;
}

std::string to_string(const tree_rank& rank) {
  return to_string(rank.sequence) + "@" + rank.index.get_str();
}

tree_rank parse_rank(std::string_view text) {
  const std::size_t at = text.find('@');
  if (at == std::string_view::npos)
    throw format_error(format_error::kind::bad_char, text.size(),
                       "rank form is \"N1,...,NK@index\"; '@' missing");
  tree_rank r;
  r.sequence = parse_sequence(text.substr(0, at));
  const std::size_t begin = at + 1;
  if (begin == text.size())
    throw format_error(format_error::kind::bad_number, begin, "empty index");
  for (std::size_t i = begin; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw format_error(format_error::kind::bad_char, i,
                         std::string("expected digit, got '") + text[i] + "'");
  r.index = big_count(std::string(text.substr(begin)), 10);
  return r;
}

big_count catalan(std::uint64_t m) { return binomial(2 * m, m) / (m + 1); }

big_count count_trees(const horton_sequence& seq) {
  require_admissible(seq);
  const auto& n = seq.counts;
  std::uint64_t tail = 0;  // N_2 + ... + N_K, at most N_1 - 1
  for (std::size_t i = 1; i < n.size(); ++i) tail += n[i];
  big_count result = pow2(n[0] - 1 - tail);
  for (std::size_t i = 0; i + 1 < n.size(); ++i)
    result *= binomial(n[i] - 2, 2 * n[i + 1] - 2);
  return result;
}

void for_each_admissible_sequence(
    std::uint64_t leaves, const std::function<void(const horton_sequence&)>& fn) {
  if (leaves == 0)
    throw std::domain_error("leaf count must be positive");
  if (leaves == 1) {
    fn(horton_sequence{{1}});
    return;
  }
  horton_sequence seq;
  // K = 2 needs nothing beyond N_1 >= 2; each further level halves.
  for (std::size_t k = 2; (1ull << (k - 1)) <= leaves; ++k) {
    auto& n = seq.counts;
    n.assign(k, 1);
    n[0] = leaves;
    // free positions 1 .. k-2, each in [2^(k-1-j), n[j-1]/2], ascending
    const std::function<void(std::size_t)> fill = [&](std::size_t j) {
      if (j == k - 1) {
        fn(seq);
        return;
      }
      const std::uint64_t lo = 1ull << (k - 1 - j);
      const std::uint64_t hi = n[j - 1] / 2;
      for (std::uint64_t v = lo; v <= hi; ++v) {
        n[j] = v;
        fill(j + 1);
      }
    };
    fill(1);
  }
}

std::vector<horton_sequence> admissible_sequences(std::uint64_t leaves) {
  std::vector<horton_sequence> out;
  for_each_admissible_sequence(leaves,
                               [&](const horton_sequence& s) { out.push_back(s); });
  return out;
}

big_count composition_count(std::uint64_t total, std::uint64_t parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return binomial(total + parts - 1, parts - 1);
}

std::vector<std::uint64_t> composition_unrank(std::uint64_t total,
                                              std::uint64_t parts,
                                              const big_count& index) {
  if (index < 0 || index >= composition_count(total, parts))
    throw std::out_of_range("composition_unrank: index outside [0, C(M+k-1,k-1))");
  std::vector<std::uint64_t> out(parts, 0);
  big_count rem = index;
  std::uint64_t left = total;
  // Colex: the last part is the most significant digit. Fixing parts
  // back-to-front, a value v at position p leaves C(left-v+p-1, p-1)
  // compositions below it.
  for (std::uint64_t pos = parts; pos-- > 1;) {
    std::uint64_t v = 0;
    for (;;) {
      const big_count block = composition_count(left - v, pos);
      if (rem < block) break;
      rem -= block;
      ++v;
    }
    out[pos] = v;
    left -= v;
  }
  if (parts > 0) out[0] = left;
  return out;
}

big_count composition_rank(const std::vector<std::uint64_t>& parts) {
  big_count r = 0;
  std::uint64_t left = 0;
  for (const std::uint64_t p : parts) left += p;
  for (std::uint64_t pos = parts.size(); pos-- > 1;) {
    for (std::uint64_t v = 0; v < parts[pos]; ++v)
      r += composition_count(left - v, pos);
    left -= parts[pos];
  }
  return r;
}

namespace {

// Mutable arena used while attaching/detaching frames. Splicing leaves
// dead nodes behind; traversals only ever start from the root, so they
// never see them.
struct build_node {
  std::int32_t left = -1;
  std::int32_t right = -1;
  std::int32_t parent = -1;
  std::int32_t order = 0;
};

struct builder {
  std::vector<build_node> a;
  std::int32_t root = -1;

  std::int32_t make(std::int32_t order) {
    a.push_back(build_node{-1, -1, -1, order});
    return static_cast<std::int32_t>(a.size()) - 1;
  }

  // Perfect tree of the given order: the unique minimal order-k shape.
  std::int32_t perfect(std::int32_t k) {
    if (k == 1) return make(1);
    const std::int32_t l = perfect(k - 1);
    const std::int32_t r = perfect(k - 1);
    const std::int32_t v = make(k);
    a[v].left = l;
    a[v].right = r;
    a[l].parent = v;
    a[r].parent = v;
    return v;
  }

  void preorder(std::vector<std::int32_t>& out) const {
    out.clear();
    std::vector<std::int32_t> st{root};
    while (!st.empty()) {
      const std::int32_t v = st.back();
      st.pop_back();
      out.push_back(v);
      if (a[v].left >= 0) {
        st.push_back(a[v].right);
        st.push_back(a[v].left);
      }
    }
  }

  // Hosts for stage i: vertices of order > i, in preorder. Each stands for
  // the edge above it (the root for the stem), which is where extra
  // order-i frames may land.
  void hosts_above(std::int32_t i, std::vector<std::int32_t>& out) const {
    out.clear();
    std::vector<std::int32_t> st{root};
    while (!st.empty()) {
      const std::int32_t v = st.back();
      st.pop_back();
      if (a[v].order > i) out.push_back(v);
      if (a[v].left >= 0) {
        st.push_back(a[v].right);
        st.push_back(a[v].left);
      }
    }
  }

  plane_tree freeze() const {
    std::vector<std::int32_t> pre;
    preorder(pre);
    std::vector<std::int32_t> compact(a.size(), -1);
    for (std::size_t j = 0; j < pre.size(); ++j)
      compact[pre[j]] = static_cast<std::int32_t>(j);
    std::vector<plane_tree::node> nodes(pre.size());
    for (std::size_t j = 0; j < pre.size(); ++j) {
      const build_node& src = a[pre[j]];
      if (src.left >= 0)
        nodes[j] = {compact[src.left], compact[src.right]};
    }
    return plane_tree(std::move(nodes), 0);
  }
};

big_count stage_radix(const horton_sequence& seq, std::size_t i) {
  const std::uint64_t m = seq.counts[i - 1] - 2 * seq.counts[i];
  return binomial(seq.counts[i - 1] - 2, 2 * seq.counts[i] - 2) << m;
}

}  // namespace

plane_tree unrank(const horton_sequence& seq, const big_count& index) {
  require_admissible(seq);
  const big_count total = count_trees(seq);
  if (index < 0 || index >= total)
    throw std::out_of_range("unrank: index " + index.get_str() +
                            " outside [0, " + total.get_str() + ")");
  const std::size_t k = seq.order();
  builder b;
  b.root = b.perfect(static_cast<std::int32_t>(k));

  // Place value of stage i is the product of the radixes below it.
  std::vector<big_count> place(k, 1);
  for (std::size_t i = 2; i < k; ++i)
    place[i] = place[i - 1] * stage_radix(seq, i - 1);

  big_count rem = index;
  std::vector<std::int32_t> hosts;
  for (std::size_t i = k - 1; i >= 1; --i) {
    big_count digit = rem / place[i];
    rem %= place[i];
    const std::uint64_t m = seq.counts[i - 1] - 2 * seq.counts[i];
    const big_count cdig = digit >> m;
    const big_count sbits = digit - (cdig << m);

    b.hosts_above(static_cast<std::int32_t>(i), hosts);
    const std::vector<std::uint64_t> comp =
        composition_unrank(m, hosts.size(), cdig);

    std::uint64_t fi = 0;  // side bits run MSB-first across all hosts
    for (std::size_t j = 0; j < hosts.size(); ++j) {
      const std::int32_t host = hosts[j];
      const std::int32_t horder = b.a[host].order;
      for (std::uint64_t t = 0; t < comp[j]; ++t) {
        const int bit =
            mpz_tstbit(sbits.get_mpz_t(),
                       static_cast<mp_bitcnt_t>(m - 1 - fi));
        ++fi;
        // New frames slide in directly above the host, below the ones
        // already stacked there: first-placed ends up nearest the root.
        const std::int32_t extra = b.perfect(static_cast<std::int32_t>(i));
        const std::int32_t w = b.make(horder);
        auto& arena = b.a;
        const std::int32_t p = arena[host].parent;
        if (bit == 0) {
          arena[w].left = extra;
          arena[w].right = host;
        } else {
          arena[w].left = host;
          arena[w].right = extra;
        }
        arena[extra].parent = w;
        arena[host].parent = w;
        arena[w].parent = p;
        if (p < 0)
          b.root = w;
        else if (arena[p].left == host)
          arena[p].left = w;
        else
          arena[p].right = w;
      }
    }
  }
  return b.freeze();
}

plane_tree unrank(const tree_rank& rank) {
  return unrank(rank.sequence, rank.index);
}

tree_rank rank(const plane_tree& tree) {
  const order_labeling lab = hs_orders(tree);
  horton_sequence seq{lab.branch_count};
  const std::size_t k = static_cast<std::size_t>(lab.tree_order);

  builder b;
  b.a.resize(tree.nodes().size());
  for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
    const auto& nd = tree.nodes()[v];
    b.a[v] = build_node{nd.left, nd.right, -1, lab.vertex_order[v]};
  }
  for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
    const auto& nd = tree.nodes()[v];
    if (nd.left >= 0) {
      b.a[nd.left].parent = static_cast<std::int32_t>(v);
      b.a[nd.right].parent = static_cast<std::int32_t>(v);
    }
  }
  b.root = tree.root();
  auto& arena = b.a;

  // Peel stages in reverse construction order: detach the order-i extra
  // frames, record which host got how many and on which side, and splice
  // the attachment vertices out, recovering the stage-(i+1) tree. Orders
  // computed once stay valid: splicing removes whole subtrees hanging off
  // vertices whose order the removal cannot change.
  std::vector<big_count> digit(k, 0);
  std::vector<std::int32_t> pre;
  std::vector<std::int32_t> hosts;
  for (std::size_t i = 1; i + 1 <= k; ++i) {
    const std::uint64_t m = seq.counts[i - 1] - 2 * seq.counts[i];
    b.preorder(pre);

    // An extra frame of order i hangs from an attachment vertex whose
    // other child has order > i; merge vertices have two order-i children,
    // so the sibling test is unambiguous.
    std::vector<std::int32_t> extras;
    for (const std::int32_t v : pre) {
      if (arena[v].order != static_cast<std::int32_t>(i)) continue;
      const std::int32_t p = arena[v].parent;
      if (p < 0) continue;
      const std::int32_t sib =
          arena[p].left == v ? arena[p].right : arena[p].left;
      if (arena[sib].order > static_cast<std::int32_t>(i)) extras.push_back(v);
    }

    std::vector<char> att(arena.size(), 0);
    for (const std::int32_t e : extras) att[arena[e].parent] = 1;

    struct chain {
      std::int32_t head;      // topmost attachment vertex
      std::int32_t parent;    // what the chain hangs from (-1: the stem)
      std::int32_t terminal;  // first non-attachment vertex below, the host
      std::vector<int> bits;  // root-side-first; 0 = extra frame on the left
    };
    std::vector<chain> chains;
    for (const std::int32_t e : extras) {
      const std::int32_t w = arena[e].parent;
      const std::int32_t pw = arena[w].parent;
      if (pw >= 0 && att[pw]) continue;  // an inner link, not a head
      chain c{w, pw, -1, {}};
      std::int32_t cur = w;
      while (att[cur]) {
        if (arena[arena[cur].left].order == static_cast<std::int32_t>(i)) {
          c.bits.push_back(0);
          cur = arena[cur].right;
        } else {
          c.bits.push_back(1);
          cur = arena[cur].left;
        }
      }
      c.terminal = cur;
      chains.push_back(std::move(c));
    }

    for (const chain& c : chains) {
      arena[c.terminal].parent = c.parent;
      if (c.parent < 0)
        b.root = c.terminal;
      else if (arena[c.parent].left == c.head)
        arena[c.parent].left = c.terminal;
      else
        arena[c.parent].right = c.terminal;
    }

    b.hosts_above(static_cast<std::int32_t>(i), hosts);
    std::vector<std::int32_t> host_pos(arena.size(), -1);
    for (std::size_t j = 0; j < hosts.size(); ++j)
      host_pos[hosts[j]] = static_cast<std::int32_t>(j);

    std::vector<std::uint64_t> comp(hosts.size(), 0);
    std::vector<const chain*> chain_at(hosts.size(), nullptr);
    for (const chain& c : chains) {
      const std::int32_t j = host_pos[c.terminal];
      comp[static_cast<std::size_t>(j)] = c.bits.size();
      chain_at[static_cast<std::size_t>(j)] = &c;
    }
    big_count sbits = 0;
    for (std::size_t j = 0; j < hosts.size(); ++j) {
      if (!chain_at[j]) continue;
      for (const int bit : chain_at[j]->bits) sbits = sbits * 2 + bit;
    }
    digit[i] = (composition_rank(comp) << m) + sbits;
  }

  big_count index = 0;
  for (std::size_t i = k - 1; i >= 1; --i)
    index = index * stage_radix(seq, i) + digit[i];
  return tree_rank{std::move(seq), std::move(index)};
}

big_count tree_sampler::uniform_below(const big_count& bound) {
  if (bound <= 0) throw std::domain_error("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const std::size_t bits = bit_length(bound - 1);
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    big_count v = 0;
    for (std::size_t w = 0; w < words; ++w) {
      v <<= 64;
      v += big_count(static_cast<unsigned long>(rng_()));
    }
    v >>= words * 64 - bits;  // keep the top `bits` bits
    if (v < bound) return v;
  }
}

plane_tree tree_sampler::sample(const horton_sequence& seq) {
  return unrank(seq, uniform_below(count_trees(seq)));
}

const tree_sampler::leaf_table& tree_sampler::table_for(std::uint64_t leaves) {
  const auto found = tables_.find(leaves);
  if (found != tables_.end()) return found->second;
  leaf_table table;
  big_count running = 0;
  for_each_admissible_sequence(leaves, [&](const horton_sequence& s) {
    running += count_trees(s);
    table.sequences.push_back(s);
    table.cumulative.push_back(running);
  });
  return tables_.emplace(leaves, std::move(table)).first->second;
}

plane_tree tree_sampler::sample_leaves(std::uint64_t leaves) {
  const leaf_table& table = table_for(leaves);
  const big_count u = uniform_below(table.cumulative.back());
  const auto it =
      std::upper_bound(table.cumulative.begin(), table.cumulative.end(), u);
  const std::size_t j =
      static_cast<std::size_t>(it - table.cumulative.begin());
  const big_count before = j == 0 ? big_count(0) : table.cumulative[j - 1];
  return unrank(table.sequences[j], u - before);
}

plane_tree sample_uniform(const horton_sequence& seq, std::uint64_t seed) {
  tree_sampler sampler(seed);
  return sampler.sample(seq);
}

plane_tree sample_uniform_N(std::uint64_t leaves, std::uint64_t seed) {
  tree_sampler sampler(seed);
  return sampler.sample_leaves(leaves);
}

std::vector<verify_line> run_verification(
    std::uint64_t max_leaves,
    const std::function<big_count(const horton_sequence&)>& count_fn) {
  constexpr std::uint64_t oracle_limit = 9;
  std::vector<verify_line> lines;
  for (std::uint64_t n = 1; n <= max_leaves; ++n) {
    verify_line line{n, true, {}};
    big_count sum = 0;
    const std::vector<horton_sequence> seqs = admissible_sequences(n);
    for (const horton_sequence& s : seqs) sum += count_fn(s);
    const big_count expect = catalan(n - 1);
    if (sum != expect) {
      line.pass = false;
      line.detail = "sum over admissible sequences is " + sum.get_str() +
                    ", catalan(n-1) is " + expect.get_str();
    } else if (n <= oracle_limit) {
      std::map<horton_sequence, std::uint64_t> groups;
      for_each_tree(n, [&](const plane_tree& t) {
        ++groups[horton_sequence{hs_orders(t).branch_count}];
      });
      for (const horton_sequence& s : seqs) {
        const auto found = groups.find(s);
        const std::uint64_t oracle = found == groups.end() ? 0 : found->second;
        if (count_fn(s) != oracle) {
          line.pass = false;
          line.detail = "sequence " + to_string(s) + ": formula gives " +
                        count_fn(s).get_str() + ", enumeration gives " +
                        std::to_string(oracle);
          break;
        }
      }
      if (line.pass && groups.size() != seqs.size()) {
        line.pass = false;
        line.detail = "enumeration produced a branch-count vector outside "
                      "the admissible list";
      }
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace horton
