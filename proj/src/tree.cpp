#include "horton/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace horton {

namespace {

void validate_arena(const std::vector<plane_tree::node>& nodes, std::int32_t root) {
  const auto size = static_cast<std::int32_t>(nodes.size());
  if (size == 0 || root < 0 || root >= size)
    throw std::invalid_argument("plane_tree: root index out of range");
  std::vector<char> seen(nodes.size(), 0);
  std::vector<std::int32_t> stack{root};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const std::int32_t v = stack.back();
    stack.pop_back();
    if (v < 0 || v >= size)
      throw std::invalid_argument("plane_tree: child index out of range");
    if (seen[v]) throw std::invalid_argument("plane_tree: node reachable twice");
    seen[v] = 1;
    ++visited;
    const auto& nd = nodes[v];
    if ((nd.left < 0) != (nd.right < 0))
      throw std::invalid_argument("plane_tree: vertex with exactly one child");
    if (nd.left >= 0) {
      stack.push_back(nd.right);
      stack.push_back(nd.left);
    }
  }
  if (visited != nodes.size())
    throw std::invalid_argument("plane_tree: unreachable nodes in arena");
}

}  // namespace

plane_tree::plane_tree(std::vector<node> nodes, std::int32_t root)
    : nodes_(std::move(nodes)), root_(root) {
  validate_arena(nodes_, root_);
}

plane_tree plane_tree::single_leaf() { return plane_tree({node{}}, 0); }

std::string plane_tree::to_bits() const {
  std::string out;
  out.reserve(nodes_.size());
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    const std::int32_t v = stack.back();
    stack.pop_back();
    if (is_leaf(v)) {
      out.push_back('0');
    } else {
      out.push_back('1');
      stack.push_back(nodes_[v].right);
      stack.push_back(nodes_[v].left);
    }
  }
  return out;
}

plane_tree plane_tree::from_bits(std::string_view bits) {
  std::vector<node> nodes;
  nodes.reserve(bits.size());
  std::vector<std::int32_t> open;  // internal vertices still missing a child
  bool complete = false;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1')
      throw format_error(format_error::kind::bad_char, i,
                         "tree string: expected '0' or '1'");
    if (complete)
      throw format_error(format_error::kind::trailing, i,
                         "tree string: data past a complete tree");
    const auto idx = static_cast<std::int32_t>(nodes.size());
    nodes.push_back(node{});
    if (!open.empty()) {
      node& p = nodes[open.back()];
      if (p.left < 0) {
        p.left = idx;
      } else {
        p.right = idx;
        open.pop_back();
      }
    }
    if (c == '1')
      open.push_back(idx);
    else if (open.empty())
      complete = true;
  }
  if (!complete)
    throw format_error(format_error::kind::truncated, bits.size(),
                       "tree string: ended with subtrees missing");
  return plane_tree(std::move(nodes), 0);
}

order_labeling hs_orders(const plane_tree& tree) {
  const auto& nd = tree.nodes();
  std::vector<std::int32_t> pre;
  pre.reserve(nd.size());
  std::vector<std::int32_t> stack{tree.root()};
  while (!stack.empty()) {
    const std::int32_t v = stack.back();
    stack.pop_back();
    pre.push_back(v);
    if (!tree.is_leaf(v)) {
      stack.push_back(nd[v].right);
      stack.push_back(nd[v].left);
    }
  }

  // In preorder every child appears after its parent, so a reverse sweep
  // sees children first.
  std::vector<std::int32_t> order(nd.size(), 0);
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const std::int32_t v = *it;
    if (tree.is_leaf(v)) {
      order[v] = 1;
    } else {
      const std::int32_t a = order[nd[v].left];
      const std::int32_t b = order[nd[v].right];
      order[v] = std::max(a, b) + (a == b ? 1 : 0);
    }
  }

  const std::int32_t k = order[tree.root()];
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
  for (const std::int32_t v : pre) {
    if (tree.is_leaf(v)) continue;
    // A child of strictly smaller order tops its own branch.
    for (const std::int32_t c : {nd[v].left, nd[v].right})
      if (order[c] < order[v]) ++counts[static_cast<std::size_t>(order[c]) - 1];
  }
  ++counts[static_cast<std::size_t>(k) - 1];  // the root branch, stem included
  return {std::move(order), std::move(counts), k};
}

void for_each_tree(std::size_t leaves,
                   const std::function<void(const plane_tree&)>& fn) {
  if (leaves == 0) throw std::domain_error("for_each_tree: need at least one leaf");
  const std::size_t len = 2 * leaves - 1;
  std::string bits;
  bits.reserve(len);
  // Preorder strings in lexicographic order: '0' explored before '1'.
  const std::function<void(std::size_t, std::size_t)> rec =
      [&](std::size_t ones, std::size_t zeros) {
        if (bits.size() == len) {
          fn(plane_tree::from_bits(bits));
          return;
        }
        if (zeros < leaves && (ones > zeros || bits.size() + 1 == len)) {
          bits.push_back('0');
          rec(ones, zeros + 1);
          bits.pop_back();
        }
        if (ones + 1 < leaves) {
          bits.push_back('1');
          rec(ones + 1, zeros);
          bits.pop_back();
        }
      };
  rec(0, 0);
}

std::vector<plane_tree> enumerate_trees(std::size_t leaves) {
  std::vector<plane_tree> out;
  for_each_tree(leaves, [&](const plane_tree& t) { out.push_back(t); });
  return out;
}

}  // namespace horton
