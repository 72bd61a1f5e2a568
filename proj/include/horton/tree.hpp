#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "horton/errors.hpp"

namespace horton {

// A planted binary plane tree: a root of degree 1 (the lower end of the
// stem) with a full binary tree on top. Only the full tree is stored --
// the planted root and the stem carry no combinatorial choice. With n
// leaves the arena holds 2n-1 nodes and the planted tree has 2n vertices.
//
// Canonical text form: preorder over the stored tree, '1' for an internal
// vertex, '0' for a leaf; length 2n-1, every proper prefix has at least as
// many '1's as '0's.
class plane_tree {
 public:
  struct node {
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  static plane_tree single_leaf();

  // Takes ownership of an arena; `root` is the vertex at the top of the
  // stem. Every node must be reachable from it exactly once and have zero
  // or two children. Throws std::invalid_argument otherwise.
  plane_tree(std::vector<node> nodes, std::int32_t root);

  std::int32_t root() const { return root_; }
  bool is_leaf(std::int32_t v) const { return nodes_[v].left < 0; }
  std::int32_t left(std::int32_t v) const { return nodes_[v].left; }
  std::int32_t right(std::int32_t v) const { return nodes_[v].right; }
  const std::vector<node>& nodes() const { return nodes_; }

  std::size_t leaf_count() const { return (nodes_.size() + 1) / 2; }
  // Counts the planted root as well: 2n for n leaves.
  std::size_t vertex_count() const { return nodes_.size() + 1; }

  std::string to_bits() const;
  // Inverse of to_bits; throws format_error on malformed input.
  static plane_tree from_bits(std::string_view bits);

  // Shape equality (arena layout does not matter).
  friend bool operator==(const plane_tree& a, const plane_tree& b) {
    return a.to_bits() == b.to_bits();
  }

 private:
  std::vector<node> nodes_;
  std::int32_t root_;
};

// Horton-Strahler labeling: per-vertex orders plus branch counts. Leaves
// get order 1; a parent of orders i and j gets max(i,j), plus one when
// i = j. A branch is a maximal same-order run; branch_count[i-1] counts
// branches of order i+0, and the root branch (continuing through the stem)
// makes branch_count[K-1] at least 1.
struct order_labeling {
  std::vector<std::int32_t> vertex_order;   // indexed by arena node
  std::vector<std::uint64_t> branch_count;  // N_1 .. N_K
  std::int32_t tree_order = 0;              // K
};

order_labeling hs_orders(const plane_tree& tree);

// All trees with `leaves` leaves in lexicographic order of their canonical
// bit strings; there are C_{leaves-1} of them. Streaming form first --
// useful when the caller only folds over the set.
void for_each_tree(std::size_t leaves,
                   const std::function<void(const plane_tree&)>& fn);
std::vector<plane_tree> enumerate_trees(std::size_t leaves);

}  // namespace horton
