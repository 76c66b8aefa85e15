#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tg {

// Root-to-leaf path, each digit a child index in [0, d).
using LeafAddress = std::vector<int>;

// Immutable rooted d-ary tree: every internal node has exactly d children.
// The shape is stored in the text grammar  tree ::= "L" | "(" tree{d} ")"
// with no whitespace, so canonical printing is free and equality is
// structural string equality. Leaves are indexed 1..n left to right.
class Tree {
 public:
  explicit Tree(int arity);  // single leaf

  // Whitespace-insensitive parse of the grammar above.
  static Tree parse(int arity, std::string_view text);
  static Tree caret(int arity);
  // Vine with `carets` carets added repeatedly to the rightmost (leftmost) leaf.
  static Tree right_vine(int arity, int carets);
  static Tree left_vine(int arity, int carets);

  int arity() const { return arity_; }
  const std::string& text() const { return shape_; }
  bool is_leaf() const { return shape_.size() == 1; }

  int leaf_count() const;
  int right_depth() const;  // distance from root to the rightmost leaf

  Tree add_caret(int leaf) const;     // 1-based leaf index
  Tree remove_caret(int leaf) const;  // leaves leaf..leaf+d-1 must share a parent
  Tree graft(int leaf, const Tree& scion) const;  // replace leaf by scion

  // Leaf indices k such that leaves k..k+d-1 share a parent, ascending.
  std::vector<int> bottom_carets() const;

  LeafAddress leaf_address(int leaf) const;
  bool has_node(const LeafAddress& v) const;
  // Leaf index if v addresses a leaf of this tree.
  std::optional<int> leaf_at(const LeafAddress& v) const;
  Tree subtree_at(const LeafAddress& v) const;
  Tree prune_at(const LeafAddress& v) const;  // subtree at v replaced by a leaf
  Tree graft_at(const LeafAddress& v, const Tree& scion) const;

  bool operator==(const Tree& o) const {
    return arity_ == o.arity_ && shape_ == o.shape_;
  }
  bool operator!=(const Tree& o) const { return !(*this == o); }
  bool operator<(const Tree& o) const { return shape_ < o.shape_; }

 private:
  Tree(int arity, std::string shape) : arity_(arity), shape_(std::move(shape)) {}

  std::size_t node_pos(const LeafAddress& v) const;  // throws if absent
  std::size_t skip(std::size_t pos) const;           // end of subtree at pos
  std::size_t leaf_pos(int leaf) const;              // position of k-th 'L'

  int arity_;
  std::string shape_;
};

struct JoinResult {
  Tree common;
  std::vector<int> path_left;   // caret additions replaying left -> common
  std::vector<int> path_right;  // likewise for the right argument
};

// Smallest common expansion of two trees (the union of their subdivisions).
// Paths are emitted leftmost-first.
JoinResult join(const Tree& a, const Tree& b);

// The leftmost-first caret sequence turning `from` into its expansion `to`.
std::vector<int> expansion_path(const Tree& from, const Tree& to);

// True iff some tree with a leaf at address v yields both a and b by grafting
// d-ary trees at that leaf.
bool agree_away_from(const Tree& a, const Tree& b, const LeafAddress& v);

std::string format_address(const LeafAddress& v);

}  // namespace tg
