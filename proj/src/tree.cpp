#include "tg/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace tg {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Tree::Tree(int arity) : arity_(arity), shape_("L") {
  require(arity >= 2, "tree arity must be at least 2");
}

Tree Tree::caret(int arity) { return Tree(arity).add_caret(1); }

Tree Tree::right_vine(int arity, int carets) {
  Tree t(arity);
  for (int i = 0; i < carets; ++i) t = t.add_caret(t.leaf_count());
  return t;
}

Tree Tree::left_vine(int arity, int carets) {
  Tree t(arity);
  for (int i = 0; i < carets; ++i) t = t.add_caret(1);
  return t;
}

Tree Tree::parse(int arity, std::string_view text) {
  require(arity >= 2, "tree arity must be at least 2");
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (c == 'L' || c == '(' || c == ')') {
      compact.push_back(c);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("unexpected character in tree: ") + c);
    }
  }
  // validate arity-d structure
  std::size_t pos = 0;
  auto check = [&](auto&& self) -> void {
    require(pos < compact.size(), "truncated tree");
    if (compact[pos] == 'L') {
      ++pos;
      return;
    }
    require(compact[pos] == '(', "expected 'L' or '('");
    ++pos;
    for (int i = 0; i < arity; ++i) self(self);
    require(pos < compact.size() && compact[pos] == ')', "internal node must have exactly d children");
    ++pos;
  };
  check(check);
  require(pos == compact.size(), "trailing input after tree");
  return Tree(arity, std::move(compact));
}

std::size_t Tree::skip(std::size_t pos) const {
  if (shape_[pos] == 'L') return pos + 1;
  ++pos;  // '('
  for (int i = 0; i < arity_; ++i) pos = skip(pos);
  return pos + 1;  // ')'
}

int Tree::leaf_count() const {
  return static_cast<int>(std::count(shape_.begin(), shape_.end(), 'L'));
}

int Tree::right_depth() const {
  int depth = 0;
  std::size_t pos = 0;
  while (shape_[pos] == '(') {
    ++pos;
    for (int i = 0; i < arity_ - 1; ++i) pos = skip(pos);
    ++depth;
  }
  return depth;
}

std::size_t Tree::leaf_pos(int leaf) const {
  int seen = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (shape_[i] == 'L' && ++seen == leaf) return i;
  }
  throw std::out_of_range("leaf index out of range");
}

Tree Tree::add_caret(int leaf) const {
  require(leaf >= 1 && leaf <= leaf_count(), "leaf index out of range");
  const std::size_t p = leaf_pos(leaf);
  std::string next = shape_;
  next.replace(p, 1, "(" + std::string(static_cast<std::size_t>(arity_), 'L') + ")");
  return Tree(arity_, std::move(next));
}

Tree Tree::graft(int leaf, const Tree& scion) const {
  require(scion.arity_ == arity_, "arity mismatch");
  require(leaf >= 1 && leaf <= leaf_count(), "leaf index out of range");
  const std::size_t p = leaf_pos(leaf);
  std::string next = shape_;
  next.replace(p, 1, scion.shape_);
  return Tree(arity_, std::move(next));
}

Tree Tree::remove_caret(int leaf) const {
  require(leaf >= 1 && leaf <= leaf_count(), "leaf index out of range");
  const std::size_t p = leaf_pos(leaf);
  const std::string flat(static_cast<std::size_t>(arity_), 'L');
  const bool caret_here = p >= 1 && shape_[p - 1] == '(' &&
                          shape_.compare(p, flat.size(), flat) == 0 &&
                          shape_[p + flat.size()] == ')';
  require(caret_here, "leaves do not share a parent");
  std::string next = shape_;
  next.replace(p - 1, flat.size() + 2, "L");
  return Tree(arity_, std::move(next));
}

std::vector<int> Tree::bottom_carets() const {
  std::vector<int> out;
  const std::string flat(static_cast<std::size_t>(arity_), 'L');
  int leaf = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (shape_[i] == 'L') ++leaf;
    if (shape_[i] == '(' && shape_.compare(i + 1, flat.size(), flat) == 0 &&
        shape_[i + 1 + flat.size()] == ')') {
      out.push_back(leaf + 1);
    }
  }
  return out;
}

LeafAddress Tree::leaf_address(int leaf) const {
  require(leaf >= 1 && leaf <= leaf_count(), "leaf index out of range");
  const std::size_t target = leaf_pos(leaf);
  LeafAddress addr;
  std::size_t pos = 0;
  while (pos != target) {
    // descend into the child containing target
    ++pos;  // '('
    for (int c = 0; c < arity_; ++c) {
      const std::size_t end = skip(pos);
      if (target < end) {
        addr.push_back(c);
        break;
      }
      pos = end;
    }
  }
  return addr;
}

std::size_t Tree::node_pos(const LeafAddress& v) const {
  std::size_t pos = 0;
  for (int digit : v) {
    require(digit >= 0 && digit < arity_, "address digit out of range");
    if (shape_[pos] != '(') throw std::out_of_range("no node at address");
    ++pos;
    for (int c = 0; c < digit; ++c) pos = skip(pos);
  }
  return pos;
}

bool Tree::has_node(const LeafAddress& v) const {
  try {
    node_pos(v);
    return true;
  } catch (const std::out_of_range&) {
    return false;
  }
}

std::optional<int> Tree::leaf_at(const LeafAddress& v) const {
  if (!has_node(v)) return std::nullopt;
  const std::size_t pos = node_pos(v);
  if (shape_[pos] != 'L') return std::nullopt;
  return 1 + static_cast<int>(std::count(shape_.begin(), shape_.begin() + static_cast<long>(pos), 'L'));
}

Tree Tree::subtree_at(const LeafAddress& v) const {
  const std::size_t pos = node_pos(v);
  return Tree(arity_, shape_.substr(pos, skip(pos) - pos));
}

Tree Tree::prune_at(const LeafAddress& v) const {
  const std::size_t pos = node_pos(v);
  std::string next = shape_;
  next.replace(pos, skip(pos) - pos, "L");
  return Tree(arity_, std::move(next));
}

Tree Tree::graft_at(const LeafAddress& v, const Tree& scion) const {
  require(scion.arity_ == arity_, "arity mismatch");
  const std::size_t pos = node_pos(v);
  require(shape_[pos] == 'L', "graft target is not a leaf");
  std::string next = shape_;
  next.replace(pos, 1, scion.shape_);
  return Tree(arity_, std::move(next));
}

namespace {

std::size_t subtree_end(const std::string& s, std::size_t pos) {
  if (s[pos] == 'L') return pos + 1;
  std::size_t q = pos;
  int depth = 0;
  do {
    if (s[q] == '(') ++depth;
    if (s[q] == ')') --depth;
    ++q;
  } while (depth > 0);
  return q;
}

// Recursive superimpose of the two shape strings.
std::string superimpose(const std::string& sa, std::size_t& pa, const std::string& sb,
                        std::size_t& pb, int d) {
  const bool leaf_a = sa[pa] == 'L';
  const bool leaf_b = sb[pb] == 'L';
  if (leaf_a && leaf_b) {
    ++pa;
    ++pb;
    return "L";
  }
  if (leaf_a) {
    ++pa;
    const std::size_t q = subtree_end(sb, pb);
    std::string sub = sb.substr(pb, q - pb);
    pb = q;
    return sub;
  }
  if (leaf_b) {
    ++pb;
    const std::size_t q = subtree_end(sa, pa);
    std::string sub = sa.substr(pa, q - pa);
    pa = q;
    return sub;
  }
  ++pa;
  ++pb;
  std::string out = "(";
  for (int c = 0; c < d; ++c) out += superimpose(sa, pa, sb, pb, d);
  ++pa;
  ++pb;
  out += ")";
  return out;
}

}  // namespace

std::vector<int> expansion_path(const Tree& from, const Tree& to) {
  std::vector<int> path;
  Tree t = from;
  while (t != to) {
    const int n = t.leaf_count();
    bool advanced = false;
    for (int k = 1; k <= n; ++k) {
      const LeafAddress addr = t.leaf_address(k);
      if (!to.has_node(addr)) throw std::invalid_argument("not an expansion");
      if (!to.subtree_at(addr).is_leaf()) {
        t = t.add_caret(k);
        path.push_back(k);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::invalid_argument("not an expansion");
  }
  return path;
}

JoinResult join(const Tree& a, const Tree& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  std::size_t pa = 0, pb = 0;
  std::string common = superimpose(a.text(), pa, b.text(), pb, a.arity());
  Tree s = Tree::parse(a.arity(), common);
  return JoinResult{s, expansion_path(a, s), expansion_path(b, s)};
}

bool agree_away_from(const Tree& a, const Tree& b, const LeafAddress& v) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
  if (!a.has_node(v) || !b.has_node(v)) return false;
  return a.prune_at(v) == b.prune_at(v);
}

std::string format_address(const LeafAddress& v) {
  std::string out;
  for (int digit : v) out += static_cast<char>('0' + digit);
  return out.empty() ? "(root)" : out;
}

}  // namespace tg
