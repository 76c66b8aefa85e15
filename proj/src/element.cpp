#include "tg/element.hpp"

#include <stdexcept>

namespace tg {

std::vector<GroupElem> CloningSystem::enumerate(int) const {
  throw std::logic_error(name_ + ": enumeration unavailable");
}

void CloningSystem::validate(int, const GroupElem&) const {}

Element Element::make(SystemPtr sys, Tree left, GroupElem mid, Tree right) {
  return make(std::move(sys), ElementRep{std::move(left), std::move(mid), std::move(right)});
}

Element Element::make(SystemPtr sys, ElementRep rep) {
  if (!sys) throw std::invalid_argument("null instance");
  if (rep.left.arity() != sys->arity() || rep.right.arity() != sys->arity())
    throw std::invalid_argument("tree arity does not match instance");
  if (rep.left.leaf_count() != rep.right.leaf_count())
    throw std::invalid_argument("tree leaf counts disagree");
  sys->validate(rep.right.leaf_count(), rep.mid);
  if (sys->has_unclone()) rep = reduce(*sys, std::move(rep));
  return Element(std::move(sys), std::move(rep));
}

Element Element::identity(SystemPtr sys) {
  Tree leaf(sys->arity());
  GroupElem one = sys->identity(1);
  return Element(std::move(sys), ElementRep{leaf, std::move(one), leaf});
}

ElementRep expand(const CloningSystem& sys, const ElementRep& rep, int k) {
  const int n = rep.right.leaf_count();
  if (k < 1 || k > n) throw std::out_of_range("expansion leaf out of range");
  const int j = sys.rho(n, rep.mid)(k);
  return ElementRep{rep.left.add_caret(j), sys.clone_elem(n, k, rep.mid), rep.right.add_caret(k)};
}

ElementRep reduce(const CloningSystem& sys, ElementRep rep) {
  const int d = sys.arity();
  for (;;) {
    const int n = rep.right.leaf_count();
    if (n < d) return rep;
    bool reduced = false;
    for (int k : rep.right.bottom_carets()) {
      auto h = sys.unclone_elem(n - d + 1, k, rep.mid);
      if (!h) continue;
      const int j = sys.rho(n - d + 1, *h)(k);
      // the left tree must carry a matching bottom caret at j
      const auto left_carets = rep.left.bottom_carets();
      bool found = false;
      for (int c : left_carets) found = found || c == j;
      if (!found) continue;
      rep = ElementRep{rep.left.remove_caret(j), std::move(*h), rep.right.remove_caret(k)};
      reduced = true;
      break;
    }
    if (!reduced) return rep;
  }
}

namespace {

void require_same_instance(const Element& x, const Element& y) {
  if (x.sys() != y.sys()) {
    // distinct objects may still denote the same instance; compare identities
    if (!x.sys() || !y.sys() || x.sys()->name() != y.sys()->name() ||
        x.sys()->arity() != y.sys()->arity())
      throw std::invalid_argument("instance mismatch");
  }
}

// Reduce a triple with identity middle by tree surgery only; no unclone
// needed, since the middle entry being the identity is invariant under
// expansion and reduction.
void reduce_identity_pair(Tree& left, Tree& right) {
  for (;;) {
    bool reduced = false;
    const auto right_carets = right.bottom_carets();
    const auto left_carets = left.bottom_carets();
    for (int k : right_carets) {
      bool in_left = false;
      for (int c : left_carets) in_left = in_left || c == k;
      if (!in_left) continue;
      left = left.remove_caret(k);
      right = right.remove_caret(k);
      reduced = true;
      break;
    }
    if (!reduced) return;
  }
}

}  // namespace

bool is_identity(const Element& x) {
  const int n = x.level();
  if (!x.sys()->is_identity_elem(n, x.mid())) return false;
  Tree left = x.left();
  Tree right = x.right();
  reduce_identity_pair(left, right);
  return left == right;
}

Element multiply(const Element& x, const Element& y) {
  require_same_instance(x, y);
  const CloningSystem& sys = *x.sys();
  JoinResult j = join(x.right(), y.left());

  // expand x so its right tree becomes the common tree
  ElementRep xr = x.rep();
  for (int k : j.path_left) xr = expand(sys, xr, k);

  // expand y so its LEFT tree becomes the common tree: a caret at leaf t of
  // the left tree is produced by expanding at rho(h)^-1(t)
  ElementRep yr = y.rep();
  for (int t : j.path_right) {
    const int n = yr.right.leaf_count();
    const int k = sys.rho(n, yr.mid).inverse()(t);
    yr = expand(sys, yr, k);
  }

  const int n = xr.right.leaf_count();
  GroupElem prod = sys.mul(n, xr.mid, yr.mid);
  return Element::make(x.sys(), ElementRep{xr.left, std::move(prod), yr.right});
}

Element invert(const Element& x) {
  const int n = x.level();
  return Element::make(x.sys(), x.right(), x.sys()->inverse(n, x.mid()), x.left());
}

Element power(const Element& x, int e) {
  Element acc = Element::identity(x.sys());
  Element base = e < 0 ? invert(x) : x;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) acc = multiply(acc, base);
  return acc;
}

Element conjugate(const Element& x, const Element& y) {
  return multiply(multiply(y, x), invert(y));
}

bool equals(const Element& x, const Element& y) {
  require_same_instance(x, y);
  return is_identity(multiply(x, invert(y)));
}

bool commutes(const Element& x, const Element& y) {
  return equals(multiply(x, y), multiply(y, x));
}

std::string to_text(const Element& x) {
  return "[" + x.left().text() + ";" + x.sys()->format(x.level(), x.mid()) + ";" +
         x.right().text() + "]";
}

Element parse_element(SystemPtr sys, std::string_view text) {
  // strip enclosing brackets
  std::size_t b = text.find_first_not_of(" \t\n");
  std::size_t e = text.find_last_not_of(" \t\n");
  if (b == std::string_view::npos || text[b] != '[' || text[e] != ']')
    throw std::invalid_argument("element must be bracketed: [tree;middle;tree]");
  std::string_view body = text.substr(b + 1, e - b - 1);

  // left tree ends at the first ';' (tree grammar contains no ';')
  const std::size_t first = body.find(';');
  // right tree starts after the last ';'
  const std::size_t last = body.rfind(';');
  if (first == std::string_view::npos || last == first)
    throw std::invalid_argument("element needs two ';' separators");

  Tree left = Tree::parse(sys->arity(), body.substr(0, first));
  Tree right = Tree::parse(sys->arity(), body.substr(last + 1));
  if (left.leaf_count() != right.leaf_count())
    throw std::invalid_argument("tree leaf counts disagree");
  GroupElem mid = sys->parse_elem(right.leaf_count(), body.substr(first + 1, last - first - 1));
  return Element::make(std::move(sys), std::move(left), std::move(mid), std::move(right));
}

Element sample_element(SystemPtr sys, Rng& rng, int carets) {
  Tree left(sys->arity());
  Tree right(sys->arity());
  for (int i = 0; i < carets; ++i) left = left.add_caret(rng.range(1, left.leaf_count()));
  for (int i = 0; i < carets; ++i) right = right.add_caret(rng.range(1, right.leaf_count()));
  GroupElem mid = sys->sample(right.leaf_count(), rng);
  return Element::make(std::move(sys), std::move(left), std::move(mid), std::move(right));
}

}  // namespace tg
