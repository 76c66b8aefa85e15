#pragma once

#include <string>
#include <string_view>

#include "tg/cloning_system.hpp"
#include "tg/tree.hpp"

namespace tg {

// Raw representative triple (T_-, g, T_+); no reduction invariant.
struct ElementRep {
  Tree left;
  GroupElem mid;
  Tree right;
};

// An element of the Thompson-like group of a cloning-system instance, stored
// as a fully reduced representative. Equality is nevertheless decided through
// the quotient (is_identity of x*y^-1), never by comparing representatives,
// since uniqueness of the reduced form is not guaranteed for every instance.
class Element {
 public:
  static Element make(SystemPtr sys, Tree left, GroupElem mid, Tree right);
  static Element make(SystemPtr sys, ElementRep rep);
  static Element identity(SystemPtr sys);

  const SystemPtr& sys() const { return sys_; }
  const Tree& left() const { return rep_.left; }
  const Tree& right() const { return rep_.right; }
  const GroupElem& mid() const { return rep_.mid; }
  const ElementRep& rep() const { return rep_; }
  int level() const { return rep_.right.leaf_count(); }

 private:
  Element(SystemPtr sys, ElementRep rep) : sys_(std::move(sys)), rep_(std::move(rep)) {}
  SystemPtr sys_;
  ElementRep rep_;
};

// One expansion step: caret at leaf k of T_+, caret at rho(g)(k) of T_-,
// middle cloned at k.
ElementRep expand(const CloningSystem& sys, const ElementRep& rep, int k);

// Apply every reduction available; terminates at a triple admitting none.
// Searches smallest leaf index first, so runs are reproducible.
ElementRep reduce(const CloningSystem& sys, ElementRep rep);

Element multiply(const Element& x, const Element& y);
Element invert(const Element& x);
Element power(const Element& x, int e);
Element conjugate(const Element& x, const Element& y);  // y x y^-1

bool is_identity(const Element& x);
bool equals(const Element& x, const Element& y);
bool commutes(const Element& x, const Element& y);

// Canonical text: "[" tree ";" middle ";" tree "]" with the stored reduced
// representative; the middle format is instance-specific.
std::string to_text(const Element& x);
Element parse_element(SystemPtr sys, std::string_view text);

// Random element: `carets` caret additions on each side, seeded middle.
Element sample_element(SystemPtr sys, Rng& rng, int carets);

}  // namespace tg
