#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tg/element.hpp"
#include "tg/tree.hpp"

namespace tg {

// Prefix substitution on infinite d-ary words: a complete prefix code mapped
// bijectively onto another, w = u_k s  |->  v_k s. Stored canonically (merged
// and sorted), so equal maps have equal stored data.
class PrefixMap {
 public:
  // Pairs (address of leaf k of the right tree -> address of leaf rho(g)(k)
  // of the left tree). Works for any instance whose rho lands in S_n.
  static PrefixMap from_element(const Element& x);
  static PrefixMap identity(int arity);

  int arity() const { return arity_; }
  const std::vector<std::pair<LeafAddress, LeafAddress>>& pairs() const { return pairs_; }

  bool operator==(const PrefixMap& o) const { return arity_ == o.arity_ && pairs_ == o.pairs_; }
  bool operator!=(const PrefixMap& o) const { return !(*this == o); }

  std::string to_string() const;

  friend PrefixMap compose(const PrefixMap& f, const PrefixMap& g);

 private:
  PrefixMap(int arity, std::vector<std::pair<LeafAddress, LeafAddress>> pairs);
  void canonicalize();
  int arity_;
  std::vector<std::pair<LeafAddress, LeafAddress>> pairs_;
};

PrefixMap compose(const PrefixMap& f, const PrefixMap& g);  // apply g first

}  // namespace tg
