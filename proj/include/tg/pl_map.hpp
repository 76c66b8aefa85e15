#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tg/element.hpp"
#include "tg/rational.hpp"
#include "tg/tree.hpp"

namespace tg {

// Increasing piecewise-linear bijection of [0,1] with d-adic breakpoints and
// power-of-d slopes. Stored canonically (no collinear interior breakpoints),
// so equality of the stored data is equality of maps.
class PLMap {
 public:
  static PLMap identity();
  // Domain partition from the leaves of `domain`, range partition from
  // `range`, matched in order.
  static PLMap from_trees(const Tree& domain, const Tree& range);

  Rat operator()(const Rat& x) const;
  const std::vector<std::pair<Rat, Rat>>& points() const { return pts_; }

  bool operator==(const PLMap& o) const { return pts_ == o.pts_; }
  bool operator!=(const PLMap& o) const { return pts_ != o.pts_; }

  // Maximal open intervals on which the map moves points.
  std::vector<std::pair<Rat, Rat>> support() const;

  std::string to_string() const;

  friend PLMap compose(const PLMap& f, const PLMap& g);

 private:
  explicit PLMap(std::vector<std::pair<Rat, Rat>> pts) : pts_(std::move(pts)) {}
  static PLMap canonical(std::vector<std::pair<Rat, Rat>> pts);
  std::vector<std::pair<Rat, Rat>> pts_;  // (x, f(x)) at breakpoints, ends pinned at 0 and 1
};

PLMap compose(const PLMap& f, const PLMap& g);  // apply g first

// The interval [lo, hi) of each leaf under repeated d-adic subdivision.
std::vector<std::pair<Rat, Rat>> leaf_intervals(const Tree& t);

// Semantic oracle for elements with trivial middle: the map taking the right
// tree's subdivision to the left tree's. Requires rho(middle) trivial.
PLMap pl_map(const Element& x);
std::vector<std::pair<Rat, Rat>> pl_support(const Element& x);

}  // namespace tg
