#include "tg/thompson_maps.hpp"

#include <stdexcept>

#include "tg/instances.hpp"

namespace tg {

Element pi(const Element& x) {
  if (!x.sys()->flags().fully_compatible)
    throw std::invalid_argument(x.sys()->name() + " is not fully compatible");
  const int n = x.level();
  return Element::make(instance_V(x.sys()->arity()), x.left(), x.sys()->rho(n, x.mid()),
                       x.right());
}

bool in_kernel_K(const Element& x) { return is_identity(pi(x)); }

int theta(const Element& x) {
  if (!x.sys()->flags().slightly_pure)
    throw std::invalid_argument(x.sys()->name() + " is not slightly pure");
  return x.left().right_depth() - x.right().right_depth();
}

bool in_D(const Element& x) { return theta(x) == 0; }

Element x0(const SystemPtr& sys) {
  const int d = sys->arity();
  const Tree rv = Tree::right_vine(d, 2);
  const Tree lv = Tree::left_vine(d, 2);
  return Element::make(sys, rv, sys->identity(rv.leaf_count()), lv);
}

Element x1(const SystemPtr& sys) {
  const int d = sys->arity();
  const Tree rv = Tree::caret(d).graft(d, Tree::right_vine(d, 2));
  const Tree lv = Tree::caret(d).graft(d, Tree::left_vine(d, 2));
  return Element::make(sys, rv, sys->identity(rv.leaf_count()), lv);
}

Decomposition decompose(const Element& x) {
  const int m = theta(x);
  Element w = multiply(x, power(x0(x.sys()), -m));
  return Decomposition{std::move(w), m};
}

}  // namespace tg
