#pragma once

#include "tg/element.hpp"

namespace tg {

// The quotient map to V_d that keeps the trees and replaces the middle by its
// rho-image. Requires a fully compatible instance.
Element pi(const Element& x);

// Kernel membership: true iff pi(x) is the identity of V_d.
bool in_kernel_K(const Element& x);

// Right-depth character: difference of the right depths of the two trees.
// Well defined exactly for slightly pure instances.
int theta(const Element& x);
bool in_D(const Element& x);  // theta == 0

// The standard generator with theta value +1: right vine over left vine with
// two carets, embedded with identity middle.
Element x0(const SystemPtr& sys);
// A second standard generator (x0 grafted under the last leaf of a caret);
// does not commute with x0.
Element x1(const SystemPtr& sys);

struct Decomposition {
  Element d_part;  // theta-zero factor
  int exponent;    // power of x0
};

// x = d_part * x0^exponent with theta(d_part) == 0.
Decomposition decompose(const Element& x);

}  // namespace tg
