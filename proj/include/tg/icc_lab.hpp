#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tg/axiom_checks.hpp"
#include "tg/element.hpp"

namespace tg {

// Distinct-conjugate counts of one element under conjugation by short words
// in a generator set.
struct GrowthCurve {
  std::string instance;
  std::string base;        // the element whose class is probed
  std::string generators;  // description of the conjugating set
  std::uint64_t seed = 0;  // provenance only; the enumeration is exhaustive
  std::vector<std::size_t> counts;  // index r = radius
};

std::string growth_csv(const GrowthCurve& curve);

// Counts distinct conjugates w x w^-1 over words w of length <= rmax in
// gens and their inverses. Distinctness goes through the exact equality
// procedure, with a representative-keyed fast path when the instance
// guarantees unique reduced forms. `pair_cap` bounds the quadratic fallback.
GrowthCurve conjugacy_growth(const Element& x, const std::vector<Element>& gens, int rmax,
                             std::size_t pair_cap = 2000000);

// A canonical small conjugating set for growth probes: the two standard
// tree-pair generators plus caret-level middle generators.
std::vector<Element> default_probe_generators(const SystemPtr& sys);
// Five standard non-trivial probe elements.
std::vector<Element> default_probes(const SystemPtr& sys);

// Checks that [1,z,1] commutes with seeded random elements; also replays the
// constant-tuple expansions on three fixed trees. Requires a direct-product
// instance with identity endomorphisms and z central in the base group.
PropertyReport verify_central_element(const SystemPtr& sys, const GroupElem& z, int samples,
                                      std::uint64_t seed);

// For trials random tree pairs (T, U) agreeing away from v, checks that
// [R-, g, R+] commutes with [T, 1, U]. Requires slightly pure + uniform.
PropertyReport verify_uniform_commutation(const SystemPtr& sys, const Tree& r_minus,
                                          const Tree& r_plus, const GroupElem& g,
                                          const LeafAddress& v, int trials, std::uint64_t seed);

// Two non-commuting elements of the form [T,1,U], T and U agreeing away from
// the rightmost depth-m leaf, each commuting with every element of E.
// Every element of E must be theta-zero with a representative of right depth
// m on both trees.
std::pair<Element, Element> finite_commutant_witness(const std::vector<Element>& E, int m);

// The n-th term of the explicit central sequence: a commutator of the two
// standard generators grafted into the rightmost d-adic interval of depth
// m_n, the least m with d^-m <= 1/n.
Element central_sequence_term(const SystemPtr& sys, int n);
int central_sequence_depth(int arity, int n);

struct CentralSequenceRow {
  int n = 0;
  bool nontrivial = false;
  bool commutes_with_all = false;
  bool conjugate_differs = false;
};

// For each n <= nmax: a_n is non-trivial, commutes with every element of E
// past a reported onset, and differs from its x0^k-conjugate. The report
// fails if non-triviality or the conjugate test ever fails, or if no onset
// exists.
PropertyReport verify_central_sequence(const std::vector<Element>& E, int nmax, int k,
                                       std::vector<CentralSequenceRow>* table = nullptr);

}  // namespace tg
