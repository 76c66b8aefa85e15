#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tg/cloning_system.hpp"
#include "tg/rational.hpp"

namespace tg {

// --- permutation family -----------------------------------------------------

// Trivial groups at every level; the resulting Thompson-like group is F_d.
SystemPtr instance_F(int d);
// Symmetric groups with rho the identity and the standard cloning maps; V_d.
SystemPtr instance_V(int d);
// Subgroups of permutations fixing the last point; slightly pure.
SystemPtr instance_Vhat(int d);

// --- braid family -------------------------------------------------------

// Braid groups, rho the strand projections, cloning by strand duplication.
SystemPtr instance_bV(int d);
// Pure braid groups: same maps with middles restricted to ker(rho).
SystemPtr instance_bF(int d);

// --- exact upper-triangular matrix family -----------------------------------

// Invertible upper triangular matrices over Q or Z[1/p].
SystemPtr instance_B(const RingSpec& ring, int d);
// Homothety quotient: matrices up to multiplication by a unit scalar.
SystemPtr instance_Bbar(const RingSpec& ring, int d);
// Corner-trivial subgroup over Z[1/p]: first and last diagonal entries 1.
SystemPtr instance_Abels(long long p, int d);

// --- direct-product family ---------------------------------------------------

struct BaseGroup;  // see product_instances

// Direct powers of a cyclic group Z/m with componentwise cloning through unit
// multipliers mult[i] (value 1 = identity endomorphism); mult.size() == d.
SystemPtr instance_Pi_cyclic(long long m, std::vector<long long> mult, int d);
// Same with first component pinned to the identity (and identity endos).
SystemPtr instance_Psi_cyclic(long long m, int d);
// Direct powers of the infinite direct sum of copies of Z, cloned through the
// interleaving embeddings e_j -> e_{d*j+i-1}.
SystemPtr instance_ZInf(int d);
// Direct powers of a small multiplication-table group with identity endos.
SystemPtr instance_Pi_table(const std::string& base, int d);

// --- corrupted fixtures (negative controls for the checkers) -----------------

// Wraps an instance, multiplying every cloned element by a fixed non-trivial
// generator; breaks C1/C2 with findable witnesses.
SystemPtr corrupt_clone(SystemPtr inner);
// Wraps an instance, composing rho with a transposition at one level only;
// breaks C3.
SystemPtr corrupt_rho(SystemPtr inner, int level);

// --- registry -----------------------------------------------------------

// Parse an instance selector such as "V(2)", "bF(3)", "B(Q,2)",
// "Bbar(Z[1/2],2)", "Abels(2,3)", "Pi(Z4,1,1)", "Pi(Z5,2,3)", "Psi(Z4,2)",
// "Pi(S3,2)", "ZInf(2)".
SystemPtr parse_instance(const std::string& selector);
// Selectors of the shipped families, with a representative parameterisation.
std::vector<std::string> list_instances();

}  // namespace tg
