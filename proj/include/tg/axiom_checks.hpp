#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tg/cloning_system.hpp"

namespace tg {

enum class Verdict { Pass, Fail, InconclusivePass };
enum class CheckMode { Auto, Exhaustive, Randomized };

std::string to_string(Verdict v);

// Auditable outcome of an axiom or property check.
struct PropertyReport {
  std::string property;
  std::string instance;
  int level = 0;  // the n checked
  std::string mode;
  std::uint64_t seed = 0;
  int samples = 0;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> witnesses;
  std::string note;

  bool passed() const { return verdict != Verdict::Fail; }
  std::string to_text() const;
  std::string to_json() const;
};

struct CheckConfig {
  CheckMode mode = CheckMode::Auto;
  std::uint64_t seed = 1;
  int samples = 500;
};

// Cloning a product: (gh)k_k = (g)k_{rho(h)(k)} (h)k_k.
PropertyReport check_c1(const CloningSystem& sys, int n, const CheckConfig& cfg = {});
// Product of clonings: cloning at l then k (k < l) equals k then l+d-1.
PropertyReport check_c2(const CloningSystem& sys, int n, const CheckConfig& cfg = {});
// Compatibility of rho with the symmetric-group cloning maps; `full` also
// checks the cloned block itself.
PropertyReport check_c3(const CloningSystem& sys, int n, bool full, const CheckConfig& cfg = {});
PropertyReport check_pure(const CloningSystem& sys, int n, const CheckConfig& cfg = {});
PropertyReport check_slightly_pure(const CloningSystem& sys, int n, const CheckConfig& cfg = {});
// Re-cloning any copy within a freshly cloned block gives the same result.
PropertyReport check_uniform(const CloningSystem& sys, int n, const CheckConfig& cfg = {});
// The images of all cloning maps at level n intersect trivially. Exhaustive
// mode settles the level; randomized mode can only report inconclusive-pass.
PropertyReport check_diverse(const CloningSystem& sys, int n, const CheckConfig& cfg = {});

// Group laws (associativity, identity, inverses) on seeded random elements of
// the Thompson-like group, decided through the element equality procedure.
PropertyReport check_group_laws(const SystemPtr& sys, int triples, std::uint64_t seed);

}  // namespace tg
