#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tg/cloning_system.hpp"

namespace tg {

// Injective endomorphism of a base group, with a preimage capability.
struct Endo {
  std::string name;
  std::function<GroupElem(const GroupElem&)> apply;
  std::function<std::optional<GroupElem>(const GroupElem&)> preimage;
};

// Capability record for the base group G of a direct-product family.
struct BaseGroup {
  std::string name;
  std::function<GroupElem()> identity;
  std::function<GroupElem(const GroupElem&, const GroupElem&)> mul;
  std::function<GroupElem(const GroupElem&)> inv;
  std::function<bool(const GroupElem&, const GroupElem&)> eq;
  std::function<GroupElem(Rng&)> sample;
  std::function<std::string(const GroupElem&)> format;
  std::function<GroupElem(std::string_view)> parse;
  std::vector<GroupElem> generators;
  std::optional<GroupElem> center_witness;          // a non-trivial central element
  std::optional<std::vector<GroupElem>> elements;   // finite enumeration
  std::vector<Endo> endos;                          // one per cloning slot
};

// Tuple carrier (g_1, ..., g_n) of base-group elements.
struct GTuple {
  std::vector<GroupElem> comps;
};

BaseGroup cyclic_base(long long m, std::vector<long long> multipliers);
BaseGroup symmetric3_base(int d);  // trivial center; identity endos
// Finitely supported maps index -> Z, with the interleaving embeddings
// e_j -> e_{d*j + i - 1} whose images meet only in 0.
BaseGroup zinf_base(int d);

// Elements of zinf_base: finitely supported integer combinations.
using ZInfElem = std::map<int, long long>;

}  // namespace tg
