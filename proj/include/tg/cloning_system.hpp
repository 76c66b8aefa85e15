#pragma once

#include <any>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tg/perm.hpp"
#include "tg/rng.hpp"

namespace tg {

// Type-erased element of some level group G_n. Each instance knows its own
// carrier type and casts internally.
using GroupElem = std::any;

// Properties an instance asserts about itself. Each claim is independently
// checkable by the axiom/property verifiers.
struct InstanceFlags {
  bool fully_compatible = false;
  bool pure = false;
  bool slightly_pure = false;
  bool diverse = false;
  bool uniform = false;
  // The instance guarantees that fully reduced representatives are unique,
  // enabling representative-keyed deduplication as a fast path.
  bool unique_reduced = false;
};

// Capability record for a d-ary cloning system: a family of groups (G_n) with
// representation maps rho_n : G_n -> S_n and injective cloning maps
// kappa_k^n : G_n -> G_{n+d-1}.
class CloningSystem {
 public:
  CloningSystem(std::string name, int arity, InstanceFlags flags)
      : name_(std::move(name)), arity_(arity), flags_(flags) {}
  virtual ~CloningSystem() = default;

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  const InstanceFlags& flags() const { return flags_; }

  virtual GroupElem identity(int n) const = 0;
  virtual GroupElem mul(int n, const GroupElem& g, const GroupElem& h) const = 0;
  virtual GroupElem inverse(int n, const GroupElem& g) const = 0;
  virtual bool equal(int n, const GroupElem& g, const GroupElem& h) const = 0;
  virtual Perm rho(int n, const GroupElem& g) const = 0;

  // (g)kappa_k^n, landing in G_{n+d-1}.
  virtual GroupElem clone_elem(int n, int k, const GroupElem& g) const = 0;
  // Preimage: the h in G_n with (h)kappa_k^n = g, if one exists. g lives in
  // G_{n+d-1}.
  virtual std::optional<GroupElem> unclone_elem(int n, int k, const GroupElem& g) const = 0;
  virtual bool has_unclone() const { return true; }

  virtual std::vector<GroupElem> small_generators(int n) const = 0;
  virtual GroupElem sample(int n, Rng& rng) const = 0;
  // A non-trivial central element of G_1, when the family carries one.
  virtual std::optional<GroupElem> central_witness() const { return std::nullopt; }

  // |G_n| when finite and small enough to enumerate.
  virtual std::optional<std::uint64_t> order(int /*n*/) const { return std::nullopt; }
  virtual std::vector<GroupElem> enumerate(int n) const;

  virtual std::string format(int n, const GroupElem& g) const = 0;
  virtual GroupElem parse_elem(int n, std::string_view text) const = 0;
  // Membership guard; throws on carriers outside the family.
  virtual void validate(int n, const GroupElem& g) const;
  // One-line description of the middle-entry grammar.
  virtual std::string middle_grammar() const = 0;

  bool is_identity_elem(int n, const GroupElem& g) const { return equal(n, g, identity(n)); }

 private:
  std::string name_;
  int arity_;
  InstanceFlags flags_;
};

using SystemPtr = std::shared_ptr<const CloningSystem>;

}  // namespace tg
