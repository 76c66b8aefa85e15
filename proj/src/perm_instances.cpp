#include <algorithm>
#include <stdexcept>

#include "tg/instances.hpp"

namespace tg {

namespace {

// Middle carrier for F_d: the trivial group at every level.
struct TrivialElem {};

class FInstance final : public CloningSystem {
 public:
  explicit FInstance(int d)
      : CloningSystem("F(" + std::to_string(d) + ")", d,
                      InstanceFlags{.fully_compatible = true,
                                    .pure = true,
                                    .slightly_pure = true,
                                    .diverse = true,
                                    .uniform = true,
                                    .unique_reduced = true}) {}

  GroupElem identity(int) const override { return TrivialElem{}; }
  GroupElem mul(int, const GroupElem&, const GroupElem&) const override { return TrivialElem{}; }
  GroupElem inverse(int, const GroupElem&) const override { return TrivialElem{}; }
  bool equal(int, const GroupElem&, const GroupElem&) const override { return true; }
  Perm rho(int n, const GroupElem&) const override { return Perm(n); }
  GroupElem clone_elem(int, int, const GroupElem&) const override { return TrivialElem{}; }
  std::optional<GroupElem> unclone_elem(int, int, const GroupElem&) const override {
    return TrivialElem{};
  }
  std::vector<GroupElem> small_generators(int) const override { return {}; }
  GroupElem sample(int, Rng&) const override { return TrivialElem{}; }
  std::optional<std::uint64_t> order(int) const override { return 1; }
  std::vector<GroupElem> enumerate(int) const override { return {TrivialElem{}}; }
  std::string format(int, const GroupElem&) const override { return ""; }
  GroupElem parse_elem(int, std::string_view text) const override {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        throw std::invalid_argument("trivial middle must be empty");
    return TrivialElem{};
  }
  std::string middle_grammar() const override { return "empty (trivial group)"; }
};

// V_d and Vhat_d share everything except the subgroup restriction.
class VInstance final : public CloningSystem {
 public:
  VInstance(int d, bool hat)
      : CloningSystem((hat ? "Vhat(" : "V(") + std::to_string(d) + ")", d,
                      InstanceFlags{.fully_compatible = true,
                                    .pure = false,
                                    .slightly_pure = hat,
                                    .diverse = true,
                                    .uniform = true,
                                    .unique_reduced = true}),
        hat_(hat) {}

  GroupElem identity(int n) const override { return Perm(n); }
  GroupElem mul(int n, const GroupElem& g, const GroupElem& h) const override {
    return compose(as(n, g), as(n, h));
  }
  GroupElem inverse(int n, const GroupElem& g) const override { return as(n, g).inverse(); }
  bool equal(int n, const GroupElem& g, const GroupElem& h) const override {
    return as(n, g) == as(n, h);
  }
  Perm rho(int n, const GroupElem& g) const override { return as(n, g); }
  GroupElem clone_elem(int n, int k, const GroupElem& g) const override {
    return sigma_clone(arity(), k, as(n, g));
  }
  std::optional<GroupElem> unclone_elem(int n, int k, const GroupElem& g) const override {
    auto s = sigma_unclone(arity(), k, as(n + arity() - 1, g));
    if (!s) return std::nullopt;
    return GroupElem(*s);
  }
  std::vector<GroupElem> small_generators(int n) const override {
    std::vector<GroupElem> gens;
    const int top = hat_ ? n - 1 : n;
    for (int i = 1; i + 1 <= top; ++i) gens.emplace_back(Perm::transposition(n, i, i + 1));
    return gens;
  }
  GroupElem sample(int n, Rng& rng) const override {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    const int top = hat_ ? n - 1 : n;  // Fisher-Yates on the movable points
    for (int i = top; i > 1; --i)
      std::swap(images[static_cast<std::size_t>(i - 1)],
                images[static_cast<std::size_t>(rng.range(0, i - 1))]);
    return Perm::from_images(std::move(images));
  }
  std::optional<std::uint64_t> order(int n) const override {
    std::uint64_t f = 1;
    const int top = hat_ ? n - 1 : n;
    for (int i = 2; i <= top; ++i) {
      if (f > 20000000ull / static_cast<std::uint64_t>(i)) return std::nullopt;
      f *= static_cast<std::uint64_t>(i);
    }
    return f;
  }
  std::vector<GroupElem> enumerate(int n) const override {
    std::vector<GroupElem> out;
    for (Perm& p : all_perms(n))
      if (!hat_ || p(n) == n) out.emplace_back(std::move(p));
    return out;
  }
  std::string format(int n, const GroupElem& g) const override { return as(n, g).to_string(); }
  GroupElem parse_elem(int n, std::string_view text) const override {
    Perm p = Perm::parse(text);
    if (p.degree() != n) throw std::invalid_argument("permutation degree does not match trees");
    validate(n, GroupElem(p));
    return p;
  }
  void validate(int n, const GroupElem& g) const override {
    const Perm& p = as(n, g);
    if (hat_ && p(n) != n)
      throw std::invalid_argument("middle must fix the last point");
  }
  std::string middle_grammar() const override {
    return std::string("one-line permutation images, e.g. \"3 1 2\"") +
           (hat_ ? " (must fix the last point)" : "");
  }

 private:
  const Perm& as(int n, const GroupElem& g) const {
    const Perm* p = std::any_cast<Perm>(&g);
    if (!p || p->degree() != n) throw std::invalid_argument("bad middle carrier");
    return *p;
  }
  bool hat_;
};

}  // namespace

SystemPtr instance_F(int d) { return std::make_shared<FInstance>(d); }
SystemPtr instance_V(int d) { return std::make_shared<VInstance>(d, false); }
SystemPtr instance_Vhat(int d) { return std::make_shared<VInstance>(d, true); }

}  // namespace tg
