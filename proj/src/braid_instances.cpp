#include <stdexcept>

#include "tg/braid.hpp"
#include "tg/instances.hpp"

namespace tg {

namespace {

// bV_d on braid groups, bF_d on pure braid groups. Multiplication (g, h) |->
// g*h stacks g's diagram on top of h's, so the strand projection is a
// homomorphism for the project-wide composition (f*g)(i) = f(g(i)).
class BraidInstance final : public CloningSystem {
 public:
  BraidInstance(int d, bool pure)
      : CloningSystem((pure ? "bF(" : "bV(") + std::to_string(d) + ")", d,
                      InstanceFlags{.fully_compatible = true,
                                    .pure = pure,
                                    .slightly_pure = pure,
                                    .diverse = true,
                                    .uniform = true,
                                    .unique_reduced = false}),
        pure_(pure) {}

  GroupElem identity(int n) const override { return BraidWord(n); }
  GroupElem mul(int n, const GroupElem& g, const GroupElem& h) const override {
    return BraidWord::stack(as(n, h), as(n, g));
  }
  GroupElem inverse(int n, const GroupElem& g) const override { return as(n, g).inverse(); }
  bool equal(int n, const GroupElem& g, const GroupElem& h) const override {
    return braid_eq(as(n, g), as(n, h));
  }
  Perm rho(int n, const GroupElem& g) const override { return strand_perm(as(n, g)); }
  GroupElem clone_elem(int n, int k, const GroupElem& g) const override {
    return braid_clone(arity(), k, as(n, g));
  }
  std::optional<GroupElem> unclone_elem(int n, int k, const GroupElem& g) const override {
    // delete the d-1 added strands, then certify membership by re-cloning
    const BraidWord& big = as(n + arity() - 1, g);
    BraidWord w = big;
    for (int t = 1; t < arity(); ++t) w = delete_strand(w, k + 1);
    if (!braid_eq(braid_clone(arity(), k, w), big)) return std::nullopt;
    return GroupElem(std::move(w));
  }
  std::vector<GroupElem> small_generators(int n) const override {
    std::vector<GroupElem> out;
    if (pure_) {
      for (BraidWord& g : pure_braid_generators(n)) out.emplace_back(std::move(g));
    } else {
      for (int i = 1; i < n; ++i) out.emplace_back(BraidWord(n, {i}));
    }
    return out;
  }
  GroupElem sample(int n, Rng& rng) const override {
    if (n == 1) return BraidWord(1);
    if (pure_) {
      const auto gens = pure_braid_generators(n);
      BraidWord w(n);
      const int len = rng.range(0, 3);
      for (int i = 0; i < len; ++i) {
        BraidWord g = gens[rng.below(gens.size())];
        if (rng.coin()) g = g.inverse();
        w = BraidWord::stack(w, g);
      }
      return w;
    }
    std::vector<int> letters;
    const int len = rng.range(0, 6);
    for (int i = 0; i < len; ++i) {
      const int gen = rng.range(1, n - 1);
      letters.push_back(rng.coin() ? gen : -gen);
    }
    return BraidWord(n, std::move(letters));
  }
  std::string format(int n, const GroupElem& g) const override { return as(n, g).to_string(); }
  GroupElem parse_elem(int n, std::string_view text) const override {
    BraidWord w = BraidWord::parse(n, text);
    validate(n, GroupElem(w));
    return w;
  }
  void validate(int n, const GroupElem& g) const override {
    const BraidWord& w = as(n, g);
    if (pure_ && !is_pure(w))
      throw std::invalid_argument("middle must be a pure braid");
  }
  std::string middle_grammar() const override {
    return std::string("signed Artin generator indices, e.g. \"2 1 -3\" (\"e\" = empty)") +
           (pure_ ? "; the strand permutation must be trivial" : "");
  }

 private:
  const BraidWord& as(int n, const GroupElem& g) const {
    const BraidWord* w = std::any_cast<BraidWord>(&g);
    if (!w || w->strands() != n) throw std::invalid_argument("bad middle carrier");
    return *w;
  }
  bool pure_;
};

}  // namespace

SystemPtr instance_bV(int d) { return std::make_shared<BraidInstance>(d, false); }
SystemPtr instance_bF(int d) { return std::make_shared<BraidInstance>(d, true); }

}  // namespace tg
