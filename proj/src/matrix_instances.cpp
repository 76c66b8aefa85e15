#include <stdexcept>

#include "tg/instances.hpp"
#include "tg/ut_matrix.hpp"

namespace tg {

namespace {

enum class MatrixKind { Plain, Homothety, CornerTrivial };

// B_n(R), the homothety quotient, and the corner-trivial subgroup (first and
// last diagonal entries 1) over Z[1/p]. All three share the same cloning
// maps; they differ in equality and membership.
class MatrixInstance final : public CloningSystem {
 public:
  MatrixInstance(MatrixKind kind, RingSpec ring, int d)
      : CloningSystem(display_name(kind, ring, d), d,
                      InstanceFlags{.fully_compatible = true,
                                    .pure = true,
                                    .slightly_pure = true,
                                    .diverse = kind != MatrixKind::Plain,
                                    .uniform = true,
                                    .unique_reduced = false}),
        kind_(kind),
        ring_(ring) {}

  GroupElem identity(int n) const override { return UTMatrix(n); }
  GroupElem mul(int n, const GroupElem& g, const GroupElem& h) const override {
    return as(n, g) * as(n, h);
  }
  GroupElem inverse(int n, const GroupElem& g) const override { return as(n, g).inverse(); }
  bool equal(int n, const GroupElem& g, const GroupElem& h) const override {
    const UTMatrix& a = as(n, g);
    const UTMatrix& b = as(n, h);
    if (kind_ != MatrixKind::Homothety) return a == b;
    // A ~ B iff A = rB for a unit r; the candidate scalar comes from the
    // leading diagonal entries
    const Rat r = a.at(1, 1) / b.at(1, 1);
    return ring_.is_unit(r) && a == b.scaled(r);
  }
  Perm rho(int n, const GroupElem&) const override { return Perm(n); }
  GroupElem clone_elem(int n, int k, const GroupElem& g) const override {
    return mtx_clone(arity(), k, as(n, g));
  }
  std::optional<GroupElem> unclone_elem(int n, int k, const GroupElem& g) const override {
    // The collapse-and-reclone certificate is scalar-equivariant, so it also
    // decides membership in the homothety quotient: clone(collapse(rM)) = rM
    // holds for some unit r iff it holds for r = 1.
    auto a = mtx_unclone(arity(), k, as(n + arity() - 1, g));
    if (!a) return std::nullopt;
    return GroupElem(std::move(*a));
  }
  std::vector<GroupElem> small_generators(int n) const override {
    std::vector<GroupElem> out;
    for (int i = 1; i < n; ++i) {
      UTMatrix t(n);
      t.set(i, i + 1, Rat(1));
      out.emplace_back(std::move(t));
    }
    if (kind_ == MatrixKind::Plain && n >= 1) {
      UTMatrix s(n);
      s.set(1, 1, ring_.kind == RingSpec::Kind::ZInvP ? Rat(ring_.p) : Rat(2));
      out.emplace_back(std::move(s));
    }
    return out;
  }
  GroupElem sample(int n, Rng& rng) const override {
    UTMatrix m(n);
    for (int i = 1; i <= n; ++i) {
      const bool corner = kind_ == MatrixKind::CornerTrivial && (i == 1 || i == n);
      m.set(i, i, corner ? Rat(1) : ring_.sample_unit(rng));
      for (int j = i + 1; j <= n; ++j) m.set(i, j, ring_.sample_element(rng));
    }
    return m;
  }
  std::optional<GroupElem> central_witness() const override {
    // scalar matrices are central in the plain family; the quotient kills
    // them and the corner-trivial subgroup excludes them
    if (kind_ != MatrixKind::Plain) return std::nullopt;
    const Rat r = ring_.kind == RingSpec::Kind::ZInvP ? Rat(ring_.p) : Rat(2);
    return GroupElem(UTMatrix(1).scaled(r));
  }
  std::string format(int n, const GroupElem& g) const override { return as(n, g).to_string(); }
  GroupElem parse_elem(int n, std::string_view text) const override {
    UTMatrix m = UTMatrix::parse(text);
    if (m.size() != n) throw std::invalid_argument("matrix size does not match trees");
    validate(n, GroupElem(m));
    return m;
  }
  void validate(int n, const GroupElem& g) const override {
    const UTMatrix& m = as(n, g);
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j)
        if (!ring_.contains(m.at(i, j)))
          throw std::invalid_argument("entry outside the ring " + ring_.name());
      if (!ring_.is_unit(m.at(i, i)))
        throw std::invalid_argument("diagonal entry is not a unit of " + ring_.name());
    }
    if (kind_ == MatrixKind::CornerTrivial &&
        (m.at(1, 1) != Rat(1) || m.at(n, n) != Rat(1)))
      throw std::invalid_argument("corner diagonal entries must be 1");
  }
  std::string middle_grammar() const override {
    std::string s = "rows ';'-separated, entries space-separated rationals over " + ring_.name();
    if (kind_ == MatrixKind::Homothety) s += "; matrices equal up to a unit scalar";
    if (kind_ == MatrixKind::CornerTrivial) s += "; first and last diagonal entries 1";
    return s;
  }

 private:
  static std::string display_name(MatrixKind kind, const RingSpec& ring, int d) {
    switch (kind) {
      case MatrixKind::Plain:
        return "B(" + ring.name() + "," + std::to_string(d) + ")";
      case MatrixKind::Homothety:
        return "Bbar(" + ring.name() + "," + std::to_string(d) + ")";
      case MatrixKind::CornerTrivial:
        return "Abels(" + std::to_string(ring.p) + "," + std::to_string(d) + ")";
    }
    return "?";
  }

  const UTMatrix& as(int n, const GroupElem& g) const {
    const UTMatrix* m = std::any_cast<UTMatrix>(&g);
    if (!m || m->size() != n) throw std::invalid_argument("bad middle carrier");
    return *m;
  }

  MatrixKind kind_;
  RingSpec ring_;
};

}  // namespace

SystemPtr instance_B(const RingSpec& ring, int d) {
  return std::make_shared<MatrixInstance>(MatrixKind::Plain, ring, d);
}
SystemPtr instance_Bbar(const RingSpec& ring, int d) {
  return std::make_shared<MatrixInstance>(MatrixKind::Homothety, ring, d);
}
SystemPtr instance_Abels(long long p, int d) {
  return std::make_shared<MatrixInstance>(MatrixKind::CornerTrivial, RingSpec::z_inv_p(p), d);
}

}  // namespace tg
