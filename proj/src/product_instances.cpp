#include "tg/product_instances.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tg/instances.hpp"

namespace tg {

namespace {

long long mod_norm(long long x, long long m) { return ((x % m) + m) % m; }

}  // namespace

BaseGroup cyclic_base(long long m, std::vector<long long> multipliers) {
  if (m < 2) throw std::invalid_argument("cyclic order must be at least 2");
  BaseGroup g;
  g.name = "Z" + std::to_string(m);
  g.identity = [] { return GroupElem(0LL); };
  g.mul = [m](const GroupElem& a, const GroupElem& b) {
    return GroupElem(mod_norm(std::any_cast<long long>(a) + std::any_cast<long long>(b), m));
  };
  g.inv = [m](const GroupElem& a) { return GroupElem(mod_norm(-std::any_cast<long long>(a), m)); };
  g.eq = [](const GroupElem& a, const GroupElem& b) {
    return std::any_cast<long long>(a) == std::any_cast<long long>(b);
  };
  g.sample = [m](Rng& rng) { return GroupElem(static_cast<long long>(rng.below(static_cast<std::uint64_t>(m)))); };
  g.format = [](const GroupElem& a) { return std::to_string(std::any_cast<long long>(a)); };
  g.parse = [m](std::string_view t) {
    return GroupElem(mod_norm(std::stoll(std::string(t)), m));
  };
  g.generators = {GroupElem(1LL)};
  g.center_witness = GroupElem(1LL);  // abelian: any non-identity element
  std::vector<GroupElem> all;
  for (long long v = 0; v < m; ++v) all.emplace_back(v);
  g.elements = std::move(all);
  for (long long mult : multipliers) {
    const long long a = mod_norm(mult, m);
    if (std::gcd(a, m) != 1)
      throw std::invalid_argument("multiplier must be a unit mod " + std::to_string(m));
    Endo e;
    e.name = a == 1 ? "id" : "x" + std::to_string(a);
    e.apply = [m, a](const GroupElem& x) {
      return GroupElem(mod_norm(std::any_cast<long long>(x) * a, m));
    };
    // units are invertible, so the preimage always exists
    long long inv_a = 1;
    for (long long t = 1; t < m; ++t)
      if (mod_norm(a * t, m) == 1) inv_a = t;
    e.preimage = [m, inv_a](const GroupElem& x) {
      return std::optional<GroupElem>(GroupElem(mod_norm(std::any_cast<long long>(x) * inv_a, m)));
    };
    g.endos.push_back(std::move(e));
  }
  return g;
}

BaseGroup symmetric3_base(int d) {
  // S3 as a multiplication-table group on {0..5}: element i<3 is the rotation
  // r^i, element 3+i is the reflection s*r^i, with s r s = r^-1.
  auto code = [](int rot, int flip) { return flip * 3 + rot; };
  auto rot_of = [](int x) { return x % 3; };
  auto flip_of = [](int x) { return x / 3; };
  auto mulfn = [=](int x, int y) {
    // (s^a r^i)(s^b r^j) = s^{a+b} r^{(-1)^b i + j}
    const int a = flip_of(x), i = rot_of(x), b = flip_of(y), j = rot_of(y);
    const int sign = b ? -1 : 1;
    return code((((sign * i + j) % 3) + 3) % 3, (a + b) % 2);
  };
  BaseGroup g;
  g.name = "S3";
  g.identity = [] { return GroupElem(0); };
  g.mul = [mulfn](const GroupElem& a, const GroupElem& b) {
    return GroupElem(mulfn(std::any_cast<int>(a), std::any_cast<int>(b)));
  };
  g.inv = [mulfn](const GroupElem& a) {
    const int x = std::any_cast<int>(a);
    for (int y = 0; y < 6; ++y)
      if (mulfn(x, y) == 0) return GroupElem(y);
    throw std::logic_error("no inverse");
  };
  g.eq = [](const GroupElem& a, const GroupElem& b) {
    return std::any_cast<int>(a) == std::any_cast<int>(b);
  };
  g.sample = [](Rng& rng) { return GroupElem(static_cast<int>(rng.below(6))); };
  g.format = [](const GroupElem& a) { return std::to_string(std::any_cast<int>(a)); };
  g.parse = [](std::string_view t) {
    const int v = std::stoi(std::string(t));
    if (v < 0 || v > 5) throw std::invalid_argument("S3 element out of range");
    return GroupElem(v);
  };
  g.generators = {GroupElem(1), GroupElem(3)};
  g.center_witness = std::nullopt;  // trivial center
  std::vector<GroupElem> all;
  for (int v = 0; v < 6; ++v) all.emplace_back(v);
  g.elements = std::move(all);
  for (int i = 0; i < d; ++i) {
    Endo e;
    e.name = "id";
    e.apply = [](const GroupElem& x) { return x; };
    e.preimage = [](const GroupElem& x) { return std::optional<GroupElem>(x); };
    g.endos.push_back(std::move(e));
  }
  return g;
}

BaseGroup zinf_base(int d) {
  auto trim = [](ZInfElem z) {
    for (auto it = z.begin(); it != z.end();)
      it = it->second == 0 ? z.erase(it) : std::next(it);
    return z;
  };
  BaseGroup g;
  g.name = "Zinf";
  g.identity = [] { return GroupElem(ZInfElem{}); };
  g.mul = [trim](const GroupElem& a, const GroupElem& b) {
    ZInfElem z = std::any_cast<ZInfElem>(a);
    for (const auto& [j, c] : std::any_cast<ZInfElem>(b)) z[j] += c;
    return GroupElem(trim(std::move(z)));
  };
  g.inv = [](const GroupElem& a) {
    ZInfElem z = std::any_cast<ZInfElem>(a);
    for (auto& [j, c] : z) c = -c;
    return GroupElem(std::move(z));
  };
  g.eq = [](const GroupElem& a, const GroupElem& b) {
    return std::any_cast<ZInfElem>(a) == std::any_cast<ZInfElem>(b);
  };
  g.sample = [](Rng& rng) {
    ZInfElem z;
    const int terms = rng.range(0, 2);
    for (int t = 0; t < terms; ++t) {
      const int j = rng.range(0, 3);
      const long long c = rng.range(-2, 2);
      if (c != 0) z[j] += c;
    }
    for (auto it = z.begin(); it != z.end();)
      it = it->second == 0 ? z.erase(it) : std::next(it);
    return GroupElem(std::move(z));
  };
  g.format = [](const GroupElem& a) {
    const auto& z = std::any_cast<const ZInfElem&>(a);
    if (z.empty()) return std::string("e");
    std::string out;
    for (const auto& [j, c] : z) {
      if (!out.empty()) out += ' ';
      out += std::to_string(j) + ":" + std::to_string(c);
    }
    return out;
  };
  g.parse = [](std::string_view t) {
    ZInfElem z;
    std::istringstream in{std::string(t)};
    std::string tok;
    while (in >> tok) {
      if (tok == "e") continue;
      const std::size_t colon = tok.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("expected j:c pair");
      const int j = std::stoi(tok.substr(0, colon));
      const long long c = std::stoll(tok.substr(colon + 1));
      if (j < 0) throw std::invalid_argument("negative index");
      if (c != 0) z[j] += c;
    }
    return GroupElem(std::move(z));
  };
  {
    ZInfElem e0{{0, 1}};
    ZInfElem e1{{1, 1}};
    g.generators = {GroupElem(e0), GroupElem(e1)};
    g.center_witness = GroupElem(e0);
  }
  for (int i = 1; i <= d; ++i) {
    Endo e;
    e.name = "interleave" + std::to_string(i);
    e.apply = [d, i](const GroupElem& x) {
      ZInfElem out;
      for (const auto& [j, c] : std::any_cast<const ZInfElem&>(x)) out[d * j + i - 1] = c;
      return GroupElem(std::move(out));
    };
    e.preimage = [d, i](const GroupElem& x) -> std::optional<GroupElem> {
      ZInfElem out;
      for (const auto& [j, c] : std::any_cast<const ZInfElem&>(x)) {
        if (j % d != i - 1) return std::nullopt;  // support residue obstruction
        out[j / d] = c;
      }
      return GroupElem(std::move(out));
    };
    g.endos.push_back(std::move(e));
  }
  return g;
}

namespace {

// Direct powers of a base group: (g_1,...,g_n), cloning through the
// endomorphism tuple. The Psi variant pins the first component to the
// identity.
class ProductInstance final : public CloningSystem {
 public:
  ProductInstance(std::string name, BaseGroup base, int d, bool psi, InstanceFlags flags)
      : CloningSystem(std::move(name), d, flags), base_(std::move(base)), psi_(psi) {
    if (static_cast<int>(base_.endos.size()) != d)
      throw std::invalid_argument("endomorphism count must equal the arity");
  }

  const BaseGroup& base() const { return base_; }

  GroupElem identity(int n) const override {
    GTuple t;
    for (int i = 0; i < n; ++i) t.comps.push_back(base_.identity());
    return t;
  }
  GroupElem mul(int n, const GroupElem& g, const GroupElem& h) const override {
    const GTuple& a = as(n, g);
    const GTuple& b = as(n, h);
    GTuple out;
    for (int i = 0; i < n; ++i)
      out.comps.push_back(base_.mul(a.comps[static_cast<std::size_t>(i)],
                                    b.comps[static_cast<std::size_t>(i)]));
    return out;
  }
  GroupElem inverse(int n, const GroupElem& g) const override {
    GTuple out;
    for (const GroupElem& c : as(n, g).comps) out.comps.push_back(base_.inv(c));
    return out;
  }
  bool equal(int n, const GroupElem& g, const GroupElem& h) const override {
    const GTuple& a = as(n, g);
    const GTuple& b = as(n, h);
    for (int i = 0; i < n; ++i)
      if (!base_.eq(a.comps[static_cast<std::size_t>(i)], b.comps[static_cast<std::size_t>(i)]))
        return false;
    return true;
  }
  Perm rho(int n, const GroupElem&) const override { return Perm(n); }
  GroupElem clone_elem(int n, int k, const GroupElem& g) const override {
    if (k < 1 || k > n) throw std::out_of_range("clone index out of range");
    const GTuple& t = as(n, g);
    GTuple out;
    for (int i = 0; i < k - 1; ++i) out.comps.push_back(t.comps[static_cast<std::size_t>(i)]);
    for (int i = 0; i < arity(); ++i)
      out.comps.push_back(base_.endos[static_cast<std::size_t>(i)].apply(
          t.comps[static_cast<std::size_t>(k - 1)]));
    for (int i = k; i < n; ++i) out.comps.push_back(t.comps[static_cast<std::size_t>(i)]);
    return out;
  }
  std::optional<GroupElem> unclone_elem(int n, int k, const GroupElem& g) const override {
    if (k < 1 || k > n) throw std::out_of_range("clone index out of range");
    const GTuple& t = as(n + arity() - 1, g);
    // all d block preimages must exist and agree
    std::optional<GroupElem> pre;
    for (int i = 0; i < arity(); ++i) {
      auto p = base_.endos[static_cast<std::size_t>(i)].preimage(
          t.comps[static_cast<std::size_t>(k - 1 + i)]);
      if (!p) return std::nullopt;
      if (!pre)
        pre = std::move(p);
      else if (!base_.eq(*pre, *p))
        return std::nullopt;
    }
    GTuple out;
    for (int i = 0; i < k - 1; ++i) out.comps.push_back(t.comps[static_cast<std::size_t>(i)]);
    out.comps.push_back(*pre);
    for (int i = k + arity() - 1; i < n + arity() - 1; ++i)
      out.comps.push_back(t.comps[static_cast<std::size_t>(i)]);
    if (psi_ && !base_.eq(out.comps[0], base_.identity())) return std::nullopt;
    return GroupElem(std::move(out));
  }
  std::vector<GroupElem> small_generators(int n) const override {
    std::vector<GroupElem> out;
    for (int slot = psi_ ? 1 : 0; slot < n; ++slot) {
      for (const GroupElem& g : base_.generators) {
        GTuple t;
        for (int i = 0; i < n; ++i) t.comps.push_back(i == slot ? g : base_.identity());
        out.emplace_back(std::move(t));
      }
    }
    return out;
  }
  GroupElem sample(int n, Rng& rng) const override {
    GTuple t;
    for (int i = 0; i < n; ++i)
      t.comps.push_back(psi_ && i == 0 ? base_.identity() : base_.sample(rng));
    return t;
  }
  std::optional<GroupElem> central_witness() const override {
    if (psi_ || !base_.center_witness) return std::nullopt;
    return GroupElem(GTuple{{*base_.center_witness}});
  }
  std::optional<std::uint64_t> order(int n) const override {
    if (!base_.elements) return std::nullopt;
    const std::uint64_t b = base_.elements->size();
    std::uint64_t total = 1;
    for (int i = psi_ ? 1 : 0; i < n; ++i) {
      if (total > 20000000ull / b) return std::nullopt;
      total *= b;
    }
    return total;
  }
  std::vector<GroupElem> enumerate(int n) const override {
    if (!base_.elements) throw std::logic_error(name() + ": base group not finite");
    std::vector<GTuple> acc{GTuple{}};
    for (int i = 0; i < n; ++i) {
      std::vector<GTuple> next;
      const bool pinned = psi_ && i == 0;
      for (const GTuple& t : acc) {
        if (pinned) {
          GTuple u = t;
          u.comps.push_back(base_.identity());
          next.push_back(std::move(u));
          continue;
        }
        for (const GroupElem& g : *base_.elements) {
          GTuple u = t;
          u.comps.push_back(g);
          next.push_back(std::move(u));
        }
      }
      acc = std::move(next);
    }
    std::vector<GroupElem> out;
    out.reserve(acc.size());
    for (GTuple& t : acc) out.emplace_back(std::move(t));
    return out;
  }
  std::string format(int n, const GroupElem& g) const override {
    const GTuple& t = as(n, g);
    std::string out = "(";
    for (int i = 0; i < n; ++i) {
      if (i) out += ',';
      out += base_.format(t.comps[static_cast<std::size_t>(i)]);
    }
    return out + ")";
  }
  GroupElem parse_elem(int n, std::string_view text) const override {
    std::size_t b = text.find('(');
    std::size_t e = text.rfind(')');
    if (b == std::string_view::npos || e == std::string_view::npos || e < b)
      throw std::invalid_argument("tuple must be parenthesised");
    std::string body(text.substr(b + 1, e - b - 1));
    GTuple t;
    std::istringstream in(body);
    std::string comp;
    while (std::getline(in, comp, ',')) t.comps.push_back(base_.parse(comp));
    if (static_cast<int>(t.comps.size()) != n)
      throw std::invalid_argument("tuple length does not match trees");
    validate(n, GroupElem(t));
    return t;
  }
  void validate(int n, const GroupElem& g) const override {
    const GTuple& t = as(n, g);
    if (psi_ && n >= 1 && !base_.eq(t.comps[0], base_.identity()))
      throw std::invalid_argument("first component must be the identity");
  }
  std::string middle_grammar() const override {
    std::string s = "tuple \"(g,...,g)\" of " + base_.name + " elements";
    if (base_.name == "Zinf") s += ", each \"j:c ...\" or \"e\"";
    if (psi_) s += "; first component must be the identity";
    return s;
  }

 private:
  const GTuple& as(int n, const GroupElem& g) const {
    const GTuple* t = std::any_cast<GTuple>(&g);
    if (!t || static_cast<int>(t->comps.size()) != n)
      throw std::invalid_argument("bad middle carrier");
    return *t;
  }
  BaseGroup base_;
  bool psi_;
};

InstanceFlags product_flags(bool uniform, bool diverse) {
  return InstanceFlags{.fully_compatible = true,
                       .pure = true,
                       .slightly_pure = true,
                       .diverse = diverse,
                       .uniform = uniform,
                       .unique_reduced = false};
}

}  // namespace

SystemPtr instance_Pi_cyclic(long long m, std::vector<long long> mult, int d) {
  if (static_cast<int>(mult.size()) != d)
    throw std::invalid_argument("need one multiplier per cloning slot");
  bool all_id = true;
  std::string tag;
  for (long long a : mult) {
    all_id = all_id && (((a % m) + m) % m == 1);
    if (!tag.empty()) tag += ",";
    tag += std::to_string(a);
  }
  // identity endomorphisms are never diverse (constant tuples lie in every
  // image); unit multipliers are automorphisms, so those are not diverse
  // either
  return std::make_shared<ProductInstance>(
      "Pi(Z" + std::to_string(m) + "," + tag + ")", cyclic_base(m, std::move(mult)), d, false,
      product_flags(/*uniform=*/all_id, /*diverse=*/false));
}

SystemPtr instance_Psi_cyclic(long long m, int d) {
  std::vector<long long> ones(static_cast<std::size_t>(d), 1);
  return std::make_shared<ProductInstance>("Psi(Z" + std::to_string(m) + "," + std::to_string(d) + ")",
                                           cyclic_base(m, std::move(ones)), d, true,
                                           product_flags(/*uniform=*/true, /*diverse=*/true));
}

SystemPtr instance_ZInf(int d) {
  return std::make_shared<ProductInstance>("ZInf(" + std::to_string(d) + ")", zinf_base(d), d,
                                           false,
                                           product_flags(/*uniform=*/false, /*diverse=*/true));
}

SystemPtr instance_Pi_table(const std::string& base, int d) {
  if (base == "S3")
    return std::make_shared<ProductInstance>("Pi(S3," + std::to_string(d) + ")",
                                             symmetric3_base(d), d, false,
                                             product_flags(/*uniform=*/true, /*diverse=*/false));
  throw std::invalid_argument("unknown table group: " + base);
}

}  // namespace tg
