#include <stdexcept>

#include "tg/instances.hpp"
#include "tg/product_instances.hpp"

namespace tg {

namespace {

std::vector<std::string> split_args(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_arity(const std::string& s) {
  const int d = std::stoi(s);
  if (d < 2) throw std::invalid_argument("arity must be at least 2");
  return d;
}

RingSpec parse_ring(const std::string& s) {
  if (s == "Q") return RingSpec::rationals();
  if (s.rfind("Z[1/", 0) == 0 && s.back() == ']')
    return RingSpec::z_inv_p(std::stoll(s.substr(4, s.size() - 5)));
  throw std::invalid_argument("unknown ring: " + s + " (use Q or Z[1/p])");
}

}  // namespace

namespace {

// Forwards everything to the wrapped instance; fixtures override one map.
class Wrapper : public CloningSystem {
 public:
  Wrapper(std::string name, SystemPtr inner)
      : CloningSystem(std::move(name), inner->arity(), inner->flags()), inner_(std::move(inner)) {}

  GroupElem identity(int n) const override { return inner_->identity(n); }
  GroupElem mul(int n, const GroupElem& g, const GroupElem& h) const override {
    return inner_->mul(n, g, h);
  }
  GroupElem inverse(int n, const GroupElem& g) const override { return inner_->inverse(n, g); }
  bool equal(int n, const GroupElem& g, const GroupElem& h) const override {
    return inner_->equal(n, g, h);
  }
  Perm rho(int n, const GroupElem& g) const override { return inner_->rho(n, g); }
  GroupElem clone_elem(int n, int k, const GroupElem& g) const override {
    return inner_->clone_elem(n, k, g);
  }
  std::optional<GroupElem> unclone_elem(int n, int k, const GroupElem& g) const override {
    return inner_->unclone_elem(n, k, g);
  }
  bool has_unclone() const override { return inner_->has_unclone(); }
  std::vector<GroupElem> small_generators(int n) const override {
    return inner_->small_generators(n);
  }
  GroupElem sample(int n, Rng& rng) const override { return inner_->sample(n, rng); }
  std::optional<std::uint64_t> order(int n) const override { return inner_->order(n); }
  std::vector<GroupElem> enumerate(int n) const override { return inner_->enumerate(n); }
  std::string format(int n, const GroupElem& g) const override { return inner_->format(n, g); }
  GroupElem parse_elem(int n, std::string_view text) const override {
    return inner_->parse_elem(n, text);
  }
  void validate(int n, const GroupElem& g) const override { inner_->validate(n, g); }
  std::string middle_grammar() const override { return inner_->middle_grammar(); }

 protected:
  SystemPtr inner_;
};

class CorruptClone final : public Wrapper {
 public:
  explicit CorruptClone(SystemPtr inner)
      : Wrapper(inner->name() + "+corrupt-clone", inner) {}
  GroupElem clone_elem(int n, int k, const GroupElem& g) const override {
    const auto gens = inner_->small_generators(n + arity() - 1);
    if (gens.empty()) throw std::logic_error("cannot corrupt a trivial family");
    return inner_->mul(n + arity() - 1, inner_->clone_elem(n, k, g), gens.front());
  }
};

class CorruptRho final : public Wrapper {
 public:
  CorruptRho(SystemPtr inner, int level)
      : Wrapper(inner->name() + "+corrupt-rho", inner), level_(level) {}
  Perm rho(int n, const GroupElem& g) const override {
    Perm p = inner_->rho(n, g);
    if (n == level_ && n >= 2) p = compose(p, Perm::transposition(n, 1, 2));
    return p;
  }

 private:
  int level_;
};

}  // namespace

SystemPtr corrupt_clone(SystemPtr inner) {
  return std::make_shared<CorruptClone>(std::move(inner));
}

SystemPtr corrupt_rho(SystemPtr inner, int level) {
  return std::make_shared<CorruptRho>(std::move(inner), level);
}

SystemPtr parse_instance(const std::string& selector) {
  const std::string text = strip(selector);
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw std::invalid_argument("instance selector must look like Name(args)");
  const std::string name = text.substr(0, open);
  std::vector<std::string> args = split_args(text.substr(open + 1, text.size() - open - 2));
  for (std::string& a : args) a = strip(a);

  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument(name + " expects " + std::to_string(n) + " argument(s)");
  };

  if (name == "F") {
    want(1);
    return instance_F(parse_arity(args[0]));
  }
  if (name == "V") {
    want(1);
    return instance_V(parse_arity(args[0]));
  }
  if (name == "Vhat") {
    want(1);
    return instance_Vhat(parse_arity(args[0]));
  }
  if (name == "bV") {
    want(1);
    return instance_bV(parse_arity(args[0]));
  }
  if (name == "bF") {
    want(1);
    return instance_bF(parse_arity(args[0]));
  }
  if (name == "B") {
    want(2);
    return instance_B(parse_ring(args[0]), parse_arity(args[1]));
  }
  if (name == "Bbar") {
    want(2);
    return instance_Bbar(parse_ring(args[0]), parse_arity(args[1]));
  }
  if (name == "Abels") {
    want(2);
    return instance_Abels(std::stoll(args[0]), parse_arity(args[1]));
  }
  if (name == "ZInf") {
    want(1);
    return instance_ZInf(parse_arity(args[0]));
  }
  if (name == "Psi") {
    want(2);
    if (args[0].rfind("Z", 0) != 0) throw std::invalid_argument("Psi expects a cyclic base, e.g. Z4");
    return instance_Psi_cyclic(std::stoll(args[0].substr(1)), parse_arity(args[1]));
  }
  if (name == "Pi") {
    if (args.size() < 2) throw std::invalid_argument("Pi expects a base and endomorphisms");
    if (args[0] == "S3") {
      want(2);
      return instance_Pi_table("S3", parse_arity(args[1]));
    }
    if (args[0].rfind("Z", 0) != 0)
      throw std::invalid_argument("Pi expects a cyclic base (Zm) or S3");
    const long long m = std::stoll(args[0].substr(1));
    // remaining arguments are unit multipliers, one per cloning slot
    std::vector<long long> mult;
    for (std::size_t i = 1; i < args.size(); ++i)
      mult.push_back(args[i] == "id" ? 1 : std::stoll(args[i]));
    return instance_Pi_cyclic(m, std::move(mult), static_cast<int>(mult.size()));
  }
  throw std::invalid_argument("unknown instance: " + name);
}

std::vector<std::string> list_instances() {
  return {
      "F(2)",        "V(2)",         "Vhat(2)",     "bV(2)",       "bF(2)",
      "B(Q,2)",      "Bbar(Q,2)",    "B(Z[1/2],2)", "Abels(2,2)",  "Pi(Z4,id,id)",
      "Pi(Z5,2,3)",  "Pi(S3,2)",     "Psi(Z4,2)",   "ZInf(2)",     "F(3)",
      "V(3)",        "Vhat(3)",      "bV(3)",       "bF(3)",       "B(Q,3)",
      "Abels(2,3)",
  };
}

}  // namespace tg
