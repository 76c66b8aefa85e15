#include "tg/prefix_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace tg {

namespace {

bool is_prefix(const LeafAddress& p, const LeafAddress& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

LeafAddress tail_after(const LeafAddress& p, const LeafAddress& w) {
  return LeafAddress(w.begin() + static_cast<long>(p.size()), w.end());
}

LeafAddress concat(const LeafAddress& a, const LeafAddress& b) {
  LeafAddress out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

PrefixMap::PrefixMap(int arity, std::vector<std::pair<LeafAddress, LeafAddress>> pairs)
    : arity_(arity), pairs_(std::move(pairs)) {
  canonicalize();
}

void PrefixMap::canonicalize() {
  auto by_domain = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(pairs_.begin(), pairs_.end(), by_domain);
  // merge sibling blocks u.0..u.(d-1) -> v.0..v.(d-1) into u -> v, repeatedly
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + static_cast<std::size_t>(arity_) <= pairs_.size(); ++i) {
      const auto& [u0, v0] = pairs_[i];
      if (u0.empty() || u0.back() != 0 || v0.empty() || v0.back() != 0) continue;
      LeafAddress u(u0.begin(), u0.end() - 1);
      LeafAddress v(v0.begin(), v0.end() - 1);
      bool block = true;
      for (int c = 0; c < arity_ && block; ++c) {
        const auto& [uc, vc] = pairs_[i + static_cast<std::size_t>(c)];
        block = uc == concat(u, {c}) && vc == concat(v, {c});
      }
      if (!block) continue;
      pairs_.erase(pairs_.begin() + static_cast<long>(i),
                   pairs_.begin() + static_cast<long>(i + static_cast<std::size_t>(arity_)));
      pairs_.insert(pairs_.begin() + static_cast<long>(i), {u, v});
      std::sort(pairs_.begin(), pairs_.end(), by_domain);
      changed = true;
      break;
    }
  }
}

PrefixMap PrefixMap::identity(int arity) {
  return PrefixMap(arity, {{LeafAddress{}, LeafAddress{}}});
}

PrefixMap PrefixMap::from_element(const Element& x) {
  const int n = x.level();
  const Perm sigma = x.sys()->rho(n, x.mid());
  std::vector<std::pair<LeafAddress, LeafAddress>> pairs;
  for (int k = 1; k <= n; ++k)
    pairs.emplace_back(x.right().leaf_address(k), x.left().leaf_address(sigma(k)));
  return PrefixMap(x.sys()->arity(), std::move(pairs));
}

PrefixMap compose(const PrefixMap& f, const PrefixMap& g) {
  if (f.arity() != g.arity()) throw std::invalid_argument("arity mismatch");
  const int d = f.arity();
  std::vector<std::pair<LeafAddress, LeafAddress>> work(g.pairs().begin(), g.pairs().end());
  std::vector<std::pair<LeafAddress, LeafAddress>> done;
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    bool matched = false;
    for (const auto& [p, q] : f.pairs()) {
      if (is_prefix(p, v)) {
        done.emplace_back(u, concat(q, tail_after(p, v)));
        matched = true;
        break;
      }
    }
    if (matched) continue;
    // v is a proper prefix of some f-domain entry: refine into children
    for (int c = d - 1; c >= 0; --c) work.emplace_back(concat(u, {c}), concat(v, {c}));
  }
  return PrefixMap(d, std::move(done));
}

std::string PrefixMap::to_string() const {
  std::string out;
  for (const auto& [u, v] : pairs_) {
    if (!out.empty()) out += ' ';
    out += format_address(u) + "->" + format_address(v);
  }
  return out;
}

}  // namespace tg
