#include "tg/pl_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace tg {

namespace {

Rat slope_between(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
  return (b.second - a.second) / (b.first - a.first);
}

}  // namespace

PLMap PLMap::canonical(std::vector<std::pair<Rat, Rat>> pts) {
  if (pts.size() < 2 || pts.front().first != Rat(0) || pts.back().first != Rat(1) ||
      pts.front().second != Rat(0) || pts.back().second != Rat(1))
    throw std::invalid_argument("map must fix 0 and 1");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i - 1].first < pts[i].first) || !(pts[i - 1].second < pts[i].second))
      throw std::invalid_argument("breakpoints must increase");
  std::vector<std::pair<Rat, Rat>> out;
  out.push_back(pts.front());
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (slope_between(out.back(), pts[i]) != slope_between(pts[i], pts[i + 1]))
      out.push_back(pts[i]);
  }
  out.push_back(pts.back());
  return PLMap(std::move(out));
}

PLMap PLMap::identity() { return canonical({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}); }

std::vector<std::pair<Rat, Rat>> leaf_intervals(const Tree& t) {
  std::vector<std::pair<Rat, Rat>> out;
  const int n = t.leaf_count();
  const int d = t.arity();
  for (int k = 1; k <= n; ++k) {
    Rat lo(0), width(1);
    for (int digit : t.leaf_address(k)) {
      width = width / Rat(d);
      lo = lo + Rat(digit) * width;
    }
    out.emplace_back(lo, lo + width);
  }
  return out;
}

PLMap PLMap::from_trees(const Tree& domain, const Tree& range) {
  if (domain.leaf_count() != range.leaf_count())
    throw std::invalid_argument("leaf counts disagree");
  const auto dom = leaf_intervals(domain);
  const auto ran = leaf_intervals(range);
  std::vector<std::pair<Rat, Rat>> pts;
  pts.emplace_back(Rat(0), Rat(0));
  for (std::size_t k = 0; k < dom.size(); ++k) pts.emplace_back(dom[k].second, ran[k].second);
  return canonical(std::move(pts));
}

Rat PLMap::operator()(const Rat& x) const {
  if (x < Rat(0) || x > Rat(1)) throw std::domain_error("argument outside [0,1]");
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    if (x <= pts_[i].first) {
      const Rat s = slope_between(pts_[i - 1], pts_[i]);
      return pts_[i - 1].second + s * (x - pts_[i - 1].first);
    }
  }
  return Rat(1);
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // breakpoints of f∘g: g's breakpoints plus g-preimages of f's
  std::vector<Rat> xs;
  for (const auto& p : g.points()) xs.push_back(p.first);
  // invert g at each breakpoint of f (g is an increasing bijection)
  for (const auto& p : f.points()) {
    const Rat y = p.first;
    const auto& gp = g.points();
    for (std::size_t i = 1; i < gp.size(); ++i) {
      if (gp[i - 1].second <= y && y <= gp[i].second) {
        const Rat s = slope_between(gp[i - 1], gp[i]);
        xs.push_back(gp[i - 1].first + (y - gp[i - 1].second) / s);
        break;
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<Rat, Rat>> pts;
  for (const Rat& x : xs) pts.emplace_back(x, f(g(x)));
  return PLMap::canonical(std::move(pts));
}

std::vector<std::pair<Rat, Rat>> PLMap::support() const {
  // fixed set first: on each linear piece the map agrees with the identity
  // nowhere, everywhere, or at one point
  std::vector<std::pair<Rat, Rat>> fixed;  // closed intervals (possibly points)
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    const auto& a = pts_[i - 1];
    const auto& b = pts_[i];
    const Rat s = slope_between(a, b);
    if (s == Rat(1)) {
      if (a.second == a.first) fixed.emplace_back(a.first, b.first);
      continue;
    }
    // f(x) = x at x0 = (a.y - s*a.x)/(1-s); keep it if it lands in the piece
    const Rat x0 = (a.second - s * a.first) / (Rat(1) - s);
    if (a.first <= x0 && x0 <= b.first) fixed.emplace_back(x0, x0);
  }
  // merge and complement within [0,1]
  std::sort(fixed.begin(), fixed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Rat, Rat>> merged;
  for (const auto& iv : fixed) {
    if (!merged.empty() && iv.first <= merged.back().second) {
      if (merged.back().second < iv.second) merged.back().second = iv.second;
    } else {
      merged.push_back(iv);
    }
  }
  std::vector<std::pair<Rat, Rat>> out;
  Rat cursor(0);
  for (const auto& iv : merged) {
    if (cursor < iv.first) out.emplace_back(cursor, iv.first);
    if (cursor < iv.second) cursor = iv.second;
  }
  if (cursor < Rat(1)) out.emplace_back(cursor, Rat(1));
  return out;
}

std::string PLMap::to_string() const {
  std::string out;
  for (const auto& p : pts_) {
    if (!out.empty()) out += ' ';
    out += "(" + p.first.to_string() + "," + p.second.to_string() + ")";
  }
  return out;
}

PLMap pl_map(const Element& x) {
  const int n = x.level();
  if (!x.sys()->rho(n, x.mid()).is_identity())
    throw std::invalid_argument("element does not act by an increasing map");
  return PLMap::from_trees(x.right(), x.left());
}

std::vector<std::pair<Rat, Rat>> pl_support(const Element& x) { return pl_map(x).support(); }

}  // namespace tg
