#include "tg/axiom_checks.hpp"

#include <functional>
#include <sstream>

#include "tg/element.hpp"
#include "tg/instances.hpp"

#include "json.hpp"

namespace tg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::InconclusivePass:
      return "inconclusive-pass";
  }
  return "?";
}

std::string PropertyReport::to_text() const {
  std::ostringstream out;
  out << property << " on " << instance;
  if (level > 0) out << " at n=" << level;
  out << " [" << mode;
  if (mode == "randomized") out << " seed=" << seed << " samples=" << samples;
  out << "]: " << to_string(verdict);
  if (!note.empty()) out << " (" << note << ")";
  for (const std::string& w : witnesses) out << "\n  witness: " << w;
  return out.str();
}

std::string PropertyReport::to_json() const {
  nlohmann::json j;
  j["property"] = property;
  j["instance"] = instance;
  j["n"] = level;
  j["mode"] = mode;
  if (mode == "randomized") {
    j["seed"] = seed;
    j["samples"] = samples;
  }
  j["verdict"] = to_string(verdict);
  j["witnesses"] = witnesses;
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

namespace {

// Decide exhaustive vs randomized: exhaustive when the level groups are small
// enough that the full pair iteration stays near a million.
bool pick_exhaustive(const CloningSystem& sys, int n, const CheckConfig& cfg, bool pairs) {
  if (cfg.mode == CheckMode::Exhaustive) return true;
  if (cfg.mode == CheckMode::Randomized) return false;
  const auto size = sys.order(n);
  if (!size) return false;
  const std::uint64_t budget = 1000000;
  if (!pairs) return *size <= budget;
  return *size <= budget / (*size ? *size : 1);
}

PropertyReport base_report(std::string property, const CloningSystem& sys, int n, bool exhaustive,
                           const CheckConfig& cfg) {
  PropertyReport r;
  r.property = std::move(property);
  r.instance = sys.name();
  r.level = n;
  r.mode = exhaustive ? "exhaustive" : "randomized";
  r.seed = cfg.seed;
  r.samples = exhaustive ? 0 : cfg.samples;
  return r;
}

// Drive a per-(g,h) predicate over either the full group or seeded samples.
PropertyReport run_pairs(std::string property, const CloningSystem& sys, int n,
                         const CheckConfig& cfg,
                         const std::function<std::optional<std::string>(
                             const GroupElem&, const GroupElem&)>& violation) {
  const bool exhaustive = pick_exhaustive(sys, n, cfg, true);
  PropertyReport r = base_report(std::move(property), sys, n, exhaustive, cfg);
  if (exhaustive) {
    const auto all = sys.enumerate(n);
    for (const GroupElem& g : all)
      for (const GroupElem& h : all)
        if (auto w = violation(g, h)) {
          r.verdict = Verdict::Fail;
          r.witnesses.push_back(*w);
          return r;
        }
  } else {
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
      const GroupElem g = sys.sample(n, rng);
      const GroupElem h = sys.sample(n, rng);
      if (auto w = violation(g, h)) {
        r.verdict = Verdict::Fail;
        r.witnesses.push_back(*w);
        return r;
      }
    }
  }
  return r;
}

PropertyReport run_singles(std::string property, const CloningSystem& sys, int n,
                           const CheckConfig& cfg,
                           const std::function<std::optional<std::string>(const GroupElem&)>&
                               violation,
                           bool inconclusive_on_pass = false) {
  const bool exhaustive = pick_exhaustive(sys, n, cfg, false);
  PropertyReport r = base_report(std::move(property), sys, n, exhaustive, cfg);
  if (exhaustive) {
    for (const GroupElem& g : sys.enumerate(n))
      if (auto w = violation(g)) {
        r.verdict = Verdict::Fail;
        r.witnesses.push_back(*w);
        return r;
      }
  } else {
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
      if (auto w = violation(sys.sample(n, rng))) {
        r.verdict = Verdict::Fail;
        r.witnesses.push_back(*w);
        return r;
      }
    }
    if (inconclusive_on_pass) r.verdict = Verdict::InconclusivePass;
  }
  return r;
}

}  // namespace

PropertyReport check_c1(const CloningSystem& sys, int n, const CheckConfig& cfg) {
  return run_pairs("C1 (cloning a product)", sys, n, cfg,
                   [&](const GroupElem& g, const GroupElem& h) -> std::optional<std::string> {
                     for (int k = 1; k <= n; ++k) {
                       const GroupElem lhs = sys.clone_elem(n, k, sys.mul(n, g, h));
                       const GroupElem rhs =
                           sys.mul(n + sys.arity() - 1, sys.clone_elem(n, sys.rho(n, h)(k), g),
                                   sys.clone_elem(n, k, h));
                       if (!sys.equal(n + sys.arity() - 1, lhs, rhs))
                         return "g=" + sys.format(n, g) + " h=" + sys.format(n, h) +
                                " k=" + std::to_string(k);
                     }
                     return std::nullopt;
                   });
}

PropertyReport check_c2(const CloningSystem& sys, int n, const CheckConfig& cfg) {
  const int d = sys.arity();
  return run_singles("C2 (product of clonings)", sys, n, cfg,
                     [&](const GroupElem& g) -> std::optional<std::string> {
                       for (int k = 1; k <= n; ++k)
                         for (int l = k + 1; l <= n; ++l) {
                           const GroupElem lhs =
                               sys.clone_elem(n + d - 1, k, sys.clone_elem(n, l, g));
                           const GroupElem rhs =
                               sys.clone_elem(n + d - 1, l + d - 1, sys.clone_elem(n, k, g));
                           if (!sys.equal(n + 2 * (d - 1), lhs, rhs))
                             return "g=" + sys.format(n, g) + " k=" + std::to_string(k) +
                                    " l=" + std::to_string(l);
                         }
                       return std::nullopt;
                     });
}

PropertyReport check_c3(const CloningSystem& sys, int n, bool full, const CheckConfig& cfg) {
  const int d = sys.arity();
  return run_singles(full ? "C3 (full compatibility)" : "C3 (compatibility)", sys, n, cfg,
                     [&](const GroupElem& g) -> std::optional<std::string> {
                       for (int k = 1; k <= n; ++k) {
                         const Perm lhs = sys.rho(n + d - 1, sys.clone_elem(n, k, g));
                         const Perm rhs = sigma_clone(d, k, sys.rho(n, g));
                         for (int i = 1; i <= n + d - 1; ++i) {
                           if (!full && i >= k && i <= k + d - 1) continue;
                           if (lhs(i) != rhs(i))
                             return "g=" + sys.format(n, g) + " k=" + std::to_string(k) +
                                    " i=" + std::to_string(i);
                         }
                       }
                       return std::nullopt;
                     });
}

PropertyReport check_pure(const CloningSystem& sys, int n, const CheckConfig& cfg) {
  return run_singles("pure", sys, n, cfg,
                     [&](const GroupElem& g) -> std::optional<std::string> {
                       if (!sys.rho(n, g).is_identity())
                         return "g=" + sys.format(n, g) + " rho=" + sys.rho(n, g).to_string();
                       return std::nullopt;
                     });
}

PropertyReport check_slightly_pure(const CloningSystem& sys, int n, const CheckConfig& cfg) {
  return run_singles("slightly-pure", sys, n, cfg,
                     [&](const GroupElem& g) -> std::optional<std::string> {
                       if (sys.rho(n, g)(n) != n)
                         return "g=" + sys.format(n, g) + " rho=" + sys.rho(n, g).to_string();
                       return std::nullopt;
                     });
}

PropertyReport check_uniform(const CloningSystem& sys, int n, const CheckConfig& cfg) {
  const int d = sys.arity();
  return run_singles("uniform", sys, n, cfg,
                     [&](const GroupElem& g) -> std::optional<std::string> {
                       for (int k = 1; k <= n; ++k) {
                         const GroupElem once = sys.clone_elem(n, k, g);
                         for (int l = k; l <= k + d - 1; ++l)
                           for (int l2 = l + 1; l2 <= k + d - 1; ++l2) {
                             const GroupElem a = sys.clone_elem(n + d - 1, l, once);
                             const GroupElem b = sys.clone_elem(n + d - 1, l2, once);
                             if (!sys.equal(n + 2 * (d - 1), a, b))
                               return "g=" + sys.format(n, g) + " k=" + std::to_string(k) +
                                      " l=" + std::to_string(l) + " l'=" + std::to_string(l2);
                           }
                       }
                       return std::nullopt;
                     });
}

PropertyReport check_diverse(const CloningSystem& sys, int n, const CheckConfig& cfg) {
  if (!sys.has_unclone())
    throw std::logic_error(sys.name() + ": diversity needs the unclone capability");
  const int d = sys.arity();
  const bool exhaustive = cfg.mode != CheckMode::Randomized &&
                          (cfg.mode == CheckMode::Exhaustive ||
                           (sys.order(n + d - 1) && *sys.order(n + d - 1) <= 1000000));
  PropertyReport r = base_report("diverse", sys, n, exhaustive, cfg);
  const auto in_every_image = [&](const GroupElem& big) {
    for (int k = 1; k <= n; ++k)
      if (!sys.unclone_elem(n, k, big)) return false;
    return true;
  };
  if (exhaustive) {
    for (const GroupElem& big : sys.enumerate(n + d - 1)) {
      if (!sys.is_identity_elem(n + d - 1, big) && in_every_image(big)) {
        r.verdict = Verdict::Fail;
        r.witnesses.push_back(sys.format(n + d - 1, big));
        return r;
      }
    }
    return r;
  }
  // randomized: plant samples inside the first image and probe the others
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    const GroupElem g = sys.sample(n, rng);
    const GroupElem big = sys.clone_elem(n, 1, g);
    if (!sys.is_identity_elem(n + d - 1, big) && in_every_image(big)) {
      r.verdict = Verdict::Fail;
      r.witnesses.push_back(sys.format(n + d - 1, big));
      return r;
    }
  }
  r.verdict = Verdict::InconclusivePass;
  r.note = "no witness found by sampling; diversity at this level is not settled";
  return r;
}

PropertyReport check_group_laws(const SystemPtr& sys, int triples, std::uint64_t seed) {
  PropertyReport r;
  r.property = "group-laws";
  r.instance = sys->name();
  r.level = 0;
  r.mode = "randomized";
  r.seed = seed;
  r.samples = triples;
  Rng rng(seed);
  const Element e = Element::identity(sys);
  for (int s = 0; s < triples; ++s) {
    const Element x = sample_element(sys, rng, rng.range(0, 3));
    const Element y = sample_element(sys, rng, rng.range(0, 3));
    const Element z = sample_element(sys, rng, rng.range(0, 3));
    const bool assoc = equals(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
    const bool ident = equals(multiply(x, e), x) && equals(multiply(e, x), x);
    const bool inver = is_identity(multiply(x, invert(x))) && is_identity(multiply(invert(x), x));
    if (!assoc || !ident || !inver) {
      r.verdict = Verdict::Fail;
      r.witnesses.push_back((!assoc ? "associativity: " : !ident ? "identity: " : "inverse: ") +
                            to_text(x) + " , " + to_text(y) + " , " + to_text(z));
      return r;
    }
  }
  return r;
}

}  // namespace tg
