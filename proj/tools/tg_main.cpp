// Command-line front end: element arithmetic in the instance grammars,
// axiom/property checks, and the conjugacy/commutation experiments.
//
// Exit codes: 0 success or property pass, 1 property fail (witness reported),
// 2 usage or parse error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tg/axiom_checks.hpp"
#include "tg/eval.hpp"
#include "tg/element.hpp"
#include "tg/icc_lab.hpp"
#include "tg/instances.hpp"
#include "tg/thompson_maps.hpp"

namespace {

using namespace tg;

// ---- output helpers ----------------------------------------------------------

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int finish_report(const PropertyReport& report, const std::string& out_path) {
  std::cout << report.to_text() << "\n";
  if (!out_path.empty()) write_file(out_path, report.to_json() + "\n");
  return report.passed() ? 0 : 1;
}

CheckMode parse_mode(const std::string& mode) {
  if (mode == "auto") return CheckMode::Auto;
  if (mode == "exhaustive") return CheckMode::Exhaustive;
  if (mode == "randomized") return CheckMode::Randomized;
  throw CLI::ValidationError("--mode must be auto, exhaustive, or randomized");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-ary cloning systems and their Thompson-like groups"};
  app.require_subcommand(1);

  // ---- instances ----
  auto* cmd_instances = app.add_subcommand("instances", "list shipped instance families");
  std::string describe;
  cmd_instances->add_option("--describe-instance", describe,
                            "print the flags and middle grammar of one instance");

  // ---- eval ----
  auto* cmd_eval = app.add_subcommand("eval", "evaluate an element expression");
  std::string eval_instance = "F(2)";
  std::string expr;
  cmd_eval->add_option("--instance,-i", eval_instance, "instance selector, e.g. V(2)");
  cmd_eval->add_option("expr", expr, "expression over the element grammar")->required();

  // ---- check ----
  auto* cmd_check = app.add_subcommand("check", "run an axiom or property check");
  std::string property, check_instance = "V(2)", check_mode = "auto", check_out;
  int check_level = 3, check_samples = 500;
  std::uint64_t check_seed = 1;
  cmd_check
      ->add_option("property", property,
                   "c1|c2|c3|fully-compatible|pure|slightly-pure|uniform|diverse|group-laws")
      ->required();
  cmd_check->add_option("--instance,-i", check_instance, "instance selector");
  cmd_check->add_option("--level,-n", check_level, "level n to check")->check(CLI::PositiveNumber);
  cmd_check->add_option("--mode", check_mode, "auto|exhaustive|randomized");
  cmd_check->add_option("--samples", check_samples, "sample count for randomized mode")
      ->check(CLI::PositiveNumber);
  cmd_check->add_option("--seed", check_seed, "seed for randomized mode");
  cmd_check->add_option("--out", check_out, "write the JSON report here");

  // ---- experiment ----
  auto* cmd_exp = app.add_subcommand("experiment", "run a desk-scale experiment");
  std::string exp_name, exp_instance = "F(2)", exp_out, exp_csv;
  int exp_radius = 3, exp_nmax = 16, exp_k = 1, exp_samples = 200, exp_depth = 3;
  std::uint64_t exp_seed = 1;
  cmd_exp
      ->add_option("name", exp_name,
                   "conj-growth|central-element|uniform-commutation|commutant-witness|"
                   "central-sequence")
      ->required();
  cmd_exp->add_option("--instance,-i", exp_instance, "instance selector");
  cmd_exp->add_option("--radius", exp_radius, "conjugator word length bound")
      ->check(CLI::Range(0, 4));
  cmd_exp->add_option("--nmax", exp_nmax, "largest sequence index")->check(CLI::PositiveNumber);
  cmd_exp->add_option("--k", exp_k, "conjugating power of x0");
  cmd_exp->add_option("--samples", exp_samples, "trial count")->check(CLI::PositiveNumber);
  cmd_exp->add_option("--depth", exp_depth, "right depth for commutant witnesses")
      ->check(CLI::PositiveNumber);
  cmd_exp->add_option("--seed", exp_seed, "seed for randomized trials");
  cmd_exp->add_option("--out", exp_out, "write the JSON report here");
  cmd_exp->add_option("--csv", exp_csv, "write growth curves here as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_instances) {
      if (!describe.empty()) {
        SystemPtr sys = parse_instance(describe);
        const InstanceFlags& f = sys->flags();
        std::cout << sys->name() << "\n  arity: " << sys->arity()
                  << "\n  fully compatible: " << (f.fully_compatible ? "yes" : "no")
                  << "\n  pure: " << (f.pure ? "yes" : "no")
                  << "\n  slightly pure: " << (f.slightly_pure ? "yes" : "no")
                  << "\n  diverse: " << (f.diverse ? "yes" : "no")
                  << "\n  uniform: " << (f.uniform ? "yes" : "no")
                  << "\n  middle grammar: " << sys->middle_grammar() << "\n";
      } else {
        for (const std::string& name : list_instances()) std::cout << name << "\n";
      }
      return 0;
    }

    if (*cmd_eval) {
      SystemPtr sys = parse_instance(eval_instance);
      std::cout << render(eval_expression(sys, expr)) << "\n";
      return 0;
    }

    if (*cmd_check) {
      SystemPtr sys = parse_instance(check_instance);
      CheckConfig cfg;
      cfg.mode = parse_mode(check_mode);
      cfg.seed = check_seed;
      cfg.samples = check_samples;
      PropertyReport report;
      if (property == "c1")
        report = check_c1(*sys, check_level, cfg);
      else if (property == "c2")
        report = check_c2(*sys, check_level, cfg);
      else if (property == "c3")
        report = check_c3(*sys, check_level, false, cfg);
      else if (property == "fully-compatible")
        report = check_c3(*sys, check_level, true, cfg);
      else if (property == "pure")
        report = check_pure(*sys, check_level, cfg);
      else if (property == "slightly-pure")
        report = check_slightly_pure(*sys, check_level, cfg);
      else if (property == "uniform")
        report = check_uniform(*sys, check_level, cfg);
      else if (property == "diverse")
        report = check_diverse(*sys, check_level, cfg);
      else if (property == "group-laws")
        report = check_group_laws(sys, check_samples, check_seed);
      else
        throw CLI::ValidationError("unknown property: " + property);
      return finish_report(report, check_out);
    }

    if (*cmd_exp) {
      SystemPtr sys = parse_instance(exp_instance);
      if (exp_name == "conj-growth") {
        const auto gens = default_probe_generators(sys);
        std::string csv = "# instance=" + sys->name() + " radius=" + std::to_string(exp_radius) +
                          " seed=" + std::to_string(exp_seed) + "\n";
        std::string text;
        nlohmann::json j;
        j["instance"] = sys->name();
        j["radius"] = exp_radius;
        j["seed"] = exp_seed;
        j["curves"] = nlohmann::json::array();
        bool all_increasing = true;
        for (const Element& probe : default_probes(sys)) {
          GrowthCurve c = conjugacy_growth(probe, gens, exp_radius);
          c.seed = exp_seed;
          for (std::size_t r = 1; r < c.counts.size(); ++r)
            all_increasing = all_increasing && c.counts[r] > c.counts[r - 1];
          csv += "# " + c.base + "\n" + growth_csv(c);
          nlohmann::json row;
          row["base"] = c.base;
          row["generators"] = c.generators;
          row["counts"] = c.counts;
          j["curves"].push_back(row);
          text += c.base + ":";
          for (std::size_t cnt : c.counts) text += " " + std::to_string(cnt);
          text += "\n";
        }
        std::cout << text << (all_increasing ? "strictly increasing" : "not strictly increasing")
                  << "\n";
        if (!exp_csv.empty()) write_file(exp_csv, csv);
        if (!exp_out.empty()) write_file(exp_out, j.dump(2) + "\n");
        return all_increasing ? 0 : 1;
      }
      if (exp_name == "central-element") {
        const auto z = sys->central_witness();
        if (!z) {
          std::cerr << "inapplicable: " << sys->name()
                    << " carries no non-trivial central witness\n";
          return 2;
        }
        return finish_report(verify_central_element(sys, *z, exp_samples, exp_seed), exp_out);
      }
      if (exp_name == "uniform-commutation") {
        Rng rng(exp_seed);
        const Tree vine = Tree::right_vine(sys->arity(), 2);
        const LeafAddress v(2, sys->arity() - 1);
        const GroupElem g = sys->sample(vine.leaf_count(), rng);
        return finish_report(
            verify_uniform_commutation(sys, vine, vine, g, v, exp_samples, exp_seed), exp_out);
      }
      if (exp_name == "commutant-witness") {
        const Tree caret = Tree::caret(sys->arity());
        std::vector<Element> E;
        for (const GroupElem& g : sys->small_generators(caret.leaf_count()))
          E.push_back(Element::make(sys, caret, g, caret));
        E.push_back(multiply(x0(sys), invert(x1(sys))));
        const auto [c1, c2] = finite_commutant_witness(E, exp_depth);
        std::cout << "witness 1: " << to_text(c1) << "\nwitness 2: " << to_text(c2) << "\n";
        if (!exp_out.empty()) {
          nlohmann::json j;
          j["witness1"] = to_text(c1);
          j["witness2"] = to_text(c2);
          write_file(exp_out, j.dump(2) + "\n");
        }
        return 0;
      }
      if (exp_name == "central-sequence") {
        const Tree caret = Tree::caret(sys->arity());
        std::vector<Element> E;
        for (const GroupElem& g : sys->small_generators(caret.leaf_count()))
          E.push_back(Element::make(sys, caret, g, caret));
        E.push_back(multiply(x0(sys), invert(x1(sys))));
        std::vector<CentralSequenceRow> table;
        const PropertyReport report = verify_central_sequence(E, exp_nmax, exp_k, &table);
        std::cout << "n nontrivial commutes-with-E conjugate-differs\n";
        for (const auto& row : table)
          std::cout << row.n << " " << (row.nontrivial ? "yes" : "NO") << " "
                    << (row.commutes_with_all ? "yes" : "no") << " "
                    << (row.conjugate_differs ? "yes" : "NO") << "\n";
        return finish_report(report, exp_out);
      }
      throw CLI::ValidationError("unknown experiment: " + exp_name);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
