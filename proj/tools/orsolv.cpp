#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orsolv/classifier.hpp"
#include "orsolv/errors.hpp"
#include "orsolv/golden.hpp"
#include "orsolv/hall.hpp"
#include "orsolv/magnus.hpp"
#include "orsolv/oracle.hpp"
#include "orsolv/presentation.hpp"
#include "orsolv/report.hpp"
#include "orsolv/survey.hpp"

namespace {

using namespace orsolv;

double elapsed_ms(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
      .count();
}

int cmd_analyze(const std::string& text, bool as_json) {
  OneRelatorPresentation p = parse_presentation(text);
  auto t0 = std::chrono::steady_clock::now();
  Verdict v = classify(p);
  double ms = elapsed_ms(t0);
  for (const Certificate& c : v.certificates) {
    if (!verify_certificate(p, c)) {
      throw Error("certificate " + to_string(c.kind) + " failed re-verification");
    }
  }
  AnalysisReport report = build_report(p, v, ms);
  if (as_json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
  return 0;
}

int cmd_rewrite(const std::string& text, const std::string& gen_name, bool as_json) {
  OneRelatorPresentation p = parse_presentation(text);
  int t = p.generator_index(gen_name);
  if (t < 0) throw UnknownGeneratorError(0, gen_name);
  RewrittenRelator r0 = magnus_rewrite(p, t);

  std::vector<MagnusVerdict> verdicts;
  for (const MagnusVerdict& v : lemma_check(p)) {
    if (v.eliminated == t) verdicts.push_back(v);
  }

  if (as_json) {
    nlohmann::json j;
    j["schema"] = "orsolv/1";
    j["eliminated"] = gen_name;
    j["r0"] = to_string(r0.word0, p.generators);
    nlohmann::json ext = nlohmann::json::object();
    for (const auto& [g, e] : r0.extremes) {
      ext[p.generators[g]] = {{"mu", e.min_subscript},
                              {"nu", e.max_subscript},
                              {"count_at_mu", e.count_at_min},
                              {"count_at_nu", e.count_at_max}};
    }
    j["extremes"] = std::move(ext);
    nlohmann::json vj = nlohmann::json::array();
    for (const MagnusVerdict& v : verdicts) {
      nlohmann::json one = {{"witness", p.generators[v.witness]},
                            {"mu", v.min_subscript},
                            {"nu", v.max_subscript},
                            {"span", v.span},
                            {"applicable", v.applicable}};
      if (v.claimed_rank) one["claimed_rank"] = *v.claimed_rank;
      vj.push_back(std::move(one));
    }
    j["verdicts"] = std::move(vj);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "eliminated: " << gen_name << "\n";
  std::cout << "r0: " << to_string(r0.word0, p.generators) << "\n";
  std::cout << "extremes:\n";
  for (const auto& [g, e] : r0.extremes) {
    std::cout << "  " << p.generators[g] << ": mu=" << e.min_subscript
              << " nu=" << e.max_subscript << " count_at_mu=" << e.count_at_min
              << " count_at_nu=" << e.count_at_max << "\n";
  }
  for (const MagnusVerdict& v : verdicts) {
    std::cout << "verdict: witness " << p.generators[v.witness] << ", mu=" << v.min_subscript
              << ", nu=" << v.max_subscript << ", span=" << v.span << ", "
              << (v.applicable ? "applicable (free-by-cyclic)" : "not applicable");
    if (v.applicable && v.claimed_rank) {
      std::cout << "; claimed free rank " << *v.claimed_rank
                << " (reported, not independently verified)";
    }
    std::cout << "\n";
  }
  return 0;
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> names;
  std::istringstream is(csv);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    if (piece.empty()) throw Error("empty generator name in --gens");
    for (const auto& seen : names) {
      if (seen == piece) throw Error("duplicate generator name '" + piece + "' in --gens");
    }
    names.push_back(piece);
  }
  if (names.empty()) throw Error("--gens needs at least one name");
  return names;
}

int cmd_basic(const std::string& gens_csv, int max_weight, const std::string& test_expr) {
  std::vector<std::string> names = split_names(gens_csv);
  const int q = static_cast<int>(names.size());

  if (!test_expr.empty()) {
    ExprPtr e = parse_word_expr(test_expr, names);
    std::optional<CommutatorTree> tree = to_commutator_tree(*e);
    if (!tree) {
      std::cout << "not a bracket expression (only generators and [.,.] nest)\n";
      return 0;
    }
    if (is_basic(*tree, q)) {
      std::cout << "basic: yes, weight " << tree->weight() << ", rank "
                << *basic_rank(*tree, q) << "\n";
    } else {
      std::cout << "basic: no\n";
    }
    return 0;
  }

  std::cout << "rank weight commutator\n";
  for (const BasicCommutator& b : enumerate_basic(q, max_weight)) {
    std::printf("%4d %6d %s\n", b.rank, b.weight, to_string(b.tree, names).c_str());
  }
  return 0;
}

int cmd_oracle(const std::string& text, const std::string& word_text, int max_order,
               bool catalog_only, bool as_json) {
  std::vector<FiniteGroup> catalog = build_catalog(max_order);

  if (catalog_only) {
    if (as_json) {
      nlohmann::json j = nlohmann::json::array();
      for (const FiniteGroup& g : catalog) {
        j.push_back({{"name", g.name}, {"order", g.order}, {"derived_length", g.derived_length}});
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "name order derived_length\n";
      for (const FiniteGroup& g : catalog) {
        std::printf("%-6s %5d %14d\n", g.name.c_str(), g.order, g.derived_length);
      }
    }
    return 0;
  }

  OneRelatorPresentation p = parse_presentation(text);
  Word w = expand(parse_word_expr(word_text, p.generators));

  auto t0 = std::chrono::steady_clock::now();
  Verdict v = classify(p);
  std::optional<SeparationWitness> sep = separate(p, w, catalog);
  double ms = elapsed_ms(t0);

  AnalysisReport report = build_report(p, v, ms);
  OracleSection o;
  o.word = to_string(w, p.generators);
  o.separated = sep.has_value();
  if (sep) {
    o.group = catalog[sep->catalog_index].name;
    o.images = sep->hom.images;
  }
  o.abelianization = abelianization(p).structure;
  report.oracle = std::move(o);

  if (as_json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
  return 0;
}

int cmd_examples() {
  bool all_ok = true;
  for (const GoldenCase& c : golden_corpus()) {
    GoldenOutcome outcome = check_golden_case(c);
    all_ok = all_ok && outcome.ok;
    std::cout << (outcome.ok ? "PASS " : "FAIL ") << c.name << ": " << outcome.detail << "\n";
  }
  if (!all_ok) {
    std::cerr << "golden corpus mismatch\n";
    return 2;
  }
  return 0;
}

int cmd_survey(int length, int count, std::uint64_t seed, int gens, bool positive_only) {
  SurveyConfig cfg;
  cfg.length = length;
  cfg.count = count;
  cfg.seed = seed;
  cfg.num_gens = gens;
  cfg.positive_only = positive_only;
  std::cout << render_survey(cfg, run_survey(cfg));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certification toolkit for residual solvability of one-relator groups"};
  app.require_subcommand(1);

  std::string text;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "classify a presentation and print certificates");
  analyze->add_flag("--json", as_json, "emit the report as JSON");
  analyze->add_option("presentation", text, "e.g. \"a,b ; [a,[a,b]]\"")->required();

  std::string eliminate;
  auto* rewrite = app.add_subcommand("rewrite", "rewrite the relator over subscripted generators");
  rewrite->add_option("--eliminate", eliminate, "generator to eliminate")->required();
  rewrite->add_flag("--json", as_json, "emit the rewrite as JSON");
  rewrite->add_option("presentation", text, "presentation text")->required();

  std::string gens_csv = "x,y";
  int max_weight = 5;
  std::string test_expr;
  auto* basic = app.add_subcommand("basic", "list or test basic commutators");
  basic->add_option("--gens", gens_csv, "comma-separated generator names");
  basic->add_option("--max-weight", max_weight, "largest weight to enumerate")
      ->check(CLI::Range(1, 16));
  basic->add_option("--test", test_expr, "bracket expression to test instead of listing");

  std::string word_text;
  int max_order = 24;
  bool catalog_only = false;
  auto* oracle = app.add_subcommand("oracle", "separate a word in a small solvable quotient");
  oracle->add_option("--word", word_text, "word to separate from the identity");
  oracle->add_option("--max-order", max_order, "catalog order bound")->check(CLI::Range(2, 24));
  oracle->add_flag("--catalog", catalog_only, "print the group catalog and exit");
  oracle->add_flag("--json", as_json, "emit the report as JSON");
  oracle->add_option("presentation", text, "presentation text");

  auto* examples = app.add_subcommand("examples", "run the built-in worked examples");

  int length = 8;
  int count = 1000;
  std::uint64_t seed = 0;
  int gens = 2;
  bool positive_only = false;
  auto* survey = app.add_subcommand("survey", "classify random relators and tabulate outcomes");
  survey->add_option("--length", length, "relator length")->required()->check(CLI::Range(1, 64));
  survey->add_option("--count", count, "number of samples")
      ->required()
      ->check(CLI::Range(1, 10000000));
  survey->add_option("--seed", seed, "PRNG seed")->required();
  survey->add_option("--gens", gens, "generator count")->check(CLI::Range(2, 26));
  survey->add_flag("--positive-only", positive_only, "sample positive relators only");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(analyze)) return cmd_analyze(text, as_json);
    if (app.got_subcommand(rewrite)) return cmd_rewrite(text, eliminate, as_json);
    if (app.got_subcommand(basic)) return cmd_basic(gens_csv, max_weight, test_expr);
    if (app.got_subcommand(oracle)) {
      if (!catalog_only && (text.empty() || word_text.empty())) {
        std::cerr << "oracle needs --word and a presentation, or --catalog\n";
        return 1;
      }
      return cmd_oracle(text, word_text, max_order, catalog_only, as_json);
    }
    if (app.got_subcommand(examples)) return cmd_examples();
    if (app.got_subcommand(survey)) return cmd_survey(length, count, seed, gens, positive_only);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NonZeroExponentSumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const EmptyRelatorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
