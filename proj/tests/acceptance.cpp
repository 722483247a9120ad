// Acceptance gate for the toolkit: eight checks, one line of output each.
// Every check re-derives its expected values from first principles or from
// an independent oracle coded in test_util.hpp; budgets are wall-clock.
//
// Usage: acceptance <path-to-cli-binary>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orsolv/classifier.hpp"
#include "orsolv/golden.hpp"
#include "orsolv/hall.hpp"
#include "orsolv/magnus.hpp"
#include "orsolv/oracle.hpp"
#include "orsolv/presentation.hpp"
#include "orsolv/rng.hpp"
#include "orsolv/survey.hpp"
#include "orsolv/word.hpp"
#include "test_util.hpp"

using namespace orsolv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. Expanding [a,[a,b]] gives the exact eight-letter word with zero sums.
Outcome criterion_expansion() {
  Outcome out;
  ExprPtr e = make_commutator(make_symbol(0),
                              make_commutator(make_symbol(0), make_symbol(1)));
  auto t0 = std::chrono::steady_clock::now();
  Word w = expand(e);
  double ms = ms_since(t0);

  std::vector<Letter> expected{{0, -1}, {1, -1}, {0, -1}, {1, 1},
                               {0, 1},  {1, -1}, {0, 1},  {1, 1}};
  if (w.letters() != expected) out.fail("expansion differs from a^-1b^-1a^-1bab^-1ab");
  if (w.size() != 8) out.fail("expected 8 letters");
  if (exponent_sum(w, 0) != 0 || exponent_sum(w, 1) != 0) out.fail("nonzero exponent sum");
  if (ms >= 1.0) out.fail("took " + std::to_string(ms) + " ms, budget 1 ms");
  return out;
}

// 2. Rewriting that relator over subscripted b gives b_1^-1 b_2 b_1^-1 b_0,
//    extremes 0 and 2 each hit once, and substitution undoes the rewrite.
Outcome criterion_rewrite() {
  Outcome out;
  auto p = parse_presentation("a,b ; [a,[a,b]]");
  auto t0 = std::chrono::steady_clock::now();
  RewrittenRelator r = magnus_rewrite(p, 0);
  Word back = expand_rewritten(r);
  double ms = ms_since(t0);

  std::vector<SubscriptedLetter> expected{{1, 1, -1}, {1, 2, 1}, {1, 1, -1}, {1, 0, 1}};
  if (r.word0 != expected) out.fail("subscripted form is not b_1^-1 b_2 b_1^-1 b_0");
  auto it = r.extremes.find(1);
  if (it == r.extremes.end()) {
    out.fail("no extremes recorded for b");
  } else {
    const SubscriptExtremes& e = it->second;
    if (e.min_subscript != 0 || e.max_subscript != 2) out.fail("extremes are not 0 and 2");
    if (e.count_at_min != 1 || e.count_at_max != 1) out.fail("extreme letters not unique");
  }
  bool applicable = false;
  for (const MagnusVerdict& v : lemma_check(p)) {
    if (v.eliminated == 0 && v.witness == 1) applicable = v.applicable;
  }
  if (!applicable) out.fail("freeness verdict missing for eliminating a");
  if (back != p.relator_cyclic) out.fail("substitution does not restore the relator");
  if (ms >= 1.0) out.fail("took " + std::to_string(ms) + " ms, budget 1 ms");
  return out;
}

// 3. Substitution undoes rewriting on at least 1000 random relators.
Outcome criterion_roundtrip() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(12345);
  int relators = 0;
  long long failures = 0;
  while (relators < 1000) {
    int length = 2 + static_cast<int>(rng.below(15));  // 2..16
    Word w = sample_relator(length, 2, rng);
    bool eliminable = false;
    for (int t = 0; t < 2; ++t) {
      if (exponent_sum(w, t) != 0) continue;
      eliminable = true;
      auto p = make_presentation({"a", "b"}, w);
      if (expand_rewritten(magnus_rewrite(p, t)) != p.relator_cyclic) ++failures;
    }
    if (eliminable) ++relators;
  }
  double ms = ms_since(t0);
  if (failures != 0) out.fail(std::to_string(failures) + " round-trips differed");
  if (ms >= 5000.0) out.fail("took " + std::to_string(ms) + " ms, budget 5 s");
  return out;
}

// 4. The worked-example corpus classifies exactly as recorded.
Outcome criterion_corpus() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  for (const GoldenCase& c : golden_corpus()) {
    GoldenOutcome g = check_golden_case(c);
    if (!g.ok) out.fail(c.name + ": " + g.detail);
  }
  double ms = ms_since(t0);
  if (ms >= 1000.0) out.fail("took " + std::to_string(ms) + " ms, budget 1 s");
  return out;
}

// 5. Basic-commutator counts match the necklace oracle, and exhaustive
//    filtering of all small trees agrees.
Outcome criterion_basic_counts() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();

  std::vector<int> per_weight(6, 0);
  for (const BasicCommutator& b : enumerate_basic(2, 5)) ++per_weight[b.weight];
  const std::vector<int> expected{0, 2, 1, 2, 3, 6};
  if (per_weight != expected) out.fail("per-weight counts differ from (2,1,2,3,6)");
  for (int n = 1; n <= 5; ++n) {
    if (per_weight[n] != testutil::necklace_count(2, n)) {
      out.fail("weight " + std::to_string(n) + " differs from the necklace count");
    }
  }
  for (int w = 1; w <= 4; ++w) {
    int filtered = 0;
    for (const CommutatorTree& t : testutil::all_trees(w, 2)) {
      if (is_basic(t, 2)) ++filtered;
    }
    if (filtered != per_weight[w]) {
      out.fail("exhaustive filter disagrees at weight " + std::to_string(w));
    }
  }

  double ms = ms_since(t0);
  if (ms >= 2000.0) out.fail("took " + std::to_string(ms) + " ms, budget 2 s");
  return out;
}

// 6. Every short word with a nonzero exponent vector is separated over
//    <a,b;[a,b]>; the deep commutator word survives no catalog quotient.
Outcome criterion_separation() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  auto catalog = build_catalog(24);

  auto p = parse_presentation("a,b ; [a,b]");
  std::vector<Word> words;
  std::function<void(std::vector<Letter>&)> extend = [&](std::vector<Letter>& acc) {
    if (!acc.empty()) words.emplace_back(acc);
    if (acc.size() == 3) return;
    for (int g = 0; g < 2; ++g) {
      for (int s : {1, -1}) {
        Letter l{g, s};
        if (!acc.empty() && acc.back() == l.inverse()) continue;
        acc.push_back(l);
        extend(acc);
        acc.pop_back();
      }
    }
  };
  std::vector<Letter> acc;
  extend(acc);

  int checked = 0;
  for (const Word& w : words) {
    if (exponent_sum(w, 0) == 0 && exponent_sum(w, 1) == 0) continue;
    ++checked;
    if (!separate(p, w, catalog)) {
      out.fail("no witness for " + to_string(w, p.generators));
    }
  }
  if (checked != 52) out.fail("expected 52 short test words, saw " + std::to_string(checked));

  auto cex = make_presentation({"a", "b"}, counterexample_relator(0, 1));
  Word c = commutator(Word::generator(0), Word::generator(1));
  Word w = multiply(invert(c), conjugate(c, Word::generator(0)));
  if (separate(cex, w, catalog).has_value()) {
    out.fail("the deep commutator word was separated, but should survive nowhere");
  }

  double ms = ms_since(t0);
  if (ms >= 60000.0) out.fail("took " + std::to_string(ms) + " ms, budget 60 s");
  return out;
}

// 7. Status and certificate kinds are blind to renaming, inversion, rotation.
Outcome criterion_invariance() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();

  auto kinds_of = [](const Verdict& v) {
    std::vector<int> kinds;
    for (const Certificate& c : v.certificates) kinds.push_back(static_cast<int>(c.kind));
    std::sort(kinds.begin(), kinds.end());
    return kinds;
  };

  std::vector<std::pair<std::vector<std::string>, Word>> cases;
  for (const GoldenCase& c : golden_corpus()) {
    auto p = parse_presentation(c.text);
    cases.emplace_back(p.generators, p.relator_cyclic);
  }
  SplitMix64 rng(777);
  std::vector<std::string> names{"a", "b", "c"};
  while (cases.size() < golden_corpus().size() + 200) {
    int q = 2 + static_cast<int>(rng.below(2));
    Word w = sample_relator(2 + static_cast<int>(rng.below(11)), q, rng);
    cases.emplace_back(std::vector<std::string>(names.begin(), names.begin() + q), w);
  }

  for (const auto& [gens, w] : cases) {
    if (w.empty()) continue;
    int q = static_cast<int>(gens.size());
    Verdict base = classify(make_presentation(gens, w));
    auto baseline = kinds_of(base);

    auto perm = testutil::random_permutation(q, rng);
    Verdict renamed = classify(make_presentation(gens, testutil::rename_word(w, perm)));
    Verdict inverted = classify(make_presentation(gens, invert(w)));
    Verdict rot =
        classify(make_presentation(gens, rotated(w, 1 + rng.below(w.size()))));
    for (const Verdict* v : {&renamed, &inverted, &rot}) {
      if (v->status != base.status || kinds_of(*v) != baseline) {
        out.fail("variants of " + to_string(w, gens) + " classify differently");
      }
    }
  }

  double ms = ms_since(t0);
  if (ms >= 10000.0) out.fail("took " + std::to_string(ms) + " ms, budget 10 s");
  return out;
}

// 8. The survey table is byte-identical across runs of the shipped binary,
//    and its counts partition the sample.
Outcome criterion_survey(const std::string& cli) {
  Outcome out;
  const std::string cmd = cli + " survey --length 8 --count 1000 --seed 42 2>/dev/null";
  auto first = testutil::run_command(cmd);
  auto second = testutil::run_command(cmd);
  if (first.exit_code != 0 || second.exit_code != 0) {
    out.fail("survey run exited nonzero");
    return out;
  }
  if (first.output != second.output) out.fail("two runs differ byte for byte");
  if (first.output.find("survey: length=8 count=1000 seed=42") != 0) {
    out.fail("missing or misplaced header line");
  }

  std::istringstream is(first.output);
  std::string line;
  std::getline(is, line);  // header
  std::getline(is, line);  // column names
  long long sum = 0, total = -1;
  double fraction_sum = 0.0;
  while (std::getline(is, line)) {
    std::istringstream row(line);
    std::string name;
    long long count;
    double fraction;
    if (!(row >> name >> count >> fraction)) {
      out.fail("unparseable row: " + line);
      continue;
    }
    if (name == "total") {
      total = count;
    } else {
      sum += count;
      fraction_sum += fraction;
    }
  }
  if (total != 1000) out.fail("total row does not report 1000 samples");
  if (sum != 1000) out.fail("bucket counts sum to " + std::to_string(sum));
  if (std::fabs(fraction_sum - 1.0) > 1e-4) {
    out.fail("fractions sum to " + std::to_string(fraction_sum));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
    return 2;
  }
  const std::string cli = argv[1];

  struct Entry {
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria{
      {"nested commutator expands to the eight-letter word", criterion_expansion},
      {"subscript rewrite and its inverse substitution", criterion_rewrite},
      {"rewrite round-trip on 1000 random relators", criterion_roundtrip},
      {"worked-example corpus classifies exactly", criterion_corpus},
      {"basic commutator counts match the necklace oracle", criterion_basic_counts},
      {"short words separate; the deep commutator word does not", criterion_separation},
      {"classification is invariant under renaming, inversion, rotation",
       criterion_invariance},
      {"survey output is deterministic and partitions", [&] { return criterion_survey(cli); }},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out = criteria[i].run();
    double ms = ms_since(t0);
    if (out.ok) {
      std::printf("criterion %zu (%s): pass (%.1f ms)\n", i + 1, criteria[i].label, ms);
    } else {
      all_ok = false;
      std::printf("criterion %zu (%s): FAIL - %s\n", i + 1, criteria[i].label,
                  out.detail.c_str());
    }
  }
  return all_ok ? 0 : 1;
}
