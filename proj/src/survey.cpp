#include "orsolv/survey.hpp"

#include <cstdio>
#include <sstream>

#include "orsolv/classifier.hpp"
#include "orsolv/errors.hpp"
#include "orsolv/presentation.hpp"

namespace orsolv {

namespace {

// signed letters in a fixed order: a, a^-1, b, b^-1, ...
Letter decode(std::uint64_t code) {
  return Letter{static_cast<int>(code / 2), code % 2 == 0 ? 1 : -1};
}

std::uint64_t encode(const Letter& l) {
  return static_cast<std::uint64_t>(l.gen) * 2 + (l.sign > 0 ? 0 : 1);
}

}  // namespace

Word sample_relator(int length, int num_gens, SplitMix64& rng, bool positive_only) {
  if (length < 1 || num_gens < 1) throw Error("sample_relator needs length >= 1, gens >= 1");
  const std::uint64_t q = static_cast<std::uint64_t>(num_gens);

  for (;;) {
    std::vector<Letter> letters;
    letters.reserve(length);
    if (positive_only) {
      for (int i = 0; i < length; ++i) {
        letters.push_back(Letter{static_cast<int>(rng.below(q)), 1});
      }
    } else {
      letters.push_back(decode(rng.below(2 * q)));
      for (int i = 1; i < length; ++i) {
        // uniform over the 2q-1 letters that do not cancel the previous one
        std::uint64_t skip = encode(letters.back().inverse());
        std::uint64_t m = rng.below(2 * q - 1);
        letters.push_back(decode(m < skip ? m : m + 1));
      }
    }
    if (length == 1 || letters.front() != letters.back().inverse()) {
      return Word(std::move(letters));
    }
  }
}

std::vector<std::string> survey_generator_names(int num_gens) {
  if (num_gens < 1 || num_gens > 26) throw Error("generator count must be between 1 and 26");
  std::vector<std::string> names;
  names.reserve(num_gens);
  for (int i = 0; i < num_gens; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

SurveyResult run_survey(const SurveyConfig& cfg) {
  SurveyResult result;
  for (int k = 0; k < 8; ++k) {
    result.buckets.emplace_back(to_string(static_cast<CertificateKind>(k)), 0);
  }
  result.buckets.emplace_back("KnownNotResiduallySolvable", 0);
  result.buckets.emplace_back("Unknown", 0);

  const std::vector<std::string> names = survey_generator_names(cfg.num_gens);
  SplitMix64 rng(cfg.seed);
  for (int i = 0; i < cfg.count; ++i) {
    Word relator = sample_relator(cfg.length, cfg.num_gens, rng, cfg.positive_only);
    Verdict v = classify(make_presentation(names, relator));
    std::size_t bucket;
    switch (v.status) {
      case Status::CertifiedResiduallySolvable:
        bucket = static_cast<std::size_t>(v.primary().kind);
        break;
      case Status::KnownNotResiduallySolvable:
        bucket = 8;
        break;
      default:
        bucket = 9;
        break;
    }
    ++result.buckets[bucket].second;
    ++result.total;
  }
  return result;
}

std::string render_survey(const SurveyConfig& cfg, const SurveyResult& result) {
  std::ostringstream os;
  os << "survey: length=" << cfg.length << " count=" << cfg.count << " seed=" << cfg.seed
     << " gens=" << cfg.num_gens << " positive-only=" << (cfg.positive_only ? "yes" : "no")
     << "\n";
  char line[96];
  std::snprintf(line, sizeof line, "%-28s %7s  %s\n", "bucket", "count", "fraction");
  os << line;
  for (const auto& [name, count] : result.buckets) {
    double fraction = result.total > 0 ? static_cast<double>(count) / result.total : 0.0;
    std::snprintf(line, sizeof line, "%-28s %7d  %.6f\n", name.c_str(), count, fraction);
    os << line;
  }
  std::snprintf(line, sizeof line, "%-28s %7d  %.6f\n", "total", result.total,
                result.total > 0 ? 1.0 : 0.0);
  os << line;
  return os.str();
}

}  // namespace orsolv
