#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orsolv/rng.hpp"
#include "orsolv/word.hpp"

namespace orsolv {

/* Uniform cyclically reduced word of exactly `length` letters: the first
 * letter is uniform over all 2q signed letters, each later letter is uniform
 * over the 2q-1 letters that do not cancel the previous one, and the whole
 * word is resampled until it is cyclically reduced. positive_only restricts
 * to the q positive letters (no resampling needed then). */
Word sample_relator(int length, int num_gens, SplitMix64& rng, bool positive_only = false);

struct SurveyConfig {
  int length = 8;
  int count = 1000;
  std::uint64_t seed = 0;
  int num_gens = 2;
  bool positive_only = false;
};

struct SurveyResult {
  // fixed bucket order: the eight certificate kinds, then the two terminal
  // statuses; counts index-aligned with bucket names
  std::vector<std::pair<std::string, int>> buckets;
  int total = 0;
};

SurveyResult run_survey(const SurveyConfig& cfg);

// byte-stable table; identical configs render identical strings
std::string render_survey(const SurveyConfig& cfg, const SurveyResult& result);

// single letter names a, b, c, ... for generated presentations
std::vector<std::string> survey_generator_names(int num_gens);

}  // namespace orsolv
