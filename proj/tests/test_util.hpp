#pragma once

// Shared helpers for the test binaries: an independent arithmetic oracle for
// counting basic commutators, seeded random words, permutation helpers for
// the invariance suites, and a child-process runner for CLI-level checks.

#include <cstdio>
#include <numeric>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "orsolv/hall.hpp"
#include "orsolv/rng.hpp"
#include "orsolv/word.hpp"

namespace orsolv::testutil {

inline int mobius(long long n) {
  int prime_factors = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;  // square factor
    ++prime_factors;
  }
  if (n > 1) ++prime_factors;
  return prime_factors % 2 == 0 ? 1 : -1;
}

/* Number of basic commutators of weight n on q generators, as a pure
 * arithmetic necklace count: (1/n) * sum over d dividing n of
 * mobius(d) * q^(n/d). Shares no code with the enumeration it checks. */
inline long long necklace_count(long long q, long long n) {
  long long total = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long long power = 1;
    for (long long e = 0; e < n / d; ++e) power *= q;
    total += mobius(d) * power;
  }
  return total / n;
}

// uniform raw letters, freely reduced by the Word constructor; the result
// may be shorter than raw_letters and may be empty
inline Word random_word(int raw_letters, int num_gens, SplitMix64& rng) {
  std::vector<Letter> letters;
  letters.reserve(raw_letters);
  for (int i = 0; i < raw_letters; ++i) {
    int code = static_cast<int>(rng.below(2ull * num_gens));
    letters.push_back(Letter{code / 2, code % 2 == 0 ? 1 : -1});
  }
  return Word(std::move(letters));
}

inline Word random_positive_word(int length, int num_gens, SplitMix64& rng) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (int i = 0; i < length; ++i) {
    letters.push_back(Letter{static_cast<int>(rng.below(num_gens)), 1});
  }
  return Word(std::move(letters));
}

inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
  }
  return perm;
}

inline Word rename_word(const Word& w, const std::vector<int>& perm) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (const Letter& l : w) letters.push_back(Letter{perm[l.gen], l.sign});
  return Word(std::move(letters));
}

// every bracket tree of exactly the given weight on num_gens generators
inline std::vector<CommutatorTree> all_trees(int weight, int num_gens) {
  std::vector<CommutatorTree> out;
  if (weight == 1) {
    for (int g = 0; g < num_gens; ++g) out.push_back(CommutatorTree::leaf(g));
    return out;
  }
  for (int lw = 1; lw < weight; ++lw) {
    for (const CommutatorTree& l : all_trees(lw, num_gens)) {
      for (const CommutatorTree& r : all_trees(weight - lw, num_gens)) {
        out.push_back(CommutatorTree::node(l, r));
      }
    }
  }
  return out;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// runs through the shell, capturing stdout; exit_code -1 when the child
// did not terminate normally
inline CommandResult run_command(const std::string& cmd) {
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace orsolv::testutil
