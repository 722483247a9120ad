#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orsolv/presentation.hpp"
#include "orsolv/word.hpp"

namespace orsolv {

/* Letter x_i of the rewritten relator: x conjugated by the i-th power of the
 * eliminated generator t, so x_i = t^-i x t^i. */
struct SubscriptedLetter {
  int base;
  long long subscript;
  int sign;

  SubscriptedLetter inverse() const { return {base, subscript, -sign}; }
  bool operator==(const SubscriptedLetter&) const = default;
  auto operator<=>(const SubscriptedLetter&) const = default;
};

struct SubscriptExtremes {
  long long min_subscript = 0;
  long long max_subscript = 0;
  int count_at_min = 0;
  int count_at_max = 0;
};

struct RewrittenRelator {
  int eliminated;                          // generator removed by rewriting
  std::vector<SubscriptedLetter> word0;    // image of the cyclic relator
  std::map<int, SubscriptExtremes> extremes;  // per surviving base generator
};

/* Rewrites w in terms of subscripted survivors, assuming the exponent sum of
 * `eliminated` in w is zero. A letter read at cumulative t-level k comes out
 * with subscript -k. */
std::vector<SubscriptedLetter> rewrite_word(const Word& w, int eliminated);

/* Applies rewrite_word to the cyclic relator and collects subscript extremes.
 * Throws EmptyRelatorError when the relator is trivial and
 * NonZeroExponentSumError when the eliminated generator has nonzero sum. */
RewrittenRelator magnus_rewrite(const OneRelatorPresentation& p, int eliminated);

// substitutes x_i = t^-i x t^i back; inverse of rewrite_word up to free reduction
Word expand_rewritten(const RewrittenRelator& r0);

// adds `offset` to every subscript; conjugation by t^offset on the original side
std::vector<SubscriptedLetter> shift_relator(const std::vector<SubscriptedLetter>& w,
                                             long long offset);

/* One candidate breakdown: eliminate t, look at witness generator x. The
 * presentation splits as free-by-cyclic when some witness has mu < nu and the
 * letters at both extreme subscripts each occur exactly once. */
struct MagnusVerdict {
  bool applicable = false;
  int eliminated = -1;
  int witness = -1;
  long long min_subscript = 0;
  long long max_subscript = 0;
  long long span = 0;  // max - min + 1, number of subscript slots touched
  std::optional<long long> claimed_rank;  // only stated for two-generator input
};

/* Every (eliminable t, witness x) pair in order: t ascending, then x
 * ascending. Generators with nonzero exponent sum are skipped as t. */
std::vector<MagnusVerdict> lemma_check(const OneRelatorPresentation& p);

std::string to_string(const std::vector<SubscriptedLetter>& w,
                      const std::vector<std::string>& names);

}  // namespace orsolv
