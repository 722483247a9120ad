#include "orsolv/magnus.hpp"

#include <sstream>

#include "orsolv/errors.hpp"

namespace orsolv {

std::vector<SubscriptedLetter> rewrite_word(const Word& w, int eliminated) {
  std::vector<SubscriptedLetter> out;
  long long level = 0;
  for (const Letter& l : w) {
    if (l.gen == eliminated) {
      level += l.sign;
      continue;
    }
    SubscriptedLetter s{l.gen, -level, l.sign};
    if (!out.empty() && out.back() == s.inverse()) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

RewrittenRelator magnus_rewrite(const OneRelatorPresentation& p, int eliminated) {
  const Word& r = p.relator_cyclic;
  if (r.empty()) throw EmptyRelatorError();
  if (eliminated < 0 || eliminated >= p.num_generators()) {
    throw Error("eliminated generator index out of range");
  }
  long long sum = exponent_sum(r, eliminated);
  if (sum != 0) throw NonZeroExponentSumError(p.generators[eliminated], sum);

  RewrittenRelator out;
  out.eliminated = eliminated;
  out.word0 = rewrite_word(r, eliminated);
  for (const SubscriptedLetter& s : out.word0) {
    auto [it, fresh] = out.extremes.try_emplace(s.base, SubscriptExtremes{s.subscript, s.subscript, 0, 0});
    SubscriptExtremes& e = it->second;
    if (s.subscript < e.min_subscript) {
      e.min_subscript = s.subscript;
      e.count_at_min = 0;
    }
    if (s.subscript > e.max_subscript) {
      e.max_subscript = s.subscript;
      e.count_at_max = 0;
    }
    if (s.subscript == e.min_subscript) ++e.count_at_min;
    if (s.subscript == e.max_subscript) ++e.count_at_max;
  }
  return out;
}

Word expand_rewritten(const RewrittenRelator& r0) {
  std::vector<Letter> letters;
  const int t = r0.eliminated;
  auto push_t_power = [&](long long k) {
    int sign = k < 0 ? -1 : 1;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) letters.push_back({t, sign});
  };
  for (const SubscriptedLetter& s : r0.word0) {
    push_t_power(-s.subscript);
    letters.push_back({s.base, s.sign});
    push_t_power(s.subscript);
  }
  return Word(std::move(letters));
}

std::vector<SubscriptedLetter> shift_relator(const std::vector<SubscriptedLetter>& w,
                                             long long offset) {
  std::vector<SubscriptedLetter> out = w;
  for (auto& s : out) s.subscript += offset;
  return out;
}

std::vector<MagnusVerdict> lemma_check(const OneRelatorPresentation& p) {
  const Word& r = p.relator_cyclic;
  if (r.empty()) throw EmptyRelatorError();

  std::vector<MagnusVerdict> verdicts;
  for (int t = 0; t < p.num_generators(); ++t) {
    if (exponent_sum(r, t) != 0) continue;
    RewrittenRelator r0 = magnus_rewrite(p, t);
    for (const auto& [x, e] : r0.extremes) {
      MagnusVerdict v;
      v.eliminated = t;
      v.witness = x;
      v.min_subscript = e.min_subscript;
      v.max_subscript = e.max_subscript;
      v.span = e.max_subscript - e.min_subscript + 1;
      v.applicable = e.min_subscript < e.max_subscript && e.count_at_min == 1 && e.count_at_max == 1;
      if (p.num_generators() == 2) v.claimed_rank = v.span;
      verdicts.push_back(v);
    }
  }
  return verdicts;
}

std::string to_string(const std::vector<SubscriptedLetter>& w,
                      const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i) os << ' ';
    if (w[i].base >= 0 && w[i].base < static_cast<int>(names.size())) {
      os << names[w[i].base];
    } else {
      os << 'g' << w[i].base;
    }
    os << '_' << w[i].subscript;
    long long exp = static_cast<long long>(j - i) * w[i].sign;
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

}  // namespace orsolv
