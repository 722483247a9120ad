#include "orsolv/word.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "orsolv/errors.hpp"

namespace orsolv {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

std::string gen_name(const std::vector<std::string>& names, int gen) {
  if (gen >= 0 && gen < static_cast<int>(names.size())) return names[gen];
  return "g" + std::to_string(gen);
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    assert(l.sign == 1 || l.sign == -1);
    push_reduced(letters_, l);
  }
}

Word Word::generator(int gen, int sign) { return Word({Letter{gen, sign}}); }

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  out.reserve(u.size() + v.size());
  for (const Letter& l : v) push_reduced(out, l);
  return Word(std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word conjugate(const Word& g, const Word& h) {
  return multiply(multiply(invert(h), g), h);
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

Word power(const Word& u, long long n) {
  Word base = n < 0 ? invert(u) : u;
  if (n < 0) n = -n;
  // append letter by letter so repeated squares of the accumulator are not
  // copied; cancellation keeps the buffer reduced throughout
  std::vector<Letter> out;
  out.reserve(base.size());
  for (long long i = 0; i < n; ++i) {
    for (const Letter& l : base) push_reduced(out, l);
  }
  return Word(std::move(out));
}

CyclicReduction cyclically_reduce(const Word& u) {
  const auto& ls = u.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
    ++i;
    --j;
  }
  Word core(std::vector<Letter>(ls.begin() + i, ls.begin() + j));
  Word prefix(std::vector<Letter>(ls.begin(), ls.begin() + i));
  return {std::move(core), invert(prefix)};
}

long long exponent_sum(const Word& u, int gen) {
  long long sum = 0;
  for (const Letter& l : u)
    if (l.gen == gen) sum += l.sign;
  return sum;
}

bool is_positive(const Word& u) {
  if (u.empty()) return false;
  return std::all_of(u.begin(), u.end(), [](const Letter& l) { return l.sign == 1; });
}

std::vector<int> occurring_generators(const Word& u) {
  std::vector<int> out;
  for (const Letter& l : u) out.push_back(l.gen);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word rotated(const Word& u, std::size_t k) {
  if (u.empty()) return u;
  k %= u.size();
  std::vector<Letter> out(u.letters().begin() + k, u.letters().end());
  out.insert(out.end(), u.letters().begin(), u.letters().begin() + k);
  return Word(std::move(out));
}

Word canonical_cyclic(const Word& u) {
  Word core = cyclically_reduce(u).core;
  if (core.empty()) return core;
  Word best = core;
  for (const Word& w : {core, invert(core)})
    for (std::size_t k = 0; k < w.size(); ++k) {
      Word r = rotated(w, k);
      if (r < best) best = std::move(r);
    }
  return best;
}

std::string to_string(const Word& u, const std::vector<std::string>& names) {
  if (u.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  while (i < u.size()) {
    std::size_t j = i;
    while (j < u.size() && u[j] == u[i]) ++j;
    long long exp = static_cast<long long>(j - i) * u[i].sign;
    if (i > 0) out << ' ';
    out << gen_name(names, u[i].gen);
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

}  // namespace orsolv
