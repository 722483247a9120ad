#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace orsolv {

/* One signed letter of a free-group word. `gen` indexes into the owning
 * presentation's generator list; `sign` is +1 or -1. */
struct Letter {
  int gen = 0;
  int sign = 1;

  constexpr Letter inverse() const { return {gen, -sign}; }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/* A freely reduced word; the empty word is the identity. The constructor
 * reduces its input, and every operation below preserves reducedness, so a
 * Word never holds an adjacent cancelling pair. Words are immutable values
 * and safe to share across threads. */
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(int gen, int sign = 1);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

Word invert(const Word& u);

// g^h = h^-1 g h
Word conjugate(const Word& g, const Word& h);

// [u,v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);

Word power(const Word& u, long long n);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // input == conjugate(core, conjugator)
};
CyclicReduction cyclically_reduce(const Word& u);

long long exponent_sum(const Word& u, int gen);

// nonempty and every sign is +1
bool is_positive(const Word& u);

// sorted, duplicate-free ids of generators occurring in u
std::vector<int> occurring_generators(const Word& u);

// left rotation by k; keeps a cyclically reduced word cyclically reduced
Word rotated(const Word& u, std::size_t k);

/* Least word, in letter order, among all rotations of the cyclic core of u
 * and of its inverse. Two words get the same canonical form exactly when
 * they agree up to conjugation and inversion. */
Word canonical_cyclic(const Word& u);

std::string to_string(const Word& u, const std::vector<std::string>& names);

}  // namespace orsolv
