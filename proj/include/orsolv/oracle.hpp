#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orsolv/presentation.hpp"
#include "orsolv/word.hpp"

namespace orsolv {

/* Small solvable group given by its full multiplication table. Element 0 is
 * the identity. Built from explicit permutation generators and checked at
 * construction: associativity over every triple, inverses, and a derived
 * series that reaches the trivial subgroup. */
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<int> table;    // row-major: table[a * order + b] = a b
  std::vector<int> inverse;  // per element
  int identity = 0;
  int derived_length = 0;

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
};

/* Deterministic catalog: cyclic groups C2..C12, the Klein four-group,
 * dihedral groups D3..D6, S4, A4 and the nonabelian group of order 21,
 * filtered to order <= max_order. */
std::vector<FiniteGroup> build_catalog(int max_order = 24);

struct Hom {
  std::vector<int> images;  // one element per presentation generator
};

int eval_word(const FiniteGroup& g, const Word& w, const std::vector<int>& images);

/* Every generator-image tuple under which the relator evaluates to the
 * identity; each such tuple extends to a homomorphism of the whole group.
 * Tuples are ordered lexicographically with the first generator most
 * significant. */
std::vector<Hom> enumerate_homs(const OneRelatorPresentation& p, const FiniteGroup& g);

struct SeparationWitness {
  std::size_t catalog_index;
  Hom hom;
};

/* First homomorphism (catalog order, then tuple order) that kills the
 * relator but not w. A hit exhibits a solvable quotient where w survives;
 * exhaustion of the catalog proves nothing. */
std::optional<SeparationWitness> separate(const OneRelatorPresentation& p, const Word& w,
                                          const std::vector<FiniteGroup>& catalog);

/* The first derived quotient in closed form: one relation abelianizes to its
 * exponent vector, so the group abelianized is Z^(q-1) x Z/d when the gcd d
 * of the vector is nonzero, and Z^q when the vector vanishes. */
struct AbelianizationData {
  std::vector<long long> exponent_vector;
  long long divisor = 0;  // gcd of the entries, 0 when all vanish
  int free_rank = 0;
  std::string structure;
};

AbelianizationData abelianization(const OneRelatorPresentation& p);

// true iff w's exponent vector lies outside the integer span of the relator's
bool separate_in_abelianization(const OneRelatorPresentation& p, const Word& w);

}  // namespace orsolv
