#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orsolv/presentation.hpp"
#include "orsolv/word.hpp"

namespace orsolv {

// left-normed bracket structure; a node (l, r) stands for the commutator [l, r]
class CommutatorTree {
 public:
  static CommutatorTree leaf(int gen);
  static CommutatorTree node(CommutatorTree left, CommutatorTree right);

  bool is_leaf() const { return left_ == nullptr; }
  int gen() const { return gen_; }
  const CommutatorTree& left() const { return *left_; }
  const CommutatorTree& right() const { return *right_; }
  int weight() const { return weight_; }  // number of leaves

  Word word() const;  // the group word the bracket denotes
  bool operator==(const CommutatorTree& other) const;

 private:
  int gen_ = 0;
  int weight_ = 1;
  std::shared_ptr<const CommutatorTree> left_;
  std::shared_ptr<const CommutatorTree> right_;
};

struct BasicCommutator {
  CommutatorTree tree;
  int weight;
  int rank;  // 1-based position in the global linear order
};

/* Total order on basic commutators: ascending weight, then same-weight trees
 * lexicographically by (left component, right component), leaves by generator.
 * Returns <0, 0, >0. Only meaningful when both trees are basic. */
int compare_basic(const CommutatorTree& a, const CommutatorTree& b);

/* All basic commutators on generators 0..num_gens-1 of weight up to
 * max_weight, in rank order. Weight-one entries are the generators. A node
 * [l, r] qualifies when l and r are basic, l > r, and, when l = [s, t],
 * additionally r >= t. */
std::vector<BasicCommutator> enumerate_basic(int num_gens, int max_weight);

// structural check of the same clauses; agrees with membership in enumerate_basic
bool is_basic(const CommutatorTree& t, int num_gens);

// rank within the global order, when basic
std::optional<int> basic_rank(const CommutatorTree& t, int num_gens);

// Symbol / Commutator expression nodes translate directly; anything else does not
std::optional<CommutatorTree> to_commutator_tree(const WordExpr& e);

/* Iterated bracket family s_1 = x, s_{k+1} = [s_k, y]. A two-generator
 * relator matching [s_k, y] for some assignment of roles, up to inversion and
 * cyclic rotation, is reported with the smallest such k. */
struct TowerMatch {
  int x;
  int y;
  int k;
};
std::optional<TowerMatch> recognize_tower(const OneRelatorPresentation& p);

std::string to_string(const CommutatorTree& t, const std::vector<std::string>& names);

}  // namespace orsolv
