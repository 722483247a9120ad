#include "orsolv/hall.hpp"

#include <algorithm>
#include <sstream>

namespace orsolv {

CommutatorTree CommutatorTree::leaf(int gen) {
  CommutatorTree t;
  t.gen_ = gen;
  t.weight_ = 1;
  return t;
}

CommutatorTree CommutatorTree::node(CommutatorTree left, CommutatorTree right) {
  CommutatorTree t;
  t.gen_ = -1;
  t.weight_ = left.weight_ + right.weight_;
  t.left_ = std::make_shared<const CommutatorTree>(std::move(left));
  t.right_ = std::make_shared<const CommutatorTree>(std::move(right));
  return t;
}

Word CommutatorTree::word() const {
  if (is_leaf()) return Word::generator(gen_);
  return commutator(left_->word(), right_->word());
}

bool CommutatorTree::operator==(const CommutatorTree& other) const {
  if (is_leaf() != other.is_leaf()) return false;
  if (is_leaf()) return gen_ == other.gen_;
  return *left_ == *other.left_ && *right_ == *other.right_;
}

int compare_basic(const CommutatorTree& a, const CommutatorTree& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
  if (a.is_leaf()) return a.gen() == b.gen() ? 0 : (a.gen() < b.gen() ? -1 : 1);
  int c = compare_basic(a.left(), b.left());
  if (c != 0) return c;
  return compare_basic(a.right(), b.right());
}

std::vector<BasicCommutator> enumerate_basic(int num_gens, int max_weight) {
  struct Entry {
    CommutatorTree tree;
    int weight;
    int left_rank;   // 0-based index into the list; -1 for leaves
    int right_rank;
  };
  std::vector<Entry> entries;
  for (int g = 0; g < num_gens; ++g) {
    entries.push_back({CommutatorTree::leaf(g), 1, -1, -1});
  }

  for (int n = 2; n <= max_weight; ++n) {
    std::vector<std::pair<int, int>> fresh;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (entries[i].weight + entries[j].weight != n) continue;
        // when the left part is itself a bracket [s, t], require right >= t
        if (entries[i].left_rank >= 0 &&
            static_cast<int>(j) < entries[i].right_rank) {
          continue;
        }
        fresh.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (auto [i, j] : fresh) {
      entries.push_back({CommutatorTree::node(entries[i].tree, entries[j].tree),
                         n, i, j});
    }
  }

  std::vector<BasicCommutator> out;
  out.reserve(entries.size());
  for (std::size_t r = 0; r < entries.size(); ++r) {
    out.push_back({entries[r].tree, entries[r].weight, static_cast<int>(r) + 1});
  }
  return out;
}

bool is_basic(const CommutatorTree& t, int num_gens) {
  if (t.is_leaf()) return t.gen() >= 0 && t.gen() < num_gens;
  if (!is_basic(t.left(), num_gens) || !is_basic(t.right(), num_gens)) return false;
  if (compare_basic(t.left(), t.right()) <= 0) return false;
  if (!t.left().is_leaf() && compare_basic(t.right(), t.left().right()) < 0) return false;
  return true;
}

std::optional<int> basic_rank(const CommutatorTree& t, int num_gens) {
  if (!is_basic(t, num_gens)) return std::nullopt;
  for (const BasicCommutator& b : enumerate_basic(num_gens, t.weight())) {
    if (b.tree == t) return b.rank;
  }
  return std::nullopt;
}

std::optional<CommutatorTree> to_commutator_tree(const WordExpr& e) {
  if (const auto* s = std::get_if<WordExpr::Symbol>(&e.node)) {
    return CommutatorTree::leaf(s->gen);
  }
  if (const auto* c = std::get_if<WordExpr::Commutator>(&e.node)) {
    auto l = to_commutator_tree(*c->left);
    auto r = to_commutator_tree(*c->right);
    if (l && r) return CommutatorTree::node(std::move(*l), std::move(*r));
  }
  return std::nullopt;
}

std::optional<TowerMatch> recognize_tower(const OneRelatorPresentation& p) {
  if (p.num_generators() != 2) return std::nullopt;
  const Word target = canonical_cyclic(p.relator_cyclic);
  if (target.empty()) return std::nullopt;

  std::optional<TowerMatch> best;
  for (int x = 0; x < 2; ++x) {
    int y = 1 - x;
    Word s = Word::generator(x);
    Word ygen = Word::generator(y);
    for (int k = 1; k <= 64; ++k) {
      Word candidate = commutator(s, ygen);
      Word core = cyclically_reduce(candidate).core;
      if (core.size() > target.size()) break;
      if (canonical_cyclic(core) == target) {
        if (!best || k < best->k) best = TowerMatch{x, y, k};
        break;
      }
      s = candidate;
    }
  }
  return best;
}

std::string to_string(const CommutatorTree& t, const std::vector<std::string>& names) {
  if (t.is_leaf()) {
    if (t.gen() >= 0 && t.gen() < static_cast<int>(names.size())) return names[t.gen()];
    return "g" + std::to_string(t.gen());
  }
  std::ostringstream os;
  os << '[' << to_string(t.left(), names) << ',' << to_string(t.right(), names) << ']';
  return os.str();
}

}  // namespace orsolv
