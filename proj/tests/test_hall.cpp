#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "orsolv/hall.hpp"
#include "orsolv/presentation.hpp"
#include "test_util.hpp"

using namespace orsolv;

namespace {

const CommutatorTree X = CommutatorTree::leaf(0);
const CommutatorTree Y = CommutatorTree::leaf(1);

std::map<int, int> counts_per_weight(const std::vector<BasicCommutator>& basics) {
  std::map<int, int> counts;
  for (const BasicCommutator& b : basics) ++counts[b.weight];
  return counts;
}

}  // namespace

TEST_CASE("counts on two generators match the arithmetic oracle") {
  auto counts = counts_per_weight(enumerate_basic(2, 5));
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 2);
  CHECK(counts[4] == 3);
  CHECK(counts[5] == 6);
  for (int n = 1; n <= 5; ++n) {
    CHECK(counts[n] == testutil::necklace_count(2, n));
  }
}

TEST_CASE("counts agree with the oracle for more generators and weights") {
  for (int q = 2; q <= 3; ++q) {
    auto counts = counts_per_weight(enumerate_basic(q, 6));
    for (int n = 1; n <= 6; ++n) {
      CHECK(counts[n] == testutil::necklace_count(q, n));
    }
  }
}

TEST_CASE("one generator admits no bracket at all") {
  auto basics = enumerate_basic(1, 3);
  REQUIRE(basics.size() == 1);
  CHECK(basics[0].tree == X);
  CHECK(basics[0].weight == 1);
}

TEST_CASE("small enumerations are exactly right") {
  auto basics = enumerate_basic(2, 2);
  REQUIRE(basics.size() == 3);
  CHECK(basics[0].tree == X);
  CHECK(basics[1].tree == Y);
  CHECK(basics[2].tree == CommutatorTree::node(Y, X));
  CHECK(basics[2].weight == 2);
  CHECK(basics[2].rank == 3);
}

TEST_CASE("ranks are sequential and follow the comparison order") {
  auto basics = enumerate_basic(2, 5);
  for (std::size_t i = 0; i < basics.size(); ++i) {
    CHECK(basics[i].rank == static_cast<int>(i) + 1);
    CHECK(basic_rank(basics[i].tree, 2) == basics[i].rank);
    CHECK(is_basic(basics[i].tree, 2));
  }
  for (std::size_t i = 0; i + 1 < basics.size(); ++i) {
    CHECK(compare_basic(basics[i].tree, basics[i + 1].tree) < 0);
    CHECK(compare_basic(basics[i + 1].tree, basics[i].tree) > 0);
  }
  CHECK(compare_basic(basics[3].tree, basics[3].tree) == 0);
}

TEST_CASE("membership clauses") {
  CHECK(is_basic(CommutatorTree::node(Y, X), 2));
  CHECK(!is_basic(CommutatorTree::node(X, Y), 2));
  CHECK(is_basic(CommutatorTree::node(CommutatorTree::node(Y, X), X), 2));
  CHECK(is_basic(CommutatorTree::node(CommutatorTree::node(Y, X), Y), 2));
  // equal components violate left > right
  CHECK(!is_basic(
      CommutatorTree::node(CommutatorTree::node(Y, X), CommutatorTree::node(Y, X)), 2));
  // right below the left's own right component
  CHECK(!is_basic(
      CommutatorTree::node(CommutatorTree::node(CommutatorTree::node(Y, X), Y), X), 2));
  CHECK(!is_basic(CommutatorTree::leaf(4), 2));
  CHECK(basic_rank(CommutatorTree::node(X, Y), 2) == std::nullopt);
  CHECK(basic_rank(X, 2) == 1);
}

TEST_CASE("exhaustive filtering of all small trees agrees with enumeration") {
  auto expected = counts_per_weight(enumerate_basic(2, 4));
  for (int w = 1; w <= 4; ++w) {
    int passing = 0;
    for (const CommutatorTree& t : testutil::all_trees(w, 2)) {
      if (is_basic(t, 2)) ++passing;
    }
    CHECK(passing == expected[w]);
  }
}

TEST_CASE("trees expand to the words their brackets denote") {
  Word x = Word::generator(0);
  Word y = Word::generator(1);
  CHECK(X.word() == x);
  CHECK(CommutatorTree::node(Y, X).word() == commutator(y, x));
  CHECK(CommutatorTree::node(CommutatorTree::node(Y, X), X).word() ==
        commutator(commutator(y, x), x));
}

TEST_CASE("expression trees convert when they are pure brackets") {
  std::vector<std::string> names{"x", "y"};
  auto tree = to_commutator_tree(*parse_word_expr("[[y,x],x]", names));
  REQUIRE(tree.has_value());
  CHECK(*tree == CommutatorTree::node(CommutatorTree::node(Y, X), X));
  CHECK(to_string(*tree, names) == "[[y,x],x]");

  auto leaf = to_commutator_tree(*parse_word_expr("x", names));
  REQUIRE(leaf.has_value());
  CHECK(leaf->is_leaf());

  CHECK(!to_commutator_tree(*parse_word_expr("xy", names)).has_value());
  CHECK(!to_commutator_tree(*parse_word_expr("[x,y]^2", names)).has_value());
  CHECK(!to_commutator_tree(*parse_word_expr("x^-1", names)).has_value());
}

TEST_CASE("iterated bracket family recognition") {
  auto k_of = [](const char* text) {
    auto m = recognize_tower(parse_presentation(text));
    return m ? m->k : -1;
  };

  CHECK(k_of("x,y ; [x,y]") == 1);
  CHECK(k_of("x,y ; [[x,y],y]") == 2);
  CHECK(k_of("x,y ; [[[x,y],y],y]") == 3);
  CHECK(k_of("x,y ; [y,x]") == 1);
  CHECK(k_of("x,y ; [x,y]^2") == -1);
  CHECK(k_of("x,y ; xy") == -1);
  CHECK(k_of("x,y ; xyx^-1y") == -1);
  CHECK(k_of("a,b,c ; [a,b]") == -1);  // only two-generator presentations qualify

  // role assignment is reported: [x,y] prefers the declared order
  auto direct = recognize_tower(parse_presentation("x,y ; [[x,y],y]"));
  REQUIRE(direct.has_value());
  CHECK(direct->x == 0);
  CHECK(direct->y == 1);

  /* Inverting a commutator swaps its arguments, so [[x,y],x] is a cyclic
   * rotation of the inverse of [[y,x],x]: the depth-two bracket with the
   * generator roles exchanged. The recognizer accepts it on that basis. */
  auto swapped = recognize_tower(parse_presentation("x,y ; [[x,y],x]"));
  REQUIRE(swapped.has_value());
  CHECK(swapped->k == 2);
  CHECK(swapped->x == 1);
  CHECK(swapped->y == 0);
}

TEST_CASE("bracket family words have the predicted lengths") {
  // Formal letter count of [u,v] (no cancellation) doubles the arguments'
  // counts; the closed form for the repeated bracket is 3*2^k - 2.  The
  // word the library returns is freely reduced, so from k = 3 on it is
  // shorter; an independent concatenate-and-cancel pass predicts by how much.
  std::vector<std::string> names{"x", "y"};
  using Raw = std::vector<Letter>;
  auto raw_inverse = [](const Raw& u) {
    Raw out;
    for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->inverse());
    return out;
  };
  auto raw_reduce = [](const Raw& u) {
    Raw out;
    for (const Letter& l : u) {
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  };

  ExprPtr s = make_symbol(0);
  ExprPtr y = make_symbol(1);
  Raw raw_s{{0, 1}};
  const Raw raw_y{{1, 1}};
  long long formal = 1;
  for (int k = 1; k <= 6; ++k) {
    ExprPtr e = make_commutator(s, y);
    Raw raw_e = raw_inverse(raw_s);
    Raw yi = raw_inverse(raw_y);
    raw_e.insert(raw_e.end(), yi.begin(), yi.end());
    raw_e.insert(raw_e.end(), raw_s.begin(), raw_s.end());
    raw_e.insert(raw_e.end(), raw_y.begin(), raw_y.end());
    formal = 2 * (formal + 1);
    CHECK(static_cast<long long>(raw_e.size()) == formal);
    CHECK(formal == (2LL << k) + (1LL << k) - 2);

    Word w = expand(e);
    CHECK(w.letters() == raw_reduce(raw_e));

    auto m = recognize_tower(make_presentation(names, w));
    REQUIRE(m.has_value());
    CHECK(m->k == k);
    s = e;
    raw_s = std::move(raw_e);
  }
}

TEST_CASE("recognition is stable under rotation and inversion") {
  std::vector<std::string> names{"x", "y"};
  Word w = expand(parse_word_expr("[[x,y],y]", names));
  Word core = cyclically_reduce(w).core;
  SplitMix64 rng(11);
  for (int i = 0; i < 10; ++i) {
    Word variant = rotated(core, rng.below(core.size()));
    if (rng.below(2) == 1) variant = invert(variant);
    auto m = recognize_tower(make_presentation(names, variant));
    REQUIRE(m.has_value());
    CHECK(m->k == 2);
  }
}
