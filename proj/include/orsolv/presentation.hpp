#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orsolv/word.hpp"

namespace orsolv {

struct WordExpr;
using ExprPtr = std::shared_ptr<const WordExpr>;

/* Relator syntax tree. Conjugate{g,h} denotes h^-1 g h, Commutator{u,v}
 * denotes u^-1 v^-1 u v, Power admits any integer exponent including 0. */
struct WordExpr {
  struct Symbol {
    int gen;
  };
  struct Power {
    ExprPtr base;
    long long exponent;
  };
  struct Conjugate {
    ExprPtr base;
    ExprPtr by;
  };
  struct Commutator {
    ExprPtr left;
    ExprPtr right;
  };
  struct Inverse {
    ExprPtr base;
  };
  struct Product {
    std::vector<ExprPtr> factors;
  };

  std::variant<Symbol, Power, Conjugate, Commutator, Inverse, Product> node;
};

ExprPtr make_symbol(int gen);
ExprPtr make_power(ExprPtr base, long long exponent);
ExprPtr make_conjugate(ExprPtr base, ExprPtr by);
ExprPtr make_commutator(ExprPtr left, ExprPtr right);
ExprPtr make_inverse(ExprPtr base);
ExprPtr make_product(std::vector<ExprPtr> factors);

// structural evaluation into a freely reduced word
Word expand(const WordExpr& e);
Word expand(const ExprPtr& e);

struct OneRelatorPresentation {
  std::vector<std::string> generators;  // names; a letter's gen indexes this list
  ExprPtr relator_expr;
  Word relator;         // expand(relator_expr)
  Word relator_cyclic;  // cyclically reduced core of relator

  int num_generators() const { return static_cast<int>(generators.size()); }
  int generator_index(std::string_view name) const;  // -1 when absent
};

/* Text forms accepted:
 *   presentation := [ "<" | U+27E8 ] gens ( ";" | "|" ) word [ ">" | U+27E9 ]
 *   gens         := ident { "," ident }
 *   word         := term { term }           (adjacency is product)
 *   term         := atom [ "^" ( int | atom ) ]   (int -> power, atom -> conjugate)
 *   atom         := ident | "(" word ")" | "[" word "," word "]"
 * A relator that reduces to the identity parses fine and yields an empty
 * relator word; downstream consumers treat that case explicitly. */
OneRelatorPresentation parse_presentation(std::string_view text);

// a single word over an already-declared generator list
ExprPtr parse_word_expr(std::string_view text, const std::vector<std::string>& generators);

// presentation over a plain relator word (relator_expr synthesised from the word)
OneRelatorPresentation make_presentation(std::vector<std::string> generators,
                                         const Word& relator);

std::string to_string(const WordExpr& e, const std::vector<std::string>& names);
std::string to_string(const OneRelatorPresentation& p);

/* Freiheitssatz facts for a presentation whose relator is nontrivial: the
 * generators that actually occur in the cyclic relator, and the remaining
 * ones, which are free factors. Every proper subset of `occurring` freely
 * generates a free subgroup. */
struct FreiheitssatzReport {
  std::vector<int> occurring;
  std::vector<int> free_factors;
};
FreiheitssatzReport freiheitssatz_report(const OneRelatorPresentation& p);
std::string render(const FreiheitssatzReport& r, const OneRelatorPresentation& p);

}  // namespace orsolv
