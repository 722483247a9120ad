#include "orsolv/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "orsolv/errors.hpp"

namespace orsolv {

ExprPtr make_symbol(int gen) {
  return std::make_shared<const WordExpr>(WordExpr{WordExpr::Symbol{gen}});
}
ExprPtr make_power(ExprPtr base, long long exponent) {
  return std::make_shared<const WordExpr>(WordExpr{WordExpr::Power{std::move(base), exponent}});
}
ExprPtr make_conjugate(ExprPtr base, ExprPtr by) {
  return std::make_shared<const WordExpr>(WordExpr{WordExpr::Conjugate{std::move(base), std::move(by)}});
}
ExprPtr make_commutator(ExprPtr left, ExprPtr right) {
  return std::make_shared<const WordExpr>(WordExpr{WordExpr::Commutator{std::move(left), std::move(right)}});
}
ExprPtr make_inverse(ExprPtr base) {
  return std::make_shared<const WordExpr>(WordExpr{WordExpr::Inverse{std::move(base)}});
}
ExprPtr make_product(std::vector<ExprPtr> factors) {
  return std::make_shared<const WordExpr>(WordExpr{WordExpr::Product{std::move(factors)}});
}

namespace {

// guards against towers of powers blowing up the expansion
constexpr std::size_t kMaxExpandedLetters = std::size_t{1} << 20;

void check_budget(std::size_t n) {
  if (n > kMaxExpandedLetters) {
    throw Error("expanded relator exceeds the letter budget");
  }
}

struct Expander {
  Word run(const WordExpr& e) const {
    return std::visit([this](const auto& n) { return eval(n); }, e.node);
  }

  Word eval(const WordExpr::Symbol& n) const { return Word::generator(n.gen); }

  Word eval(const WordExpr::Power& n) const {
    Word base = run(*n.base);
    long long k = n.exponent;
    if (k != 0) {
      check_budget(base.size() * static_cast<unsigned long long>(k < 0 ? -k : k));
    }
    return power(base, k);
  }

  Word eval(const WordExpr::Conjugate& n) const {
    Word g = run(*n.base);
    Word h = run(*n.by);
    check_budget(g.size() + 2 * h.size());
    return conjugate(g, h);
  }

  Word eval(const WordExpr::Commutator& n) const {
    Word u = run(*n.left);
    Word v = run(*n.right);
    check_budget(2 * (u.size() + v.size()));
    return commutator(u, v);
  }

  Word eval(const WordExpr::Inverse& n) const { return invert(run(*n.base)); }

  Word eval(const WordExpr::Product& n) const {
    Word acc;
    for (const auto& f : n.factors) {
      acc = multiply(acc, run(*f));
      check_budget(acc.size());
    }
    return acc;
  }
};

}  // namespace

Word expand(const WordExpr& e) { return Expander{}.run(e); }

Word expand(const ExprPtr& e) {
  if (!e) return Word{};
  return expand(*e);
}

int OneRelatorPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return static_cast<int>(i);
  }
  return -1;
}

OneRelatorPresentation make_presentation(std::vector<std::string> generators,
                                         const Word& relator) {
  OneRelatorPresentation p;
  p.generators = std::move(generators);
  p.relator = relator;

  if (relator.empty()) {
    // canonical trivial expression so the expr slot is never null
    p.relator_expr = make_power(make_symbol(0), 0);
  } else {
    // run-compress the word back into a product of powers
    std::vector<ExprPtr> factors;
    std::size_t i = 0;
    const auto& ls = relator.letters();
    while (i < ls.size()) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) ++j;
      long long exp = static_cast<long long>(j - i) * ls[i].sign;
      ExprPtr sym = make_symbol(ls[i].gen);
      factors.push_back(exp == 1 ? sym : make_power(sym, exp));
      i = j;
    }
    p.relator_expr = factors.size() == 1 ? factors.front() : make_product(std::move(factors));
  }

  p.relator_cyclic = cyclically_reduce(p.relator).core;
  return p;
}

namespace {

bool needs_parens_in_product(const WordExpr& e) {
  return std::holds_alternative<WordExpr::Product>(e.node);
}

bool atomic_for_exponent(const WordExpr& e) {
  return std::holds_alternative<WordExpr::Symbol>(e.node) ||
         std::holds_alternative<WordExpr::Commutator>(e.node);
}

void print_expr(std::ostream& os, const WordExpr& e, const std::vector<std::string>& names);

void print_child(std::ostream& os, const WordExpr& e, const std::vector<std::string>& names,
                 bool parens) {
  if (parens) os << '(';
  print_expr(os, e, names);
  if (parens) os << ')';
}

std::string name_of(int gen, const std::vector<std::string>& names) {
  if (gen >= 0 && gen < static_cast<int>(names.size())) return names[gen];
  return "g" + std::to_string(gen);
}

void print_expr(std::ostream& os, const WordExpr& e, const std::vector<std::string>& names) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, WordExpr::Symbol>) {
          os << name_of(n.gen, names);
        } else if constexpr (std::is_same_v<T, WordExpr::Power>) {
          print_child(os, *n.base, names, !atomic_for_exponent(*n.base));
          os << '^' << n.exponent;
        } else if constexpr (std::is_same_v<T, WordExpr::Conjugate>) {
          print_child(os, *n.base, names, !atomic_for_exponent(*n.base));
          os << '^';
          print_child(os, *n.by, names, !std::holds_alternative<WordExpr::Symbol>(n.by->node));
        } else if constexpr (std::is_same_v<T, WordExpr::Commutator>) {
          os << '[';
          print_expr(os, *n.left, names);
          os << ',';
          print_expr(os, *n.right, names);
          os << ']';
        } else if constexpr (std::is_same_v<T, WordExpr::Inverse>) {
          print_child(os, *n.base, names, !atomic_for_exponent(*n.base));
          os << "^-1";
        } else {
          bool first = true;
          for (const auto& f : n.factors) {
            if (!first) os << ' ';
            first = false;
            print_child(os, *f, names, needs_parens_in_product(*f));
          }
          if (first) os << "1";
        }
      },
      e.node);
}

}  // namespace

std::string to_string(const WordExpr& e, const std::vector<std::string>& names) {
  std::ostringstream os;
  print_expr(os, e, names);
  return os.str();
}

std::string to_string(const OneRelatorPresentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ", ";
    os << p.generators[i];
  }
  os << " ; ";
  if (p.relator.empty() && p.relator_expr) {
    // keep the original spelling so the text still parses back
    os << to_string(*p.relator_expr, p.generators);
  } else {
    os << to_string(p.relator, p.generators);
  }
  os << " >";
  return os.str();
}

FreiheitssatzReport freiheitssatz_report(const OneRelatorPresentation& p) {
  if (p.relator_cyclic.empty()) {
    throw NotApplicableError("relator is trivial, the group is free on all generators");
  }
  FreiheitssatzReport r;
  r.occurring = occurring_generators(p.relator_cyclic);
  for (int g = 0; g < p.num_generators(); ++g) {
    if (!std::binary_search(r.occurring.begin(), r.occurring.end(), g)) {
      r.free_factors.push_back(g);
    }
  }
  return r;
}

std::string render(const FreiheitssatzReport& r, const OneRelatorPresentation& p) {
  std::ostringstream os;
  os << "relator involves:";
  for (int g : r.occurring) os << ' ' << name_of(g, p.generators);
  os << "\n";
  if (r.free_factors.empty()) {
    os << "no generator is a free factor; every proper subset of the occurring\n"
          "generators still generates a free subgroup\n";
  } else {
    os << "free factors:";
    for (int g : r.free_factors) os << ' ' << name_of(g, p.generators);
    os << "\nany subset omitting at least one occurring generator generates a free subgroup\n";
  }
  return os.str();
}

}  // namespace orsolv
