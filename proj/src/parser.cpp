#include <cctype>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "orsolv/errors.hpp"
#include "orsolv/presentation.hpp"

namespace orsolv {

namespace {

enum class Tok {
  Ident,
  Int,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Sep,     // ';' or '|'
  LAngle,  // '<' or U+27E8
  RAngle,  // '>' or U+27E9
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;       // for Ident
  long long value = 0;    // for Int
};

constexpr std::string_view kLAngleUtf8 = "\xE2\x9F\xA8";
constexpr std::string_view kRAngleUtf8 = "\xE2\x9F\xA9";

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, start, {}, 0};

    if (text_.substr(pos_).starts_with(kLAngleUtf8)) {
      pos_ += kLAngleUtf8.size();
      return {Tok::LAngle, start, {}, 0};
    }
    if (text_.substr(pos_).starts_with(kRAngleUtf8)) {
      pos_ += kRAngleUtf8.size();
      return {Tok::RAngle, start, {}, 0};
    }

    char c = text_[pos_];
    switch (c) {
      case '^': ++pos_; return {Tok::Caret, start, {}, 0};
      case '(': ++pos_; return {Tok::LParen, start, {}, 0};
      case ')': ++pos_; return {Tok::RParen, start, {}, 0};
      case '[': ++pos_; return {Tok::LBracket, start, {}, 0};
      case ']': ++pos_; return {Tok::RBracket, start, {}, 0};
      case ',': ++pos_; return {Tok::Comma, start, {}, 0};
      case ';':
      case '|': ++pos_; return {Tok::Sep, start, {}, 0};
      case '<': ++pos_; return {Tok::LAngle, start, {}, 0};
      case '>': ++pos_; return {Tok::RAngle, start, {}, 0};
      default: break;
    }

    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t p = pos_;
      bool neg = c == '-';
      if (neg) ++p;
      std::size_t digits = 0;
      long long v = 0;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        if (++digits > 18) throw ParseError(start, "exponent has too many digits");
        v = v * 10 + (text_[p] - '0');
        ++p;
      }
      if (digits == 0) throw ParseError(start, "expected digits after '-'");
      pos_ = p;
      return {Tok::Int, start, {}, neg ? -v : v};
    }

    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t p = pos_ + 1;
      while (p < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[p])) ||
              std::isdigit(static_cast<unsigned char>(text_[p])))) {
        ++p;
      }
      Token t{Tok::Ident, start, std::string(text_.substr(pos_, p - pos_)), 0};
      pos_ = p;
      return t;
    }

    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* gens)
      : lexer_(text), generators_(gens) {
    advance();
  }

  OneRelatorPresentation presentation() {
    bool angled = accept(Tok::LAngle);
    owned_generators_ = generator_list();
    generators_ = &owned_generators_;  // before the separator so the first relator token splits too
    expect(Tok::Sep, "expected ';' or '|' after the generator list");
    ExprPtr rel = word();
    if (angled) accept(Tok::RAngle);  // closing bracket optional either way
    expect(Tok::End, "trailing input after the presentation");

    OneRelatorPresentation p;
    p.generators = std::move(owned_generators_);
    p.relator_expr = std::move(rel);
    p.relator = expand(p.relator_expr);
    p.relator_cyclic = cyclically_reduce(p.relator).core;
    return p;
  }

  ExprPtr bare_word() {
    ExprPtr w = word();
    expect(Tok::End, "trailing input after the word");
    return w;
  }

 private:
  Lexer lexer_;
  Token cur_;
  std::deque<Token> pending_;
  const std::vector<std::string>* generators_;
  std::vector<std::string> owned_generators_;

  void advance() {
    if (!pending_.empty()) {
      cur_ = pending_.front();
      pending_.pop_front();
    } else {
      cur_ = lexer_.next();
      maybe_split_ident();
    }
  }

  bool declared(std::string_view name) const {
    if (!generators_) return false;
    for (const auto& g : *generators_) {
      if (g == name) return true;
    }
    return false;
  }

  /* Juxtaposed generators need no spaces: with generators a and b the token
   * "abab" reads as a b a b. An identifier that is not itself a declared name
   * is cut into declared names, longest match first; a caret after it then
   * binds to the final piece, so ab^2 means a b^2. Unsplittable tokens stay
   * whole and fail later as unknown generators. */
  void maybe_split_ident() {
    if (cur_.kind != Tok::Ident || !generators_ || declared(cur_.text)) return;
    std::string_view s = cur_.text;
    std::vector<Token> parts;
    std::size_t off = 0;
    while (off < s.size()) {
      std::size_t best = 0;
      for (const auto& g : *generators_) {
        if (g.size() > best && s.substr(off).starts_with(g)) best = g.size();
      }
      if (best == 0) return;  // leave the token whole
      parts.push_back({Tok::Ident, cur_.pos + off, std::string(s.substr(off, best)), 0});
      off += best;
    }
    cur_ = parts.front();
    pending_.assign(parts.begin() + 1, parts.end());
  }

  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    advance();
    return true;
  }

  void expect(Tok k, const char* msg) {
    if (cur_.kind != k) throw ParseError(cur_.pos, msg);
    advance();
  }

  std::vector<std::string> generator_list() {
    std::vector<std::string> gens;
    for (;;) {
      if (cur_.kind != Tok::Ident) throw ParseError(cur_.pos, "expected a generator name");
      for (const auto& g : gens) {
        if (g == cur_.text) {
          throw ParseError(cur_.pos, "duplicate generator '" + cur_.text + "'");
        }
      }
      gens.push_back(cur_.text);
      advance();
      if (!accept(Tok::Comma)) break;
    }
    return gens;
  }

  int resolve(const Token& t) const {
    for (std::size_t i = 0; i < generators_->size(); ++i) {
      if ((*generators_)[i] == t.text) return static_cast<int>(i);
    }
    throw UnknownGeneratorError(t.pos, t.text);
  }

  bool at_atom_start() const {
    return cur_.kind == Tok::Ident || cur_.kind == Tok::LParen || cur_.kind == Tok::LBracket;
  }

  ExprPtr word() {
    std::vector<ExprPtr> factors;
    while (at_atom_start()) factors.push_back(term());
    if (factors.empty()) throw ParseError(cur_.pos, "expected a word");
    return factors.size() == 1 ? factors.front() : make_product(std::move(factors));
  }

  ExprPtr term() {
    ExprPtr base = atom();
    while (accept(Tok::Caret)) {
      if (cur_.kind == Tok::Int) {
        base = make_power(std::move(base), cur_.value);
        advance();
      } else if (at_atom_start()) {
        base = make_conjugate(std::move(base), atom());
      } else {
        throw ParseError(cur_.pos, "expected an exponent or a conjugating atom after '^'");
      }
    }
    return base;
  }

  ExprPtr atom() {
    if (cur_.kind == Tok::Ident) {
      int g = resolve(cur_);
      advance();
      return make_symbol(g);
    }
    if (accept(Tok::LParen)) {
      ExprPtr w = word();
      expect(Tok::RParen, "expected ')'");
      return w;
    }
    if (accept(Tok::LBracket)) {
      ExprPtr l = word();
      expect(Tok::Comma, "expected ',' inside the commutator");
      ExprPtr r = word();
      expect(Tok::RBracket, "expected ']'");
      return make_commutator(std::move(l), std::move(r));
    }
    throw ParseError(cur_.pos, "expected a generator, '(' or '['");
  }
};

}  // namespace

OneRelatorPresentation parse_presentation(std::string_view text) {
  return Parser(text, nullptr).presentation();
}

ExprPtr parse_word_expr(std::string_view text, const std::vector<std::string>& generators) {
  return Parser(text, &generators).bare_word();
}

}  // namespace orsolv
