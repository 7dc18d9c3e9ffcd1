#include "lpgram/parse.hpp"

#include <cctype>
#include <string>

#include "lpgram/error.hpp"

namespace lpgram {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, pos_);
  }

  std::string_view ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    if (pos_ == start) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

TypeRef parse_expr(Cursor& cur);

TypeRef parse_atom(Cursor& cur) {
  if (cur.eat('(')) {
    TypeRef inner = parse_expr(cur);
    if (!cur.eat(')')) cur.fail("expected ')'");
    return inner;
  }
  return Type::prim(cur.ident());
}

TypeRef parse_term(Cursor& cur) {
  TypeRef left = parse_atom(cur);
  if (cur.eat('*')) return Type::prod(left, parse_term(cur));
  return left;
}

TypeRef parse_expr(Cursor& cur) {
  TypeRef acc = parse_term(cur);
  while (cur.eat('/')) acc = Type::div(acc, parse_term(cur));
  return acc;
}

}  // namespace

TypeRef parse_type(std::string_view text) {
  Cursor cur(text);
  TypeRef t = parse_expr(cur);
  if (!cur.eof()) cur.fail("trailing input after type");
  return t;
}

Sequent parse_sequent(std::string_view text) {
  Cursor cur(text);
  TypeMultiset antecedent;
  while (true) {
    antecedent.add(parse_expr(cur));
    if (cur.eat(',')) continue;
    break;
  }
  if (!cur.eat('-') || !cur.eat('>')) cur.fail("expected '->'");
  TypeRef succedent = parse_expr(cur);
  if (!cur.eof()) cur.fail("trailing input after sequent");
  return Sequent(std::move(antecedent), succedent);
}

}  // namespace lpgram
