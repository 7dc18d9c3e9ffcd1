#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpgram/error.hpp"
#include "lpgram/parse.hpp"
#include "lpgram/type.hpp"

using namespace lpgram;

TEST_CASE("types are interned") {
  TypeRef a = Type::prim("p");
  TypeRef b = Type::prim("p");
  CHECK(a == b);
  CHECK(Type::div(a, b) == Type::div(b, a));
  CHECK(Type::prod(a, b) == Type::prod(a, b));
  CHECK(Type::div(a, b) != Type::prod(a, b));
  CHECK(Type::prim("q") != a);
}

TEST_CASE("length counts connectives") {
  CHECK(type_length(parse_type("p")) == 1);
  CHECK(type_length(parse_type("p/q")) == 3);
  CHECK(type_length(parse_type("(p*q)/r")) == 5);
  CHECK(type_length(parse_type("f/g1/q")) == 5);
}

TEST_CASE("depth of division towers") {
  CHECK(type_depth(parse_type("p")) == 0);
  CHECK(type_depth(parse_type("(p/q)/r")) == 1);
  CHECK(type_depth(parse_type("p/(q/r)")) == 2);
  CHECK_THROWS_AS(type_depth(parse_type("p*q")), std::invalid_argument);
}

TEST_CASE("parsing is left associative with tight products") {
  TypeRef t = parse_type("f/g1/q");
  CHECK(t == Type::div(Type::div(Type::prim("f"), Type::prim("g1")),
                       Type::prim("q")));
  TypeRef u = parse_type("(p*g1)/g2/q");
  CHECK(u ==
        Type::div(Type::div(Type::prod(Type::prim("p"), Type::prim("g1")),
                            Type::prim("g2")),
                  Type::prim("q")));
  CHECK(parse_type("p*q/r") ==
        Type::div(Type::prod(Type::prim("p"), Type::prim("q")),
                  Type::prim("r")));
  CHECK(parse_type("p*q*r") ==
        Type::prod(Type::prim("p"),
                   Type::prod(Type::prim("q"), Type::prim("r"))));
}

TEST_CASE("printing round-trips and drops redundant parentheses") {
  const char* cases[] = {
      "p",
      "p/q",
      "p/(q/r)",
      "p/q/r",
      "p*q",
      "p*q*r",
      "(p*q)*r",
      "(p*g1)/g2/q",
      "f/(f/r)/(f/p)/q",
      "f/(f/p/g1)/g2/q",
      "p/(q*r)",
      "(p/q)*r",
  };
  for (const char* text : cases) {
    TypeRef t = parse_type(text);
    CHECK(t->text() == text);
    CHECK(parse_type(t->text()) == t);
  }
  CHECK(parse_type("(p)")->text() == "p");
  CHECK(parse_type("((f/(f/p/g1))/g2)/q")->text() == "f/(f/p/g1)/g2/q");
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const char* text) {
    try {
      parse_type(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("p/") == 2);
  CHECK(offset_of("p q") == 2);
  CHECK(offset_of("(p") == 2);
  CHECK(offset_of("p/*q") == 2);
  CHECK_THROWS_AS(parse_type("p//q"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p -> "), ParseError);
  CHECK_THROWS_AS(parse_sequent("-> p"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p p -> q"), ParseError);
}

TEST_CASE("identifier names") {
  CHECK(is_identifier("p"));
  CHECK(is_identifier("g12"));
  CHECK(is_identifier("state_3"));
  CHECK(is_identifier("2p"));  // leading digits lex fine, so they are allowed
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("a-b"));
  CHECK_FALSE(is_identifier("a b"));
}

TEST_CASE("ordering is graded by length then text") {
  std::vector<TypeRef> types = {
      parse_type("q"), parse_type("p"), parse_type("p/q"),
      parse_type("p*q"), parse_type("(p/q)/r"),
  };
  std::set<TypeRef, TypeBefore> sorted(types.begin(), types.end());
  std::vector<std::string> texts;
  for (TypeRef t : sorted) texts.push_back(t->text());
  CHECK(texts == std::vector<std::string>{"p", "q", "p*q", "p/q", "p/q/r"});
}

TEST_CASE("balance pairs cancel across a division") {
  TypeRef t = parse_type("p/q");
  // p positively, q negatively
  REQUIRE(t->balance().size() == 2);
  int p_sign = 0, q_sign = 0;
  for (auto [prim, sign] : t->balance()) {
    if (prim == Type::prim("p")) p_sign = sign;
    if (prim == Type::prim("q")) q_sign = sign;
  }
  CHECK(p_sign == 1);
  CHECK(q_sign == -1);
}
