#pragma once

// Small systems and grammars shipped with the repository.  They are defined
// here in code, independently of the serialized copies under data/, so the
// test suite can check the two against each other.

#include <string>
#include <utility>
#include <vector>

#include "lpgram/bvassam.hpp"
#include "lpgram/grammar.hpp"
#include "lpgram/parse.hpp"

namespace fixtures {

using lpgram::BvassamSystem;
using lpgram::LBvassam;
using lpgram::LpGrammar;

// One axiom s(1), no rules.  Language {(1)}.
inline LBvassam s1() {
  BvassamSystem sys;
  sys.states = {"s"};
  sys.visible_dim = 1;
  sys.full_dim = 1;
  sys.axioms = {{0, {1}}};
  sys.accepting = 0;
  LBvassam g{std::move(sys), 1};
  lpgram::validate(g);
  return g;
}

// Axiom s(1,0) and a unary rule trading the first coordinate for the
// second.  Language {(1,0), (0,1)}.
inline LBvassam s2() {
  BvassamSystem sys;
  sys.states = {"s"};
  sys.visible_dim = 2;
  sys.full_dim = 2;
  sys.axioms = {{0, {1, 0}}};
  sys.unary = {{0, 0, {1, 0}, {0, 1}}};
  sys.accepting = 0;
  LBvassam g{std::move(sys), 2};
  lpgram::validate(g);
  return g;
}

// Axiom q(1) and a binary rule s <- q, q.  Language {(2)}.
inline LBvassam s3() {
  BvassamSystem sys;
  sys.states = {"s", "q"};
  sys.visible_dim = 1;
  sys.full_dim = 1;
  sys.axioms = {{1, {1}}};
  sys.binary = {{0, 1, 1}};
  sys.accepting = 0;
  LBvassam g{std::move(sys), 2};
  lpgram::validate(g);
  return g;
}

// Axiom s(1,1) with a hidden coordinate that a unary rule must clear before
// the vector counts.  Language {(1)}.
inline LBvassam s4() {
  BvassamSystem sys;
  sys.states = {"s"};
  sys.visible_dim = 1;
  sys.full_dim = 2;
  sys.axioms = {{0, {1, 1}}};
  sys.unary = {{0, 0, {0, 1}, {0, 0}}};
  sys.accepting = 0;
  LBvassam g{std::move(sys), 2};
  lpgram::validate(g);
  return g;
}

// A unary rule but no axioms.  Empty language.
inline LBvassam s5() {
  BvassamSystem sys;
  sys.states = {"s"};
  sys.visible_dim = 1;
  sys.full_dim = 1;
  sys.unary = {{0, 0, {0}, {1}}};
  sys.accepting = 0;
  LBvassam g{std::move(sys), 2};
  lpgram::validate(g);
  return g;
}

inline std::vector<std::pair<std::string, LBvassam>> bundled_systems() {
  std::vector<std::pair<std::string, LBvassam>> out;
  out.emplace_back("s1", s1());
  out.emplace_back("s2", s2());
  out.emplace_back("s3", s3());
  out.emplace_back("s4", s4());
  out.emplace_back("s5", s5());
  return out;
}

inline LpGrammar make_grammar(std::vector<std::string> alphabet,
                              std::vector<std::pair<std::string, const char*>> lex,
                              const char* distinguished) {
  LpGrammar g;
  g.alphabet = std::move(alphabet);
  for (auto& [sym, text] : lex)
    g.lexicon.emplace_back(sym, lpgram::parse_type(text));
  g.distinguished = lpgram::parse_type(distinguished);
  lpgram::validate(g);
  return g;
}

// Language {{a}}.
inline LpGrammar g1() { return make_grammar({"a"}, {{"a", "s"}}, "s"); }

// Language up to length 4: {{a,b}}.
inline LpGrammar g2() {
  return make_grammar({"a", "b"}, {{"a", "p"}, {"b", "s/p"}}, "s");
}

// Product on the noun side: {a,b} is the shortest member.
inline LpGrammar g3() {
  return make_grammar({"a", "b"}, {{"a", "p*p"}, {"b", "s/p/p"}}, "s");
}

// Two arguments filled by separate occurrences: shortest member {a,a,b}.
inline LpGrammar g4() {
  return make_grammar({"a", "b"}, {{"a", "p"}, {"b", "s/p/p"}}, "s");
}

inline std::vector<std::pair<std::string, LpGrammar>> bundled_grammars() {
  std::vector<std::pair<std::string, LpGrammar>> out;
  out.emplace_back("g1", g1());
  out.emplace_back("g2", g2());
  out.emplace_back("g3", g3());
  out.emplace_back("g4", g4());
  return out;
}

}  // namespace fixtures
