#include <algorithm>
#include <functional>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "lpgram/grammar.hpp"
#include "lpgram/parse.hpp"
#include "lpgram/proof.hpp"
#include "lpgram/prover.hpp"

using namespace lpgram;

namespace {

Word word(std::initializer_list<std::pair<const char*, std::uint32_t>> items) {
  Word w;
  for (auto& [sym, n] : items) w[sym] = n;
  return w;
}

}  // namespace

TEST_CASE("membership on the bundled grammars") {
  Prover pr;
  CHECK(is_member(fixtures::g1(), word({{"a", 1}}), pr));
  CHECK_FALSE(is_member(fixtures::g1(), word({{"a", 2}}), pr));

  LpGrammar g2 = fixtures::g2();
  CHECK(is_member(g2, word({{"a", 1}, {"b", 1}}), pr));
  CHECK_FALSE(is_member(g2, word({{"a", 1}}), pr));
  CHECK_FALSE(is_member(g2, word({{"b", 1}}), pr));
  CHECK_FALSE(is_member(g2, word({{"a", 2}, {"b", 1}}), pr));

  CHECK(is_member(fixtures::g3(), word({{"a", 1}, {"b", 1}}), pr));
  CHECK_FALSE(is_member(fixtures::g3(), word({{"a", 2}, {"b", 2}}), pr));

  CHECK(is_member(fixtures::g4(), word({{"a", 2}, {"b", 1}}), pr));
  CHECK_FALSE(is_member(fixtures::g4(), word({{"a", 1}, {"b", 1}}), pr));
}

TEST_CASE("words outside the alphabet are rejected") {
  Prover pr;
  CHECK_THROWS_AS(is_member(fixtures::g1(), word({{"z", 1}}), pr),
                  std::invalid_argument);
  // a zero count is not an occurrence
  CHECK(is_member(fixtures::g1(), word({{"a", 1}, {"z", 0}}), pr));
}

TEST_CASE("membership witnesses carry the chosen types and a checked proof") {
  Prover pr;
  LpGrammar g = fixtures::g4();
  auto w = member(g, word({{"a", 2}, {"b", 1}}), pr);
  REQUIRE(w.has_value());
  TypeMultiset expect{parse_type("p"), parse_type("p"), parse_type("s/p/p")};
  CHECK(w->types == expect);
  REQUIRE(w->proof != nullptr);
  CHECK(check_proof(w->proof));
  CHECK(w->proof->conclusion == Sequent(w->types, g.distinguished));

  CHECK_FALSE(member(g, word({{"a", 1}, {"b", 1}}), pr).has_value());
}

TEST_CASE("witness proofs respect subtype polarity") {
  Prover pr;
  for (auto& [name, g] : fixtures::bundled_grammars()) {
    CAPTURE(name);
    SubtypeSets st = subtype_sets(g);
    for (const Word& w : enumerate_language(g, 3, pr)) {
      auto wit = member(g, w, pr);
      REQUIRE(wit.has_value());
      std::function<void(const ProofPtr&)> walk = [&](const ProofPtr& node) {
        bool succ_known = st.positive.count(node->conclusion.succedent()) ||
                          st.negative.count(node->conclusion.succedent());
        if (succ_known)
          CHECK(st.positive.count(node->conclusion.succedent()) == 1);
        for (const auto& [member_type, count] :
             node->conclusion.antecedent().items()) {
          bool ante_known = st.positive.count(member_type) ||
                            st.negative.count(member_type);
          if (ante_known) CHECK(st.negative.count(member_type) == 1);
        }
        for (const auto& q : node->premises) walk(q);
      };
      walk(wit->proof);
    }
  }
}

TEST_CASE("subtype polarity closure") {
  {
    LpGrammar g = fixtures::make_grammar({"a"}, {{"a", "p"}}, "p");
    SubtypeSets st = subtype_sets(g);
    CHECK(st.positive.size() == 1);
    CHECK(st.negative.size() == 1);
    CHECK(st.positive.count(parse_type("p")) == 1);
    CHECK(st.negative.count(parse_type("p")) == 1);
  }
  {
    LpGrammar g = fixtures::make_grammar({"a"}, {{"a", "q/p"}}, "q");
    SubtypeSets st = subtype_sets(g);
    CHECK(st.negative ==
          TypeSet{parse_type("q/p"), parse_type("q")});
    CHECK(st.positive == TypeSet{parse_type("q"), parse_type("p")});
  }
  {
    LpGrammar g = fixtures::make_grammar({"a"}, {{"a", "(p*r)/q"}}, "s");
    SubtypeSets st = subtype_sets(g);
    CHECK(st.negative == TypeSet{parse_type("(p*r)/q"), parse_type("p*r"),
                                 parse_type("p"), parse_type("r")});
    CHECK(st.positive == TypeSet{parse_type("s"), parse_type("q")});
  }
}

TEST_CASE("language enumeration is graded and exact") {
  Prover pr;
  CHECK(enumerate_language(fixtures::g1(), 2, pr) ==
        std::vector<Word>{word({{"a", 1}})});
  CHECK(enumerate_language(fixtures::g2(), 4, pr) ==
        std::vector<Word>{word({{"a", 1}, {"b", 1}})});
  CHECK(enumerate_language(fixtures::g3(), 4, pr) ==
        std::vector<Word>{word({{"a", 1}, {"b", 1}})});
  CHECK(enumerate_language(fixtures::g4(), 4, pr) ==
        std::vector<Word>{word({{"a", 2}, {"b", 1}})});
  CHECK_THROWS_AS(enumerate_language(fixtures::g1(), 0, pr),
                  std::invalid_argument);
}

TEST_CASE("enumeration order is by length then count vector") {
  Prover pr;
  LpGrammar g = fixtures::make_grammar(
      {"a", "b"}, {{"a", "s"}, {"b", "s"}, {"b", "p"}, {"a", "s/p"}}, "s");
  // members: every single letter, and {a,b} via s/p with p
  auto words = enumerate_language(g, 2, pr);
  REQUIRE(words.size() >= 3);
  CHECK(words[0] == word({{"b", 1}}));
  CHECK(words[1] == word({{"a", 1}}));
  for (std::size_t i = 1; i < words.size(); ++i)
    CHECK(word_length(words[i - 1]) <= word_length(words[i]));
}

TEST_CASE("membership matches enumeration") {
  Prover pr;
  for (auto& [name, g] : fixtures::bundled_grammars()) {
    CAPTURE(name);
    auto language = enumerate_language(g, 3, pr);
    for (std::uint32_t ca = 0; ca <= 3; ++ca)
      for (std::uint32_t cb = 0; cb + ca <= 3; ++cb) {
        if (ca + cb == 0) continue;
        Word w;
        if (ca) w["a"] = ca;
        if (cb) w["b"] = cb;
        if (g.alphabet.size() < 2 && cb) continue;
        bool enumerated =
            std::find(language.begin(), language.end(), w) != language.end();
        CHECK(is_member(g, w, pr) == enumerated);
      }
  }
}

TEST_CASE("count vectors round-trip through words") {
  LpGrammar g = fixtures::g2();
  CHECK(parikh(g, word({{"a", 2}, {"b", 1}})) ==
        std::vector<std::uint64_t>{2, 1});
  CHECK(inverse_parikh(g, {0, 1}) == word({{"b", 1}}));
  CHECK(inverse_parikh(g, {2, 1}) == word({{"a", 2}, {"b", 1}}));
  CHECK(parikh(g, inverse_parikh(g, {3, 2})) ==
        std::vector<std::uint64_t>{3, 2});
  CHECK(inverse_parikh(g, {0, 0}).empty());
  CHECK_THROWS_AS(inverse_parikh(g, {1}), std::invalid_argument);
  CHECK_THROWS_AS(parikh(g, word({{"z", 1}})), std::invalid_argument);
}
