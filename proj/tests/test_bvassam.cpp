#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "lpgram/bvassam.hpp"

using namespace lpgram;

TEST_CASE("vector helpers") {
  CHECK(vec_size({2, 3}) == 5);
  CHECK(vec_add({1, 2}, {3, 0}) == Vec{4, 2});
  CHECK(vec_sub({3, 1}, {1, 1}) == Vec{2, 0});
  CHECK_FALSE(vec_sub({1, 0}, {0, 1}).has_value());
  CHECK(vec_leq({1, 1}, {2, 1}));
  CHECK_FALSE(vec_leq({1, 2}, {2, 1}));
  CHECK(pad_vector({4, 2}, 5) == Vec{4, 2, 0, 0, 0});
  CHECK(vec_to_string({4, 2}) == "(4, 2)");
}

TEST_CASE("system validation rejects malformed inputs") {
  auto broken = [](auto mutate) {
    BvassamSystem sys;
    sys.states = {"s", "q"};
    sys.visible_dim = 1;
    sys.full_dim = 2;
    sys.axioms = {{1, {1, 0}}};
    sys.unary = {{0, 1, {0, 0}, {0, 1}}};
    sys.binary = {{0, 1, 1}};
    sys.accepting = 0;
    mutate(sys);
    CHECK_THROWS_AS(validate(LBvassam{std::move(sys), 1}),
                    std::invalid_argument);
  };
  broken([](BvassamSystem& s) { s.states.clear(); });
  broken([](BvassamSystem& s) { s.states = {"s", "s"}; });
  broken([](BvassamSystem& s) { s.visible_dim = 3; });
  broken([](BvassamSystem& s) { s.accepting = 2; });
  broken([](BvassamSystem& s) { s.axioms[0].state = 9; });
  broken([](BvassamSystem& s) { s.axioms[0].vec = {1}; });
  broken([](BvassamSystem& s) { s.unary[0].source = 7; });
  broken([](BvassamSystem& s) { s.unary[0].delta1 = {1}; });
  broken([](BvassamSystem& s) { s.unary[0].delta2 = {1, 2, 3}; });
  broken([](BvassamSystem& s) { s.binary[0].left = 4; });

  BvassamSystem ok;
  ok.states = {"s"};
  ok.visible_dim = 0;
  ok.full_dim = 0;
  ok.axioms = {{0, {}}};
  ok.accepting = 0;
  CHECK_THROWS_AS(validate(LBvassam{ok, 0}), std::invalid_argument);
  CHECK_NOTHROW(validate(LBvassam{std::move(ok), 1}));
}

TEST_CASE("rule application arithmetic") {
  LBvassam g = fixtures::s2();
  const BvassamSystem& sys = g.system;
  BvDerivPtr ax = make_axiom_node(sys, 0);
  CHECK(ax->fact == Fact{0, {1, 0}});
  CHECK(derivation_size(ax) == 0);

  BvDerivPtr step = apply_unary(sys, 0, ax);
  CHECK(step->fact == Fact{0, {0, 1}});
  CHECK(derivation_size(step) == 1);

  // the rule consumes a unit of the first coordinate, so it cannot fire again
  CHECK_THROWS_AS(apply_unary(sys, 0, step), std::invalid_argument);
  CHECK_THROWS_AS(make_axiom_node(sys, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_unary(sys, 3, ax), std::invalid_argument);
}

TEST_CASE("binary application adds vectors") {
  LBvassam g = fixtures::s3();
  const BvassamSystem& sys = g.system;
  BvDerivPtr leaf = make_axiom_node(sys, 0);
  BvDerivPtr root = apply_binary(sys, 0, leaf, leaf);
  CHECK(root->fact == Fact{0, {2}});
  CHECK(derivation_size(root) == 1);
  CHECK(check_derivation(sys, root));
  // children must carry the states the rule names
  CHECK_THROWS_AS(apply_binary(sys, 0, root, leaf), std::invalid_argument);
}

TEST_CASE("shared subtrees count once per occurrence") {
  BvassamSystem sys;
  sys.states = {"s"};
  sys.visible_dim = 1;
  sys.full_dim = 1;
  sys.axioms = {{0, {1}}};
  sys.binary = {{0, 0, 0}};
  sys.accepting = 0;
  validate(LBvassam{sys, 1});
  BvDerivPtr leaf = make_axiom_node(sys, 0);
  BvDerivPtr pair = apply_binary(sys, 0, leaf, leaf);
  BvDerivPtr quad = apply_binary(sys, 0, pair, pair);
  CHECK(quad->fact == Fact{0, {4}});
  CHECK(derivation_size(quad) == 3);
  CHECK(check_derivation(sys, quad));
}

TEST_CASE("derivation checking catches tampering") {
  LBvassam g = fixtures::s2();
  const BvassamSystem& sys = g.system;
  BvDerivPtr good = apply_unary(sys, 0, make_axiom_node(sys, 0));
  REQUIRE(check_derivation(sys, good));

  auto tamper = [&](auto mutate) {
    BvDerivation copy = *good;
    mutate(copy);
    CHECK_FALSE(check_derivation(
        sys, std::make_shared<const BvDerivation>(std::move(copy))));
  };
  tamper([](BvDerivation& d) { d.fact.vec = {1, 1}; });
  tamper([](BvDerivation& d) { d.fact.state = 9; });
  tamper([](BvDerivation& d) { d.rule_index = 5; });
  tamper([](BvDerivation& d) { d.child_a = nullptr; });
  tamper([](BvDerivation& d) { d.kind = BvDerivation::Kind::Axiom; });
}
