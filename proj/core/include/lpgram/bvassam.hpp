#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lpgram {

// Resource vectors are componentwise-nonnegative counters.  The first k
// coordinates of a K-dimensional vector are the visible ones; the remaining
// K - k are auxiliary memory.
using Vec = std::vector<std::uint64_t>;
using StateId = std::uint32_t;

std::uint64_t vec_size(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
// Componentwise difference, or nullopt if any coordinate would go negative.
std::optional<Vec> vec_sub(const Vec& a, const Vec& b);
bool vec_leq(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

// Pads a k-dimensional visible vector with zero memory coordinates.
Vec pad_vector(const Vec& visible, std::size_t full_dim);

struct BvAxiom {
  StateId state;
  Vec vec;
};

// target(w + delta2) derivable from source(w + delta1): delta1 is consumed
// from the premise, delta2 added to the conclusion.
struct BvUnary {
  StateId target;
  StateId source;
  Vec delta1;
  Vec delta2;
};

// target(x + y) derivable from left(x) and right(y).
struct BvBinary {
  StateId target;
  StateId left;
  StateId right;
};

struct BvassamSystem {
  std::vector<std::string> states;
  std::size_t visible_dim = 0;  // k
  std::size_t full_dim = 0;     // K
  std::vector<BvAxiom> axioms;
  std::vector<BvUnary> unary;
  std::vector<BvBinary> binary;
  StateId accepting = 0;
};

void validate(const BvassamSystem& sys);

// A system together with the linear bound C on derivation size per unit of
// accepted vector size.
struct LBvassam {
  BvassamSystem system;
  std::uint64_t linear_bound = 1;
};

void validate(const LBvassam& g);

struct Fact {
  StateId state;
  Vec vec;
};

bool operator==(const Fact& a, const Fact& b);
bool operator!=(const Fact& a, const Fact& b);
std::string fact_to_string(const BvassamSystem& sys, const Fact& f);

struct BvDerivation;
using BvDerivPtr = std::shared_ptr<const BvDerivation>;

// Derivation tree node.  Shared subtrees are allowed; size and validity
// treat each occurrence as a separate copy.
struct BvDerivation {
  enum class Kind : std::uint8_t { Axiom, Unary, Binary };
  Kind kind;
  std::size_t rule_index;  // into axioms, unary or binary by kind
  Fact fact;
  BvDerivPtr child_a;  // unary premise, or left premise of a binary rule
  BvDerivPtr child_b;  // right premise of a binary rule
};

BvDerivPtr make_axiom_node(const BvassamSystem& sys, std::size_t axiom_index);
// Throw std::invalid_argument when the rule does not apply to the premises.
BvDerivPtr apply_unary(const BvassamSystem& sys, std::size_t rule_index,
                       BvDerivPtr premise);
BvDerivPtr apply_binary(const BvassamSystem& sys, std::size_t rule_index,
                        BvDerivPtr left, BvDerivPtr right);

// Number of rule applications; axiom leaves contribute nothing.
std::uint64_t derivation_size(const BvDerivPtr& d);
// Checks states, rule indices, vector arithmetic and the stored facts.
bool check_derivation(const BvassamSystem& sys, const BvDerivPtr& d);

}  // namespace lpgram
