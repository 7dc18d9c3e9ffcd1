#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "lpgram/sequent.hpp"

namespace lpgram {

enum class Rule : uint8_t { Axiom, DivLeft, DivRight, ProdLeft, ProdRight };

std::string_view rule_name(Rule r);

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// One node of a derivation tree.  `principal` is the connective occurrence the
// rule acts on: the antecedent type for DivLeft/ProdLeft, the succedent for
// DivRight/ProdRight, null for Axiom.  Premise order is fixed per rule:
// DivLeft has the minor premise (deriving the denominator) first, then the
// major premise; ProdRight has the left factor's premise first.
struct Proof {
  Rule rule;
  Sequent conclusion;
  TypeRef principal;
  std::vector<ProofPtr> premises;

  Proof(Rule r, Sequent c, TypeRef p, std::vector<ProofPtr> ps)
      : rule(r),
        conclusion(std::move(c)),
        principal(p),
        premises(std::move(ps)) {}
};

ProofPtr make_axiom(TypeRef t);

// Number of rule applications in the tree.  Axiom leaves contribute nothing,
// so a bare axiom has size 0 and each inference adds 1.
std::size_t proof_size(const ProofPtr& p);

// Verifies every node instantiates its rule schema correctly (premise count,
// principal occurrence, premise sequents).  Returns false on any violation.
bool check_proof(const ProofPtr& p);

// Cut composition: given proofs of (Gamma -> A) and (Delta, A -> C), returns
// the conclusion (Gamma, Delta -> C).  Throws std::invalid_argument when the
// left succedent does not occur in the right antecedent.
Sequent cut_conclusion(const Sequent& left, const Sequent& right);

}  // namespace lpgram
