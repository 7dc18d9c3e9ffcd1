#include "lpgram/proof.hpp"

#include <stdexcept>

namespace lpgram {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Axiom: return "axiom";
    case Rule::DivLeft: return "div-left";
    case Rule::DivRight: return "div-right";
    case Rule::ProdLeft: return "prod-left";
    case Rule::ProdRight: return "prod-right";
  }
  return "?";
}

ProofPtr make_axiom(TypeRef t) {
  TypeMultiset m;
  m.add(t);
  return std::make_shared<Proof>(Rule::Axiom, Sequent(std::move(m), t), nullptr,
                                 std::vector<ProofPtr>{});
}

std::size_t proof_size(const ProofPtr& p) {
  if (!p) return 0;
  std::size_t n = p->rule == Rule::Axiom ? 0 : 1;
  for (const auto& q : p->premises) n += proof_size(q);
  return n;
}

namespace {

bool check_node(const Proof& node) {
  const Sequent& c = node.conclusion;
  switch (node.rule) {
    case Rule::Axiom: {
      if (!node.premises.empty() || node.principal) return false;
      return c.antecedent().total() == 1 &&
             c.antecedent().count(c.succedent()) == 1;
    }
    case Rule::ProdLeft: {
      // Gamma, A, B -> C  yields  Gamma, A*B -> C
      if (node.premises.size() != 1 || !node.principal) return false;
      TypeRef ab = node.principal;
      if (!ab->is_prod() || c.antecedent().count(ab) == 0) return false;
      TypeMultiset want = c.antecedent();
      want.remove_one(ab);
      want.add(ab->left());
      want.add(ab->right());
      const Sequent& prem = node.premises[0]->conclusion;
      return prem.succedent() == c.succedent() && prem.antecedent() == want;
    }
    case Rule::DivRight: {
      // Gamma, A -> C  yields  Gamma -> C/A
      if (node.premises.size() != 1 || !node.principal) return false;
      TypeRef ca = node.principal;
      if (ca != c.succedent() || !ca->is_div()) return false;
      TypeMultiset want = c.antecedent();
      want.add(ca->right());
      const Sequent& prem = node.premises[0]->conclusion;
      return prem.succedent() == ca->left() && prem.antecedent() == want;
    }
    case Rule::DivLeft: {
      // Pi -> A  and  Delta, C -> D  yield  Pi, Delta, C/A -> D
      if (node.premises.size() != 2 || !node.principal) return false;
      TypeRef ca = node.principal;
      if (!ca->is_div() || c.antecedent().count(ca) == 0) return false;
      const Sequent& minor = node.premises[0]->conclusion;
      const Sequent& major = node.premises[1]->conclusion;
      if (minor.succedent() != ca->right()) return false;
      if (major.succedent() != c.succedent()) return false;
      if (major.antecedent().count(ca->left()) == 0) return false;
      TypeMultiset want = minor.antecedent().united(major.antecedent());
      want.remove_one(ca->left());
      want.add(ca);
      return want == c.antecedent();
    }
    case Rule::ProdRight: {
      // Gamma -> A  and  Delta -> B  yield  Gamma, Delta -> A*B
      if (node.premises.size() != 2 || !node.principal) return false;
      TypeRef ab = node.principal;
      if (ab != c.succedent() || !ab->is_prod()) return false;
      const Sequent& lhs = node.premises[0]->conclusion;
      const Sequent& rhs = node.premises[1]->conclusion;
      if (lhs.succedent() != ab->left() || rhs.succedent() != ab->right())
        return false;
      return lhs.antecedent().united(rhs.antecedent()) == c.antecedent();
    }
  }
  return false;
}

}  // namespace

bool check_proof(const ProofPtr& p) {
  if (!p) return false;
  if (!check_node(*p)) return false;
  for (const auto& q : p->premises)
    if (!check_proof(q)) return false;
  return true;
}

Sequent cut_conclusion(const Sequent& left, const Sequent& right) {
  if (right.antecedent().count(left.succedent()) == 0)
    throw std::invalid_argument("cut type missing from right antecedent");
  TypeMultiset ante = right.antecedent();
  ante.remove_one(left.succedent());
  ante = ante.united(left.antecedent());
  return Sequent(std::move(ante), right.succedent());
}

}  // namespace lpgram
