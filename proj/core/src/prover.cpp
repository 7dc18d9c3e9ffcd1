#include "lpgram/prover.hpp"

#include <stdexcept>

#include "lpgram/error.hpp"

namespace lpgram {
namespace {

// Odometer over sub-multisets of `items`: c[i] copies of items[i].first go to
// the first half of the split.  The first coordinate advances fastest.
struct SplitOdometer {
  const std::vector<TypeMultiset::Item>& items;
  std::vector<std::uint32_t> c;

  explicit SplitOdometer(const std::vector<TypeMultiset::Item>& it)
      : items(it), c(it.size(), 0) {}

  bool advance() {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < items[i].second) {
        ++c[i];
        return true;
      }
      c[i] = 0;
    }
    return false;
  }

  bool at_full() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != items[i].second) return false;
    return true;
  }

  void halves(TypeMultiset& first, TypeMultiset& second) const {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i]) first.add(items[i].first, c[i]);
      if (items[i].second > c[i]) second.add(items[i].first, items[i].second - c[i]);
    }
  }
};

}  // namespace

Prover::Prover(ProveOptions opts)
    : max_expansions_(opts.max_expansions), witnesses_(opts.witnesses) {}

bool Prover::provable(const Sequent& s) {
  expansions_ = 0;
  return decide(s).ok;
}

ProofPtr Prover::prove(const Sequent& s) {
  if (!witnesses_)
    throw std::logic_error("prover built without witness support");
  expansions_ = 0;
  return decide(s).proof;
}

void Prover::bump() {
  ++expansions_;
  if (max_expansions_ && expansions_ > max_expansions_)
    throw BudgetExceeded("proof search exceeded the expansion budget");
}

Prover::Entry Prover::decide(const Sequent& s) {
  if (s.antecedent().total() == 1 && s.antecedent().count(s.succedent()) == 1)
    return {true, witnesses_ ? make_axiom(s.succedent()) : nullptr};
  // Unbalanced sequents are never derivable; dropping them here keeps the
  // memo to the interesting fraction of the search space.
  if (!is_balanced(s)) return {false, nullptr};
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  bump();

  Entry result{false, nullptr};
  TypeRef prod = nullptr;
  for (const auto& [t, n] : s.antecedent().items()) {
    (void)n;
    if (t->is_prod()) {
      prod = t;
      break;
    }
  }
  if (prod) {
    Entry sub = decide(invert_prod_left(s, prod));
    if (sub.ok) {
      result.ok = true;
      if (witnesses_)
        result.proof = std::make_shared<Proof>(
            Rule::ProdLeft, s, prod, std::vector<ProofPtr>{sub.proof});
    }
  } else if (s.succedent()->is_div()) {
    Entry sub = decide(invert_div_right(s));
    if (sub.ok) {
      result.ok = true;
      if (witnesses_)
        result.proof = std::make_shared<Proof>(
            Rule::DivRight, s, s.succedent(), std::vector<ProofPtr>{sub.proof});
    }
  } else {
    result = search_div_left(s);
    if (!result.ok && s.succedent()->is_prod()) result = search_prod_right(s);
  }

  memo_.emplace(s, result);
  return result;
}

Prover::Entry Prover::search_div_left(const Sequent& s) {
  for (const auto& [ca, n] : s.antecedent().items()) {
    (void)n;
    if (!ca->is_div()) continue;
    TypeMultiset ctx = s.antecedent();
    ctx.remove_one(ca);
    SplitOdometer odo(ctx.items());
    // The minor premise needs a nonempty antecedent, so start past the empty
    // assignment.
    while (odo.advance()) {
      TypeMultiset minor_ante, rest;
      odo.halves(minor_ante, rest);
      Sequent minor(std::move(minor_ante), ca->right());
      Entry ml = decide(minor);
      if (!ml.ok) continue;
      rest.add(ca->left());
      Sequent major(std::move(rest), s.succedent());
      Entry mr = decide(major);
      if (!mr.ok) continue;
      Entry result{true, nullptr};
      if (witnesses_)
        result.proof = std::make_shared<Proof>(
            Rule::DivLeft, s, ca, std::vector<ProofPtr>{ml.proof, mr.proof});
      return result;
    }
  }
  return {false, nullptr};
}

Prover::Entry Prover::search_prod_right(const Sequent& s) {
  TypeRef ab = s.succedent();
  SplitOdometer odo(s.antecedent().items());
  while (odo.advance()) {
    if (odo.at_full()) break;  // both factors need a nonempty antecedent
    TypeMultiset left_ante, right_ante;
    odo.halves(left_ante, right_ante);
    Entry l = decide(Sequent(std::move(left_ante), ab->left()));
    if (!l.ok) continue;
    Entry r = decide(Sequent(std::move(right_ante), ab->right()));
    if (!r.ok) continue;
    Entry result{true, nullptr};
    if (witnesses_)
      result.proof = std::make_shared<Proof>(
          Rule::ProdRight, s, ab, std::vector<ProofPtr>{l.proof, r.proof});
    return result;
  }
  return {false, nullptr};
}

}  // namespace lpgram
